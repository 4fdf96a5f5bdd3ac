#include "sabotage/semantics.hpp"

#include <algorithm>
#include <optional>

#include "sabotage/syntax.hpp"

namespace sabotage {

namespace {

class Evaluator {
 public:
  Evaluator(const KripkeFrame& frame, Valuation val)
      : frame_(frame), val_(std::move(val)), n_(frame.size()), all_(frame.all_worlds()) {}

  Valuation& valuation() { return val_; }

  int world_of(const std::string& nominal) const {
    auto it = val_.noms.find(nominal);
    if (it == val_.noms.end()) throw EvalError("uninterpreted nominal '" + nominal + "'");
    return it->second;
  }

  EdgeMask labels(const EdgeLabelSet& s) const {
    EdgeMask m = 0;
    for (const auto& [a, b] : s) m |= EdgeMask{1} << frame_.edge_index(world_of(a), world_of(b));
    return m;
  }

  WorldSet successors(EdgeMask rel, int w) const {
    return static_cast<WorldSet>((rel >> (w * n_)) & all_);
  }

  WorldSet predecessors(EdgeMask rel, int w) const {
    WorldSet out = 0;
    for (int v = 0; v < n_; ++v) {
      if ((rel >> frame_.edge_index(v, w)) & 1u) out |= WorldSet{1} << v;
    }
    return out;
  }

  WorldSet box_over(EdgeMask rel, WorldSet target, bool converse) const {
    WorldSet out = 0;
    for (int w = 0; w < n_; ++w) {
      WorldSet next = converse ? predecessors(rel, w) : successors(rel, w);
      if ((next & ~target) == 0) out |= WorldSet{1} << w;
    }
    return out;
  }

  WorldSet dia_over(EdgeMask rel, WorldSet target, bool converse) const {
    WorldSet out = 0;
    for (int w = 0; w < n_; ++w) {
      WorldSet next = converse ? predecessors(rel, w) : successors(rel, w);
      if (next & target) out |= WorldSet{1} << w;
    }
    return out;
  }

  // `current` is the relation the contextual modalities read.
  WorldSet ext(const Formula& f, EdgeMask current) {
    switch (f.kind()) {
      case Kind::Bot: return 0;
      case Kind::Top: return all_;
      case Kind::Prop: {
        auto it = val_.props.find(f.name());
        if (it == val_.props.end()) throw EvalError("uninterpreted proposition '" + f.name() + "'");
        return it->second & all_;
      }
      case Kind::Nom: return WorldSet{1} << world_of(f.name());
      case Kind::Not: return all_ & ~ext(f.child(), current);
      case Kind::And: return ext(f.left(), current) & ext(f.right(), current);
      case Kind::Or: return ext(f.left(), current) | ext(f.right(), current);
      case Kind::Imp: return (all_ & ~ext(f.left(), current)) | ext(f.right(), current);
      case Kind::Iff: {
        WorldSet a = ext(f.left(), current);
        WorldSet b = ext(f.right(), current);
        return all_ & ~(a ^ b);
      }
      case Kind::Box: return box_over(current, ext(f.child(), current), false);
      case Kind::Dia: return dia_over(current, ext(f.child(), current), false);
      case Kind::SBox: {
        WorldSet acc = all_;
        for (EdgeMask rest = current; rest && acc; rest &= rest - 1) {
          acc &= ext(f.child(), current & ~(rest & (~rest + 1)));
        }
        return acc;
      }
      case Kind::SDia: {
        WorldSet acc = 0;
        for (EdgeMask rest = current; rest && acc != all_; rest &= rest - 1) {
          acc |= ext(f.child(), current & ~(rest & (~rest + 1)));
        }
        return acc;
      }
      case Kind::LBox:
        return box_over(frame_.edges() & ~labels(f.labels()), ext(f.child(), current), false);
      case Kind::LDia:
        return dia_over(frame_.edges() & ~labels(f.labels()), ext(f.child(), current), false);
      case Kind::InvLBox:
        return box_over(frame_.edges() & ~labels(f.labels()), ext(f.child(), current), true);
      case Kind::InvLDia:
        return dia_over(frame_.edges() & ~labels(f.labels()), ext(f.child(), current), true);
      case Kind::GBox: return ext(f.child(), current) == all_ ? all_ : 0;
      case Kind::GDia: return ext(f.child(), current) != 0 ? all_ : 0;
      case Kind::ForallNom:
      case Kind::ExistsNom: {
        const bool universal = f.is(Kind::ForallNom);
        WorldSet acc = universal ? all_ : 0;
        with_each_world(f.name(), [&] {
          WorldSet e = ext(f.child(), current);
          acc = universal ? (acc & e) : (acc | e);
          return universal ? acc != 0 : acc != all_;
        });
        return acc;
      }
    }
    return 0;
  }

  // Runs `body` with nominal `name` bound to each world in turn; `body`
  // returns false to stop early. The previous binding is restored.
  template <typename Body>
  void with_each_world(const std::string& name, Body&& body) {
    auto it = val_.noms.find(name);
    std::optional<int> saved;
    if (it != val_.noms.end()) saved = it->second;
    for (int w = 0; w < n_; ++w) {
      val_.noms[name] = w;
      if (!body()) break;
    }
    if (saved) {
      val_.noms[name] = *saved;
    } else {
      val_.noms.erase(name);
    }
  }

  bool holds(const Ineq& i) {
    WorldSet lhs = ext(i.lhs, frame_.edges() & ~labels(i.sup));
    if (lhs == 0) return true;
    WorldSet rhs = ext(i.rhs, frame_.edges() & ~labels(i.sub));
    return (lhs & ~rhs) == 0;
  }

  bool holds(const Mega& m) {
    if (const auto* x = std::get_if<Ineq>(&m.node)) return holds(*x);
    if (const auto* x = std::get_if<MegaConj>(&m.node)) return holds(*x->left) && holds(*x->right);
    const auto& g = std::get<MegaGuard>(m.node);
    const EdgeMask rel = frame_.edges() & ~labels(g.ctx);
    bool ok = true;
    with_each_world(g.from, [&] {
      const int w = val_.noms[g.from];
      with_each_world(g.to, [&] {
        const int v = val_.noms[g.to];
        if ((rel >> frame_.edge_index(w, v)) & 1u) ok = holds(*g.body);
        return ok;
      });
      return ok;
    });
    return ok;
  }

  bool holds(const UQIneq& u, std::size_t k = 0) {
    if (k == u.binders.size()) return holds(u.body);
    bool ok = true;
    with_each_world(u.binders[k], [&] {
      ok = holds(u, k + 1);
      return ok;
    });
    return ok;
  }

  bool holds(const QuasiUQ& q) {
    for (const auto& p : q.premises) {
      if (!holds(p)) return true;
    }
    return holds(q.conclusion);
  }

  bool holds(const Statement& s) {
    return std::visit([this](const auto& x) { return holds(x); }, s);
  }

 private:
  const KripkeFrame& frame_;
  Valuation val_;
  int n_;
  WorldSet all_;
};

}  // namespace

EdgeMask label_edges(const KripkeFrame& frame, const Valuation& val, const EdgeLabelSet& s) {
  return Evaluator(frame, val).labels(s);
}

WorldSet extension(const KripkeFrame& frame, const Valuation& val, const DeletionContext& ctx,
                   const Formula& f) {
  Evaluator ev(frame, val);
  return ev.ext(f, frame.edges() & ~ctx.deleted);
}

bool satisfies(const KripkeFrame& frame, const Valuation& val, const DeletionContext& ctx, int w,
               const Formula& f) {
  if (w < 0 || w >= frame.size()) throw std::out_of_range("world outside frame");
  return (extension(frame, val, ctx, f) >> w) & 1u;
}

bool eval_statement(const KripkeFrame& frame, const Valuation& val, const Statement& s) {
  Evaluator ev(frame, val);
  return ev.holds(s);
}

bool frame_valid(const KripkeFrame& frame, const Statement& s, std::vector<std::string> vars) {
  std::ranges::sort(vars);
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  const auto free = free_nominals(s);
  const std::vector<std::string> noms(free.begin(), free.end());
  const int n = frame.size();
  const int prop_bits = n * static_cast<int>(vars.size());
  if (prop_bits >= 63) throw std::invalid_argument("too many propositions to enumerate");

  Evaluator ev(frame, Valuation{});
  Valuation& val = ev.valuation();
  const std::uint64_t prop_count = std::uint64_t{1} << prop_bits;
  for (std::uint64_t bits = 0; bits < prop_count; ++bits) {
    // The first variable occupies the most significant slice, so the first
    // variable's subset changes slowest.
    for (std::size_t k = 0; k < vars.size(); ++k) {
      const int shift = n * static_cast<int>(vars.size() - 1 - k);
      val.props[vars[k]] = static_cast<WorldSet>((bits >> shift) & frame.all_worlds());
    }
    std::vector<int> worlds(noms.size(), 0);
    for (;;) {
      for (std::size_t k = 0; k < noms.size(); ++k) val.noms[noms[k]] = worlds[k];
      if (!ev.holds(s)) return false;
      std::size_t k = noms.size();
      while (k > 0 && ++worlds[k - 1] == n) worlds[--k] = 0;
      if (k == 0) break;
    }
  }
  return true;
}

bool frame_valid(const KripkeFrame& frame, const Statement& s) {
  auto ps = props(s);
  return frame_valid(frame, s, std::vector<std::string>(ps.begin(), ps.end()));
}

bool frame_valid(const KripkeFrame& frame, const Formula& f) {
  return frame_valid(frame, Statement{ineq(top(), f)});
}

}  // namespace sabotage
