#include <algorithm>

#include "sabotage/fol.hpp"

namespace sabotage {

CompiledFO::CompiledFO(const FOFormula& f) {
  std::map<std::string, int> slots;
  free_ = sabotage::free_names(f);
  for (const auto& n : free_) {
    slots.emplace(n, slot_count_);
    free_slots_.push_back(slot_count_++);
  }
  root_ = compile(f, slots);
}

int CompiledFO::compile(const FOFormula& f, std::map<std::string, int>& slots) {
  auto slot = [&](const std::string& name) {
    auto [it, fresh] = slots.emplace(name, slot_count_);
    if (fresh) ++slot_count_;
    return it->second;
  };
  Op op{f.kind(), -1, -1, {}};
  switch (f.kind()) {
    case FOKind::Eq:
    case FOKind::Rel:
      op.a = slot(f.terms()[0].name);
      op.b = slot(f.terms()[1].name);
      break;
    case FOKind::Pred: {
      auto it = std::find(preds_.begin(), preds_.end(), f.pred());
      if (it == preds_.end()) it = preds_.insert(preds_.end(), f.pred());
      op.a = static_cast<int>(it - preds_.begin());
      op.b = slot(f.terms()[0].name);
      break;
    }
    case FOKind::Forall:
    case FOKind::Exists:
      op.a = slot(f.terms()[0].name);
      op.kids.push_back(compile(f.child(), slots));
      break;
    default:
      for (const auto& c : f.children()) op.kids.push_back(compile(c, slots));
  }
  ops_.push_back(std::move(op));
  return static_cast<int>(ops_.size()) - 1;
}

namespace {

struct Machine {
  const std::vector<CompiledFO::Op>& ops;
  const KripkeFrame& frame;
  const std::vector<WorldSet>& preds;
  std::vector<int>& env;

  bool run(int k) {
    const auto& op = ops[static_cast<std::size_t>(k)];
    switch (op.kind) {
      case FOKind::Eq: return env[op.a] == env[op.b];
      case FOKind::Rel: return frame.has_edge(env[op.a], env[op.b]);
      case FOKind::Pred: return (preds[static_cast<std::size_t>(op.a)] >> env[op.b]) & 1u;
      case FOKind::Not: return !run(op.kids[0]);
      case FOKind::And:
        return std::all_of(op.kids.begin(), op.kids.end(), [&](int c) { return run(c); });
      case FOKind::Or:
        return std::any_of(op.kids.begin(), op.kids.end(), [&](int c) { return run(c); });
      case FOKind::Imp: return !run(op.kids[0]) || run(op.kids[1]);
      case FOKind::Forall:
      case FOKind::Exists: {
        const bool universal = op.kind == FOKind::Forall;
        const int saved = env[op.a];
        bool result = universal;
        for (int w = 0; w < frame.size(); ++w) {
          env[op.a] = w;
          if (run(op.kids[0]) != universal) {
            result = !universal;
            break;
          }
        }
        env[op.a] = saved;
        return result;
      }
    }
    return false;
  }
};

}  // namespace

bool CompiledFO::eval(const KripkeFrame& frame, const std::vector<WorldSet>& preds,
                      const std::vector<int>& free_values) const {
  if (preds.size() < preds_.size()) throw FOEvalError("missing predicate interpretation");
  if (free_values.size() < free_.size()) throw FOEvalError("missing value for a free name");
  std::vector<int> env(static_cast<std::size_t>(slot_count_), 0);
  for (std::size_t k = 0; k < free_.size(); ++k) {
    if (free_values[k] < 0 || free_values[k] >= frame.size()) throw FOEvalError("value outside the frame");
    env[static_cast<std::size_t>(free_slots_[k])] = free_values[k];
  }
  Machine m{ops_, frame, preds, env};
  return m.run(root_);
}

bool eval_fo(const KripkeFrame& frame, const Valuation& val, const std::map<std::string, int>& assignment,
             const FOFormula& f) {
  const CompiledFO c(f);
  std::vector<WorldSet> preds;
  for (const auto& p : c.predicates()) {
    auto it = val.props.find(p);
    if (it == val.props.end()) throw FOEvalError("uninterpreted predicate P_" + p);
    preds.push_back(it->second);
  }
  std::vector<int> values;
  for (const auto& n : c.free_names()) {
    if (auto it = assignment.find(n); it != assignment.end()) {
      values.push_back(it->second);
    } else if (auto jt = val.noms.find(n); jt != val.noms.end()) {
      values.push_back(jt->second);
    } else {
      throw FOEvalError("unbound name '" + n + "'");
    }
  }
  return c.eval(frame, preds, values);
}

std::optional<KripkeFrame> fo_counterexample(const FOFormula& a, const FOFormula& b, int max_worlds,
                                             const std::vector<std::string>& vars, int cap) {
  if (max_worlds < 1 || max_worlds > cap) throw std::invalid_argument("max_worlds outside [1, cap]");
  const CompiledFO ca(a);
  const CompiledFO cb(b);
  std::vector<std::string> names = ca.free_names();
  for (const auto& n : cb.free_names()) {
    if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
  }
  auto index_of = [](const std::vector<std::string>& all, const std::string& x) {
    auto it = std::find(all.begin(), all.end(), x);
    if (it == all.end()) throw std::invalid_argument("undeclared name '" + x + "'");
    return static_cast<std::size_t>(it - all.begin());
  };
  std::vector<std::size_t> pa, pb, fa, fb;
  for (const auto& p : ca.predicates()) pa.push_back(index_of(vars, p));
  for (const auto& p : cb.predicates()) pb.push_back(index_of(vars, p));
  for (const auto& n : ca.free_names()) fa.push_back(index_of(names, n));
  for (const auto& n : cb.free_names()) fb.push_back(index_of(names, n));

  for (int n = 1; n <= max_worlds; ++n) {
    const int bits = n * static_cast<int>(vars.size());
    if (bits >= 63) throw std::invalid_argument("too many predicates to enumerate");
    for (const auto& frame : enumerate_frames(n, cap)) {
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << bits); ++v) {
        std::vector<WorldSet> world_sets(vars.size());
        for (std::size_t k = 0; k < vars.size(); ++k) {
          world_sets[k] = static_cast<WorldSet>((v >> (n * static_cast<int>(vars.size() - 1 - k))) & frame.all_worlds());
        }
        std::vector<WorldSet> xa, xb;
        for (auto k : pa) xa.push_back(world_sets[k]);
        for (auto k : pb) xb.push_back(world_sets[k]);
        std::vector<int> worlds(names.size(), 0);
        for (;;) {
          std::vector<int> va, vb;
          for (auto k : fa) va.push_back(worlds[k]);
          for (auto k : fb) vb.push_back(worlds[k]);
          if (ca.eval(frame, xa, va) != cb.eval(frame, xb, vb)) return frame;
          std::size_t k = names.size();
          while (k > 0 && ++worlds[k - 1] == n) worlds[--k] = 0;
          if (k == 0) break;
        }
      }
    }
  }
  return std::nullopt;
}

bool fo_equiv_on_small_frames(const FOFormula& a, const FOFormula& b, int max_worlds,
                              const std::vector<std::string>& vars, int cap) {
  return !fo_counterexample(a, b, max_worlds, vars, cap).has_value();
}

}  // namespace sabotage
