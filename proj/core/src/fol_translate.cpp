#include "sabotage/fol.hpp"
#include "sabotage/syntax.hpp"

namespace sabotage {

Translator::Translator(const std::set<std::string>& taken) : taken_(taken) { taken_.insert("x"); }

FOTerm Translator::fresh_var() {
  for (;;) {
    std::string name = "y" + std::to_string(next_var_++);
    if (taken_.insert(name).second) return FOTerm::var(std::move(name));
  }
}

FOTerm Translator::nominal(const std::string& name) const {
  auto it = renamed_.find(name);
  if (it != renamed_.end() && !it->second.empty()) return FOTerm::nominal(it->second.back());
  return FOTerm::nominal(name);
}

FOTerm Translator::bind_nominal(const std::string& name, const std::set<std::string>& avoid) {
  std::string actual = name;
  if (in_scope_.contains(name) || avoid.contains(name)) {
    for (unsigned long k = 1;; ++k) {
      actual = name + "_" + std::to_string(k);
      if (!taken_.contains(actual) && !in_scope_.contains(actual) && !avoid.contains(actual)) break;
    }
  }
  taken_.insert(actual);
  in_scope_.insert(actual);
  renamed_[name].push_back(actual);
  return FOTerm::nominal(actual);
}

void Translator::unbind_nominal(const std::string& name) {
  auto& stack = renamed_.at(name);
  in_scope_.erase(stack.back());
  stack.pop_back();
}

Translator::Edges Translator::label_edges(const EdgeLabelSet& s) const {
  Edges out;
  for (const auto& [a, b] : s) out.emplace_back(nominal(a), nominal(b));
  return out;
}

std::vector<FOFormula> Translator::exclusions(const Edges& e, const FOTerm& a, const FOTerm& b) const {
  std::vector<FOFormula> out;
  for (const auto& [v, w] : e) out.push_back(fo_not(fo_and({fo_eq(a, v), fo_eq(b, w)})));
  return out;
}

FOFormula Translator::tr(const Formula& f, const FOTerm& x, const Edges& e) {
  auto step = [&](const FOTerm& from, const FOTerm& to, const Edges& excluded) {
    std::vector<FOFormula> parts{fo_rel(from, to)};
    for (auto& g : exclusions(excluded, from, to)) parts.push_back(std::move(g));
    return parts;
  };
  switch (f.kind()) {
    case Kind::Bot: return fo_neq(x, x);
    case Kind::Top: return fo_eq(x, x);
    case Kind::Nom: return fo_eq(x, nominal(f.name()));
    case Kind::Prop: return fo_pred(f.name(), x);
    case Kind::Not: return fo_not(tr(f.child(), x, e));
    case Kind::And: return fo_and({tr(f.left(), x, e), tr(f.right(), x, e)});
    case Kind::Or: return fo_or({tr(f.left(), x, e), tr(f.right(), x, e)});
    case Kind::Imp: return fo_imp(tr(f.left(), x, e), tr(f.right(), x, e));
    case Kind::Iff: {
      auto a = fo_imp(tr(f.left(), x, e), tr(f.right(), x, e));
      auto b = fo_imp(tr(f.right(), x, e), tr(f.left(), x, e));
      return fo_and({std::move(a), std::move(b)});
    }
    case Kind::Box:
    case Kind::Dia: {
      const FOTerm y = fresh_var();
      auto parts = step(x, y, e);
      if (f.is(Kind::Box)) return fo_forall(y, fo_imp(fo_and(std::move(parts)), tr(f.child(), y, e)));
      parts.push_back(tr(f.child(), y, e));
      return fo_exists(y, fo_and(std::move(parts)));
    }
    case Kind::SBox:
    case Kind::SDia: {
      const FOTerm y = fresh_var();
      const FOTerm z = fresh_var();
      auto parts = step(y, z, e);
      Edges grown = e;
      grown.emplace_back(y, z);
      if (f.is(Kind::SBox)) {
        return fo_forall(y, fo_forall(z, fo_imp(fo_and(std::move(parts)), tr(f.child(), x, grown))));
      }
      parts.push_back(tr(f.child(), x, grown));
      return fo_exists(y, fo_exists(z, fo_and(std::move(parts))));
    }
    case Kind::LBox:
    case Kind::LDia:
    case Kind::InvLBox:
    case Kind::InvLDia: {
      const bool inverse = f.is(Kind::InvLBox) || f.is(Kind::InvLDia);
      const bool universal = f.is(Kind::LBox) || f.is(Kind::InvLBox);
      const FOTerm y = fresh_var();
      auto parts = inverse ? step(y, x, label_edges(f.labels())) : step(x, y, label_edges(f.labels()));
      if (universal) return fo_forall(y, fo_imp(fo_and(std::move(parts)), tr(f.child(), y, e)));
      parts.push_back(tr(f.child(), y, e));
      return fo_exists(y, fo_and(std::move(parts)));
    }
    case Kind::GBox: {
      const FOTerm y = fresh_var();
      return fo_forall(y, tr(f.child(), y, e));
    }
    case Kind::GDia: {
      const FOTerm y = fresh_var();
      return fo_exists(y, tr(f.child(), y, e));
    }
    case Kind::ForallNom:
    case Kind::ExistsNom: {
      const FOTerm v = bind_nominal(f.name());
      FOFormula body = tr(f.child(), x, e);
      unbind_nominal(f.name());
      return f.is(Kind::ForallNom) ? fo_forall(v, std::move(body)) : fo_exists(v, std::move(body));
    }
  }
  throw std::logic_error("unhandled formula kind");
}

FOFormula Translator::tr_ineq(const Ineq& i) {
  const FOTerm x = FOTerm::var("x");
  return fo_forall(x, fo_imp(tr(i.lhs, x, label_edges(i.sup)), tr(i.rhs, x, label_edges(i.sub))));
}

FOFormula Translator::tr_mega(const Mega& m) {
  if (const auto* i = std::get_if<Ineq>(&m.node)) return tr_ineq(*i);
  if (const auto* c = std::get_if<MegaConj>(&m.node)) return fo_and({tr_mega(*c->left), tr_mega(*c->right)});
  const auto& g = std::get<MegaGuard>(m.node);
  // The guard's edge set is read outside its own binders.
  const Edges excluded = label_edges(g.ctx);
  std::set<std::string> avoid;
  for (const auto& [a, b] : excluded) avoid.insert({a.name, b.name});
  const FOTerm from = bind_nominal(g.from, avoid);
  const FOTerm to = bind_nominal(g.to, avoid);
  std::vector<FOFormula> parts{fo_rel(from, to)};
  for (auto& e : exclusions(excluded, from, to)) parts.push_back(std::move(e));
  FOFormula body = tr_mega(*g.body);
  unbind_nominal(g.to);
  unbind_nominal(g.from);
  return fo_forall(from, fo_forall(to, fo_imp(fo_and(std::move(parts)), std::move(body))));
}

FOFormula Translator::tr_uq(const UQIneq& u) {
  std::vector<FOTerm> bound;
  for (const auto& b : u.binders) bound.push_back(bind_nominal(b));
  FOFormula body = tr_ineq(u.body);
  for (auto it = u.binders.rbegin(); it != u.binders.rend(); ++it) unbind_nominal(*it);
  for (auto it = bound.rbegin(); it != bound.rend(); ++it) body = fo_forall(*it, std::move(body));
  return body;
}

FOFormula Translator::tr_quasi(const QuasiUQ& q) {
  std::vector<FOFormula> premises;
  for (const auto& p : q.premises) premises.push_back(tr_uq(p));
  FOFormula lhs = premises.empty() ? fo_true() : fo_and(std::move(premises));
  return fo_imp(std::move(lhs), tr_uq(q.conclusion));
}

FOFormula Translator::formula(const Formula& f, const TranslationContext& ctx) {
  for (const auto& n : free_nominals(f)) {
    taken_.insert(n);
    in_scope_.insert(n);
  }
  taken_.insert(ctx.x.name);
  in_scope_.insert(ctx.x.name);
  for (const auto& [a, b] : ctx.e) {
    for (const auto* t : {&a, &b}) {
      taken_.insert(t->name);
      in_scope_.insert(t->name);
    }
  }
  return tr(f, ctx.x, ctx.e);
}

FOFormula Translator::statement(const Statement& s) {
  for (const auto& n : all_nominals(s)) taken_.insert(n);
  for (const auto& n : free_nominals(s)) in_scope_.insert(n);
  return std::visit(
      [this](const auto& x) -> FOFormula {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Ineq>) {
          return tr_ineq(x);
        } else if constexpr (std::is_same_v<T, Mega>) {
          return tr_mega(x);
        } else if constexpr (std::is_same_v<T, UQIneq>) {
          return tr_uq(x);
        } else {
          return tr_quasi(x);
        }
      },
      s);
}

FOFormula st_formula(const TranslationContext& ctx, const Formula& f) { return Translator().formula(f, ctx); }

FOFormula st_statement(const Statement& s) { return Translator().statement(s); }

}  // namespace sabotage
