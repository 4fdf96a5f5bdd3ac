#include "alba_internal.hpp"
#include "sabotage/syntax.hpp"

namespace sabotage {

namespace {

Statement st(Ineq i) { return Statement{std::move(i)}; }

EdgeLabelSet with_edge(EdgeLabelSet s, const std::string& a, const std::string& b) {
  s.emplace(a, b);
  return s;
}

// ~x with a double negation collapsed.
Formula negate(const Formula& f) { return f.is(Kind::Not) ? f.child() : neg(f); }

bool is_negated_nominal(const Formula& f) { return f.is(Kind::Not) && f.child().is(Kind::Nom); }

bool no_critical_leaf(const Formula& f, Sign s, const OrderType& eps) {
  for (const auto& b : branches(build_signed_tree(f, s))) {
    if (is_critical(eps, b.var, b.leaf_sign)) return false;
  }
  return true;
}

}  // namespace

std::optional<RuleApplication> outer_step(const Ineq& i, NameGenerator& names) {
  if (is_pure(i)) return std::nullopt;
  const auto& S = i.sup;
  const auto& T = i.sub;
  if (i.lhs.is(Kind::Nom)) {
    const Formula& a = i.rhs;
    switch (a.kind()) {
      case Kind::Dia: {
        const auto j = names.fresh();
        return RuleApplication{"dia-approximation",
                               {st(ineq(nom(j), a.child(), T, T)), st(ineq(i.lhs, ldia(T, nom(j)), S, T))}};
      }
      case Kind::SDia: {
        const auto m0 = names.fresh();
        const auto m1 = names.fresh();
        return RuleApplication{"sdia-approximation",
                               {st(ineq(nom(m0), ldia(T, nom(m1)), T, T)),
                                st(ineq(i.lhs, a.child(), S, with_edge(T, m0, m1)))}};
      }
      case Kind::And:
        return RuleApplication{"splitting", {st(ineq(i.lhs, a.left(), S, T)), st(ineq(i.lhs, a.right(), S, T))}};
      case Kind::Not:
        return RuleApplication{"not-residuation", {st(ineq(a.child(), neg(i.lhs), T, S))}};
      default: break;
    }
  }
  if (is_negated_nominal(i.rhs)) {
    const Formula& b = i.lhs;
    switch (b.kind()) {
      case Kind::Box: {
        const auto j = names.fresh();
        return RuleApplication{"box-approximation",
                               {st(ineq(b.child(), neg(nom(j)), S, S)), st(ineq(lbox(S, neg(nom(j))), i.rhs, S, T))}};
      }
      case Kind::SBox: {
        const auto m0 = names.fresh();
        const auto m1 = names.fresh();
        return RuleApplication{"sbox-approximation",
                               {st(ineq(nom(m0), ldia(S, nom(m1)), S, S)),
                                st(ineq(b.child(), i.rhs, with_edge(S, m0, m1), T))}};
      }
      case Kind::Or:
        return RuleApplication{"splitting", {st(ineq(b.left(), i.rhs, S, T)), st(ineq(b.right(), i.rhs, S, T))}};
      case Kind::Not:
        return RuleApplication{"not-residuation", {st(ineq(i.rhs.child(), b.child(), T, S))}};
      case Kind::Imp: {
        const auto j = names.fresh();
        const auto k = names.fresh();
        return RuleApplication{"imp-approximation",
                               {st(ineq(nom(j), b.left(), S, S)), st(ineq(b.right(), neg(nom(k)), S, S)),
                                st(ineq(imp(nom(j), neg(nom(k))), i.rhs, S, T))}};
      }
      default: break;
    }
  }
  return std::nullopt;
}

std::optional<RuleApplication> inner_step(const Statement& item, NameGenerator& names) {
  GuardedBody gb;
  if (const auto* i = std::get_if<Ineq>(&item)) {
    gb.body = mega_leaf(*i);
  } else if (const auto* m = std::get_if<Mega>(&item)) {
    gb = unguard(*m);
  } else {
    return std::nullopt;
  }
  auto& guards = gb.guards;

  if (const auto* c = std::get_if<MegaConj>(&gb.body.node)) {
    if (guards.empty()) {
      return RuleApplication{"splitting", {detail::wrap({}, *c->left), detail::wrap({}, *c->right)}};
    }
    return RuleApplication{"second-splitting", {detail::wrap(guards, *c->left), detail::wrap(guards, *c->right)}};
  }
  const auto* hp = std::get_if<Ineq>(&gb.body.node);
  if (!hp) return std::nullopt;
  const Ineq& h = *hp;
  const auto& S = h.sup;
  const auto& T = h.sub;
  const bool lhs_settled = detail::is_settled(h.lhs);
  const bool rhs_settled = detail::is_settled(h.rhs);
  if (lhs_settled == rhs_settled) return std::nullopt;

  auto one = [&](std::string rule, Ineq out, std::vector<Guard> gs) {
    return RuleApplication{std::move(rule), {detail::wrap(gs, mega_leaf(std::move(out)))}};
  };
  auto split = [&](Ineq a, Ineq b) {
    if (guards.empty()) return RuleApplication{"splitting", {st(std::move(a)), st(std::move(b))}};
    return RuleApplication{"splitting",
                           {detail::wrap(guards, mega_conj(mega_leaf(std::move(a)), mega_leaf(std::move(b))))}};
  };
  auto guarded = [&](const EdgeLabelSet& ctx) {
    auto gs = guards;
    const auto m0 = names.fresh();
    const auto m1 = names.fresh();
    gs.push_back(Guard{m0, m1, ctx});
    return std::pair{gs, std::pair{m0, m1}};
  };

  if (lhs_settled) {
    const Formula& b = h.rhs;
    switch (b.kind()) {
      case Kind::And: return split(ineq(h.lhs, b.left(), S, T), ineq(h.lhs, b.right(), S, T));
      case Kind::Box: return one("box-residuation", ineq(inv_ldia(T, h.lhs), b.child(), S, T), guards);
      case Kind::SBox: {
        auto [gs, m] = guarded(T);
        return one("sbox-residuation", ineq(h.lhs, b.child(), S, with_edge(T, m.first, m.second)), gs);
      }
      case Kind::Not: return one("not-residuation", ineq(b.child(), negate(h.lhs), T, S), guards);
      default: return std::nullopt;
    }
  }
  const Formula& a = h.lhs;
  switch (a.kind()) {
    case Kind::Or: return split(ineq(a.left(), h.rhs, S, T), ineq(a.right(), h.rhs, S, T));
    case Kind::Dia: return one("dia-residuation", ineq(a.child(), inv_lbox(S, h.rhs), S, T), guards);
    case Kind::SDia: {
      auto [gs, m] = guarded(S);
      return one("sdia-residuation", ineq(a.child(), h.rhs, with_edge(S, m.first, m.second), T), gs);
    }
    case Kind::Not: return one("not-residuation", ineq(negate(h.rhs), a.child(), T, S), guards);
    default: return std::nullopt;
  }
}

bool is_outer_terminal(const Statement& item, const OrderType& eps) {
  const auto* i = std::get_if<Ineq>(&item);
  if (!i) return false;
  if (is_pure(*i)) return true;
  if (i->lhs.is(Kind::Nom)) return is_inner_sahlqvist(build_signed_tree(i->rhs, Sign::Plus), eps);
  if (is_negated_nominal(i->rhs)) return is_inner_sahlqvist(build_signed_tree(i->lhs, Sign::Minus), eps);
  return false;
}

bool is_inner_head(const Statement& item, const OrderType& eps) {
  GuardedBody gb;
  if (const auto* i = std::get_if<Ineq>(&item)) {
    gb.body = mega_leaf(*i);
  } else if (const auto* m = std::get_if<Mega>(&item)) {
    gb = unguard(*m);
  } else {
    return false;
  }
  const auto* h = std::get_if<Ineq>(&gb.body.node);
  if (!h) return false;
  if (is_pure(*h)) return true;
  if (detail::is_settled(h->lhs)) {
    if (h->rhs.is(Kind::Prop) && eps.at(h->rhs.name()) == Order::One) return true;
    return no_critical_leaf(h->rhs, Sign::Plus, eps);
  }
  if (detail::is_settled(h->rhs)) {
    if (h->lhs.is(Kind::Prop) && eps.at(h->lhs.name()) == Order::Dual) return true;
    return no_critical_leaf(h->lhs, Sign::Minus, eps);
  }
  return false;
}

namespace detail {

Statement wrap(const std::vector<Guard>& guards, Mega body) {
  if (guards.empty()) {
    if (const auto* i = std::get_if<Ineq>(&body.node)) return Statement{*i};
  }
  return Statement{reguard(guards, std::move(body))};
}

bool is_settled(const Formula& f) { return is_pure(f) && is_context_free(f); }

void reduce_outer_in_place(System& sys) {
  for (;;) {
    bool changed = false;
    for (std::size_t k = 0; k < sys.items.size() && !changed; ++k) {
      const auto* i = std::get_if<Ineq>(&sys.items[k]);
      if (!i) continue;
      if (auto app = outer_step(*i, sys.names)) {
        record(sys, "outer", app->rule, {sys.items[k]}, std::move(app->produced));
        changed = true;
      }
    }
    if (!changed) break;
  }
  for (const auto& item : sys.items) {
    if (!is_outer_terminal(item, sys.eps)) throw StageError("outer", item, "no outer rule applies");
  }
}

void reduce_inner_in_place(System& sys) {
  for (;;) {
    bool changed = false;
    for (std::size_t k = 0; k < sys.items.size() && !changed; ++k) {
      if (auto app = inner_step(sys.items[k], sys.names)) {
        record(sys, "inner", app->rule, {sys.items[k]}, std::move(app->produced));
        changed = true;
      }
    }
    if (!changed) break;
  }
  for (const auto& item : sys.items) {
    if (!is_inner_head(item, sys.eps)) throw StageError("inner", item, "no inner rule applies");
  }
}

}  // namespace detail

System reduce_outer(System sys) {
  detail::reduce_outer_in_place(sys);
  return sys;
}

System reduce_inner(System sys) {
  detail::reduce_inner_in_place(sys);
  return sys;
}

}  // namespace sabotage
