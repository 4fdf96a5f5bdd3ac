#include <algorithm>

#include "alba_internal.hpp"
#include "sabotage/syntax.hpp"

namespace sabotage {

namespace {

Formula guard_formula(const Guard& g) { return gbox(imp(nom(g.from), ldia(g.ctx, nom(g.to)))); }

// ((g0 & g1) & ...) & tail
Formula guarded_conj(const std::vector<Guard>& guards, const Formula& tail) {
  Formula acc = guard_formula(guards.front());
  for (std::size_t k = 1; k < guards.size(); ++k) acc = conj(acc, guard_formula(guards[k]));
  return conj(acc, tail);
}

Formula guard_conj(const std::vector<Guard>& guards) {
  Formula acc = guard_formula(guards.front());
  for (std::size_t k = 1; k < guards.size(); ++k) acc = conj(acc, guard_formula(guards[k]));
  return acc;
}

std::vector<std::string> binders_of(const std::vector<Guard>& guards) {
  std::vector<std::string> out;
  for (const auto& g : guards) {
    out.push_back(g.from);
    out.push_back(g.to);
  }
  return out;
}

Formula close(const std::vector<std::string>& binders, Formula body, bool universal) {
  for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
    body = universal ? forall_nom(*it, body) : exists_nom(*it, body);
  }
  return body;
}

bool has_order(const OrderType& eps, const Formula& f, Order o) {
  if (!f.is(Kind::Prop)) return false;
  auto it = eps.find(f.name());
  return it != eps.end() && it->second == o;
}

Statement st(Ineq i) { return Statement{std::move(i)}; }

}  // namespace

RuleApplication pack_item(const Statement& item, const OrderType& eps) {
  GuardedBody gb;
  if (const auto* i = std::get_if<Ineq>(&item)) {
    gb.body = mega_leaf(*i);
  } else if (const auto* m = std::get_if<Mega>(&item)) {
    gb = unguard(*m);
  } else if (std::holds_alternative<UQIneq>(item)) {
    return RuleApplication{"none", {item}};
  } else {
    throw StageError("pack", item, "unexpected statement form");
  }
  const auto* hp = std::get_if<Ineq>(&gb.body.node);
  if (!hp) throw StageError("pack", item, "head is a conjunction");
  const Ineq& h = *hp;
  const auto& guards = gb.guards;
  const bool lhs_settled = detail::is_settled(h.lhs);
  const bool rhs_settled = detail::is_settled(h.rhs);

  if (guards.empty()) {
    if (is_pure(h)) return RuleApplication{"none", {item}};
    if (is_context_free(h.lhs) && is_context_free(h.rhs)) {
      if (h.sup.empty() && h.sub.empty()) return RuleApplication{"none", {item}};
      return RuleApplication{"context-erasure", {st(ineq(h.lhs, h.rhs))}};
    }
    if (lhs_settled) {
      return RuleApplication{"packing-3", {Statement{UQIneq{{}, ineq(top(), imp(h.lhs, h.rhs), {}, h.sub)}}}};
    }
    if (rhs_settled) {
      return RuleApplication{"packing-4", {Statement{UQIneq{{}, ineq(top(), imp(h.lhs, h.rhs), {}, h.sup)}}}};
    }
    throw StageError("pack", item, "neither side is pure and context-free");
  }

  const auto binders = binders_of(guards);
  if (lhs_settled && has_order(eps, h.rhs, Order::One)) {
    return RuleApplication{"packing-1", {st(ineq(close(binders, guarded_conj(guards, h.lhs), false), h.rhs))}};
  }
  if (rhs_settled && has_order(eps, h.lhs, Order::Dual)) {
    return RuleApplication{"packing-2", {st(ineq(h.lhs, close(binders, imp(guard_conj(guards), h.rhs), true)))}};
  }
  if (lhs_settled) {
    return RuleApplication{
        "packing-3", {Statement{UQIneq{binders, ineq(top(), imp(guarded_conj(guards, h.lhs), h.rhs), {}, h.sub)}}}};
  }
  if (rhs_settled) {
    return RuleApplication{
        "packing-4", {Statement{UQIneq{binders, ineq(top(), imp(guarded_conj(guards, h.lhs), h.rhs), {}, h.sup)}}}};
  }
  throw StageError("pack", item, "neither side of the head is pure and context-free");
}

bool is_ackermann_ready(const Statement& item, const OrderType& eps) {
  const Ineq* body = nullptr;
  if (const auto* i = std::get_if<Ineq>(&item)) {
    body = i;
  } else if (const auto* u = std::get_if<UQIneq>(&item)) {
    body = &u->body;
  } else {
    return false;
  }
  if (is_pure(*body)) return true;
  if (std::holds_alternative<Ineq>(item) && body->sup.empty() && body->sub.empty()) {
    if (has_order(eps, body->rhs, Order::One) && detail::is_settled(body->lhs)) return true;
    if (has_order(eps, body->lhs, Order::Dual) && detail::is_settled(body->rhs)) return true;
  }
  for (const auto& p : props(*body)) {
    const Polarity l = polarity(body->lhs, p);
    const Polarity r = polarity(body->rhs, p);
    const bool right = eps.at(p) == Order::One;
    const bool ok = right ? (at_most_positive(l) && at_most_negative(r)) : (at_most_negative(l) && at_most_positive(r));
    if (!ok) return false;
  }
  return true;
}

namespace detail {

void pack_in_place(System& sys) {
  for (std::size_t k = 0; k < sys.items.size(); ++k) {
    auto app = pack_item(sys.items[k], sys.eps);
    if (app.produced.size() == 1 && app.produced.front() == sys.items[k]) continue;
    record(sys, "pack", app.rule, {sys.items[k]}, std::move(app.produced));
  }
}

void ackermann_in_place(System& sys, const std::string& p, Handedness side) {
  const bool right = side == Handedness::Right;
  std::vector<Statement> bounds_items;
  std::vector<Formula> bounds;
  std::vector<Statement> others;
  std::set<std::string> bound_noms;
  for (const auto& item : sys.items) {
    if (const auto* i = std::get_if<Ineq>(&item); i && i->sup.empty() && i->sub.empty()) {
      const Formula& var_side = right ? i->rhs : i->lhs;
      const Formula& value = right ? i->lhs : i->rhs;
      if (var_side.is(Kind::Prop) && var_side.name() == p && is_settled(value)) {
        bounds_items.push_back(item);
        bounds.push_back(value);
        for (const auto& n : free_nominals(value)) bound_noms.insert(n);
        continue;
      }
    }
    if (props(item).contains(p)) others.push_back(item);
  }
  if (bounds_items.empty() && others.empty()) return;

  const Formula value = right ? disj_all(bounds) : conj_all(bounds);
  std::vector<Statement> produced;
  for (const auto& item : others) {
    const Ineq* body = nullptr;
    std::vector<std::string> binders;
    if (const auto* i = std::get_if<Ineq>(&item)) {
      body = i;
    } else if (const auto* u = std::get_if<UQIneq>(&item)) {
      body = &u->body;
      binders = u->binders;
    } else {
      throw PreconditionError(p, item, "not a plain or quantified inequality");
    }
    const Polarity l = polarity(body->lhs, p);
    const Polarity r = polarity(body->rhs, p);
    const bool ok = right ? (at_most_positive(l) && at_most_negative(r)) : (at_most_negative(l) && at_most_positive(r));
    if (!ok) {
      throw PreconditionError(p, item,
                              std::string("occurrences of ") + p + " have the wrong polarity for the " +
                                  (right ? "right" : "left") + "-handed rule");
    }
    for (const auto& b : binders) {
      if (bound_noms.contains(b)) throw PreconditionError(p, item, "binder " + b + " occurs free in a bound");
    }
    produced.push_back(substitute(item, p, value));
  }
  std::vector<Statement> consumed = bounds_items;
  consumed.insert(consumed.end(), others.begin(), others.end());
  // Keep the pool order: consumed items in the order they sit in the system.
  std::vector<Statement> ordered;
  std::vector<Statement> remaining = consumed;
  for (const auto& item : sys.items) {
    auto it = std::find(remaining.begin(), remaining.end(), item);
    if (it != remaining.end()) {
      ordered.push_back(*it);
      remaining.erase(it);
    }
  }
  record(sys, "ackermann", right ? "ackermann-right" : "ackermann-left", std::move(ordered), std::move(produced));
}

void eliminate_all_in_place(System& sys) {
  std::set<std::string> vars;
  for (const auto& item : sys.items) {
    for (const auto& p : props(item)) vars.insert(p);
  }
  for (const auto& p : vars) {
    auto it = sys.eps.find(p);
    if (it == sys.eps.end()) throw PreconditionError(p, sys.items.front(), "variable has no order");
    ackermann_in_place(sys, p, it->second == Order::One ? Handedness::Right : Handedness::Left);
  }
}

}  // namespace detail

System pack(System sys) {
  detail::pack_in_place(sys);
  return sys;
}

System ackermann_eliminate(System sys, const std::string& p, Handedness side) {
  detail::ackermann_in_place(sys, p, side);
  return sys;
}

System eliminate_all(System sys) {
  detail::eliminate_all_in_place(sys);
  return sys;
}

}  // namespace sabotage
