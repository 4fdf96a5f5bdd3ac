#include "sabotage/alba.hpp"
#include "sabotage/syntax.hpp"

namespace sabotage {

namespace {

bool contains_iff(const Formula& f) {
  if (f.is(Kind::Iff)) return true;
  for (const auto& c : f.children()) {
    if (contains_iff(c)) return true;
  }
  return false;
}

Sign child_sign(const Formula& f, std::size_t k, Sign s) {
  return (f.is(Kind::Not) || (f.is(Kind::Imp) && k == 0)) ? opposite(s) : s;
}

bool is_join(const Formula& f, Sign s) { return f.is(Kind::Or) && s == Sign::Plus; }
bool is_meet(const Formula& f, Sign s) { return f.is(Kind::And) && s == Sign::Minus; }

// Distributes the node at the root over a +or / -and child, if it is one of
// the pushable parents.
std::optional<Formula> distribute_here(const Formula& f, Sign s) {
  const bool plus = s == Sign::Plus;
  switch (f.kind()) {
    case Kind::Dia:
    case Kind::SDia:
      if (plus && f.child().is(Kind::Or)) {
        const auto& c = f.child();
        return disj(f.with_children({c.left()}), f.with_children({c.right()}));
      }
      return std::nullopt;
    case Kind::Box:
    case Kind::SBox:
      if (!plus && f.child().is(Kind::And)) {
        const auto& c = f.child();
        return conj(f.with_children({c.left()}), f.with_children({c.right()}));
      }
      return std::nullopt;
    case Kind::Not: {
      const auto& c = f.child();
      if (!plus && is_join(c, opposite(s))) return conj(neg(c.left()), neg(c.right()));
      if (plus && is_meet(c, opposite(s))) return disj(neg(c.left()), neg(c.right()));
      return std::nullopt;
    }
    case Kind::And:
      if (!plus) return std::nullopt;
      if (f.left().is(Kind::Or)) {
        return disj(conj(f.left().left(), f.right()), conj(f.left().right(), f.right()));
      }
      if (f.right().is(Kind::Or)) {
        return disj(conj(f.left(), f.right().left()), conj(f.left(), f.right().right()));
      }
      return std::nullopt;
    case Kind::Or:
      if (plus) return std::nullopt;
      if (f.left().is(Kind::And)) {
        return conj(disj(f.left().left(), f.right()), disj(f.left().right(), f.right()));
      }
      if (f.right().is(Kind::And)) {
        return conj(disj(f.left(), f.right().left()), disj(f.left(), f.right().right()));
      }
      return std::nullopt;
    case Kind::Imp:
      if (plus) return std::nullopt;
      if (f.left().is(Kind::Or)) {
        return conj(imp(f.left().left(), f.right()), imp(f.left().right(), f.right()));
      }
      if (f.right().is(Kind::And)) {
        return conj(imp(f.left(), f.right().left()), imp(f.left(), f.right().right()));
      }
      return std::nullopt;
    default: return std::nullopt;
  }
}

// First distribution in pre-order along the part reachable from the root
// through outer nodes only.
std::optional<Formula> distribute(const Formula& f, Sign s) {
  if (!classify_node(f.kind(), s).is_outer) return std::nullopt;
  if (auto here = distribute_here(f, s)) return here;
  for (std::size_t k = 0; k < f.arity(); ++k) {
    if (auto sub = distribute(f.child(k), child_sign(f, k, s))) {
      auto kids = f.children();
      kids[k] = *sub;
      return f.with_children(std::move(kids));
    }
  }
  return std::nullopt;
}

Statement st(Ineq i) { return Statement{std::move(i)}; }

}  // namespace

std::optional<RuleApplication> preprocess_step(const Ineq& i) {
  if (contains_iff(i.lhs) || contains_iff(i.rhs)) {
    return RuleApplication{"iff-elimination",
                           {st(ineq(eliminate_iff(i.lhs), eliminate_iff(i.rhs), i.sup, i.sub))}};
  }
  if (auto l = distribute(i.lhs, Sign::Plus)) {
    return RuleApplication{"distribution", {st(ineq(*l, i.rhs, i.sup, i.sub))}};
  }
  if (auto r = distribute(i.rhs, Sign::Minus)) {
    return RuleApplication{"distribution", {st(ineq(i.lhs, *r, i.sup, i.sub))}};
  }
  if (i.lhs.is(Kind::Or)) {
    return RuleApplication{"splitting",
                           {st(ineq(i.lhs.left(), i.rhs, i.sup, i.sub)),
                            st(ineq(i.lhs.right(), i.rhs, i.sup, i.sub))}};
  }
  if (i.rhs.is(Kind::And)) {
    return RuleApplication{"splitting",
                           {st(ineq(i.lhs, i.rhs.left(), i.sup, i.sub)),
                            st(ineq(i.lhs, i.rhs.right(), i.sup, i.sub))}};
  }
  for (const auto& p : props(i)) {
    const Polarity l = polarity(i.lhs, p);
    const Polarity r = polarity(i.rhs, p);
    std::optional<Formula> value;
    if (at_most_negative(l) && at_most_positive(r)) {
      value = bot();
    } else if (at_most_positive(l) && at_most_negative(r)) {
      value = top();
    }
    if (value) {
      return RuleApplication{
          value->is(Kind::Bot) ? "elimination-bot" : "elimination-top",
          {st(ineq(fold_constants(substitute(i.lhs, p, *value)),
                   fold_constants(substitute(i.rhs, p, *value)), i.sup, i.sub))}};
    }
  }
  return std::nullopt;
}

std::vector<Ineq> preprocess(const Ineq& input, std::vector<DerivationStep>* trace) {
  std::vector<Ineq> pool{input};
  for (;;) {
    bool changed = false;
    for (std::size_t k = 0; k < pool.size(); ++k) {
      auto app = preprocess_step(pool[k]);
      if (!app) continue;
      std::vector<Ineq> out;
      for (const auto& s : app->produced) out.push_back(std::get<Ineq>(s));
      if (trace) trace->push_back(DerivationStep{"preprocess", app->rule, {st(pool[k])}, app->produced});
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
      pool.insert(pool.begin() + static_cast<std::ptrdiff_t>(k), out.begin(), out.end());
      changed = true;
      break;
    }
    if (!changed) return pool;
  }
}

bool is_definite_inequality(const Ineq& i, const OrderType& eps) {
  return is_definite(build_signed_tree(i.lhs, Sign::Plus), eps) &&
         is_definite(build_signed_tree(i.rhs, Sign::Minus), eps);
}

}  // namespace sabotage
