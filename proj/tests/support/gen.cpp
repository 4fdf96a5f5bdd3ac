#include "gen.hpp"

#include <algorithm>

namespace gen {

using namespace sabotage;

namespace {

Formula leaf(Rng& r, const Vocabulary& v) {
  const int k = r.below(10);
  if (k == 0) return top();
  if (k == 1) return bot();
  if (k <= 3 && !v.noms.empty()) return nom(r.pick(v.noms));
  return prop(r.pick(v.props));
}

}  // namespace

Formula base_formula(Rng& r, int depth, const Vocabulary& v) {
  if (depth <= 0 || r.coin(0.2)) return leaf(r, v);
  switch (r.below(8)) {
    case 0: return neg(base_formula(r, depth - 1, v));
    case 1: return conj(base_formula(r, depth - 1, v), base_formula(r, depth - 1, v));
    case 2: return disj(base_formula(r, depth - 1, v), base_formula(r, depth - 1, v));
    case 3: return imp(base_formula(r, depth - 1, v), base_formula(r, depth - 1, v));
    case 4: return box(base_formula(r, depth - 1, v));
    case 5: return dia(base_formula(r, depth - 1, v));
    case 6: return sbox(base_formula(r, depth - 1, v));
    default: return sdia(base_formula(r, depth - 1, v));
  }
}

EdgeLabelSet labels(Rng& r, const std::vector<std::string>& noms, int max_size) {
  EdgeLabelSet s;
  if (noms.empty()) return s;
  const int n = r.below(max_size + 1);
  for (int k = 0; k < n; ++k) s.insert({r.pick(noms), r.pick(noms)});
  return s;
}

Formula expanded_formula(Rng& r, int depth, const Vocabulary& v) {
  if (depth <= 0 || r.coin(0.2)) return leaf(r, v);
  const int k = r.below(16);
  if (k < 8) {
    // Base connective over expanded children.
    switch (k) {
      case 0: return neg(expanded_formula(r, depth - 1, v));
      case 1: return conj(expanded_formula(r, depth - 1, v), expanded_formula(r, depth - 1, v));
      case 2: return disj(expanded_formula(r, depth - 1, v), expanded_formula(r, depth - 1, v));
      case 3: return imp(expanded_formula(r, depth - 1, v), expanded_formula(r, depth - 1, v));
      case 4: return box(expanded_formula(r, depth - 1, v));
      case 5: return dia(expanded_formula(r, depth - 1, v));
      case 6: return sbox(expanded_formula(r, depth - 1, v));
      default: return sdia(expanded_formula(r, depth - 1, v));
    }
  }
  switch (k) {
    case 8: return lbox(labels(r, v.noms), expanded_formula(r, depth - 1, v));
    case 9: return ldia(labels(r, v.noms), expanded_formula(r, depth - 1, v));
    case 10: return inv_lbox(labels(r, v.noms), expanded_formula(r, depth - 1, v));
    case 11: return inv_ldia(labels(r, v.noms), expanded_formula(r, depth - 1, v));
    case 12: return gbox(expanded_formula(r, depth - 1, v));
    case 13: return gdia(expanded_formula(r, depth - 1, v));
    case 14: return iff(expanded_formula(r, depth - 1, v), expanded_formula(r, depth - 1, v));
    default: {
      // Rebind an existing nominal or introduce a new one.
      Vocabulary inner = v;
      std::string name = r.coin() && !v.noms.empty() ? r.pick(v.noms) : "i" + std::to_string(5 + r.below(2));
      if (std::find(inner.noms.begin(), inner.noms.end(), name) == inner.noms.end()) inner.noms.push_back(name);
      Formula body = expanded_formula(r, depth - 1, inner);
      return r.coin() ? forall_nom(name, body) : exists_nom(name, body);
    }
  }
}

Ineq inequality(Rng& r, int depth, const Vocabulary& v) {
  Ineq i = ineq(expanded_formula(r, depth, v), expanded_formula(r, depth, v));
  if (r.coin()) i.sup = labels(r, v.noms);
  if (r.coin()) i.sub = labels(r, v.noms);
  return i;
}

namespace {

Mega mega(Rng& r, int depth, const Vocabulary& v, int budget) {
  if (budget <= 0 || r.coin(0.3)) return mega_leaf(inequality(r, depth, v));
  if (r.coin()) return mega_conj(mega(r, depth, v, budget - 1), mega(r, depth, v, budget - 1));
  Vocabulary inner = v;
  const std::string from = "i" + std::to_string(7 + budget * 2);
  const std::string to = "i" + std::to_string(8 + budget * 2);
  EdgeLabelSet ctx = labels(r, v.noms, 1);
  inner.noms.push_back(from);
  inner.noms.push_back(to);
  return mega_guard(from, to, ctx, mega(r, depth, inner, budget - 1));
}

UQIneq uq(Rng& r, int depth, const Vocabulary& v) {
  UQIneq u;
  Vocabulary inner = v;
  const int n = r.below(3);
  for (int k = 0; k < n; ++k) {
    // Sometimes a binder shadows a free nominal.
    std::string b = r.coin(0.3) && !v.noms.empty() ? r.pick(v.noms) : "i" + std::to_string(3 + k);
    if (std::find(u.binders.begin(), u.binders.end(), b) != u.binders.end()) continue;
    u.binders.push_back(b);
    if (std::find(inner.noms.begin(), inner.noms.end(), b) == inner.noms.end()) inner.noms.push_back(b);
  }
  u.body = inequality(r, depth, inner);
  return u;
}

}  // namespace

Statement statement(Rng& r, Form form, int depth, const Vocabulary& v) {
  switch (form) {
    case Form::Ineq: return inequality(r, depth, v);
    case Form::MegaConj:
      return mega_conj(mega(r, depth, v, 1), mega(r, depth, v, 1));
    case Form::MegaGuard: {
      Vocabulary inner = v;
      inner.noms.push_back("i9");
      inner.noms.push_back("i10");
      return mega_guard("i9", "i10", labels(r, v.noms, 1), mega(r, depth, inner, 1));
    }
    case Form::UQ: return uq(r, depth, v);
    case Form::Quasi: {
      QuasiUQ q;
      const int n = r.below(3);
      for (int k = 0; k < n; ++k) q.premises.push_back(uq(r, depth, v));
      q.conclusion = uq(r, depth, v);
      return q;
    }
  }
  return inequality(r, depth, v);
}

KripkeFrame frame(Rng& r, int max_worlds) {
  const int n = 1 + r.below(max_worlds);
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (r.coin(0.4)) edges.emplace_back(a, b);
    }
  }
  return KripkeFrame(n, edges);
}

Valuation valuation(Rng& r, const KripkeFrame& f, const Vocabulary& v) {
  Valuation val;
  for (const auto& p : v.props) val.props[p] = static_cast<WorldSet>(r.below(1 << f.size()));
  for (const auto& i : v.noms) val.noms[i] = r.below(f.size());
  return val;
}

// ---- Sahlqvist shapes

namespace {

bool critical(const OrderType& eps, const std::string& p, Sign s) {
  return (s == Sign::Plus) == (eps.at(p) == Order::One);
}

// Arbitrary formula whose variable occurrences are all non-critical.
Formula noncritical(Rng& r, const OrderType& eps, Sign s, int depth) {
  if (depth <= 0 || r.coin(0.35)) {
    std::vector<std::string> ok;
    for (const auto& [p, o] : eps) {
      if (!critical(eps, p, s)) ok.push_back(p);
    }
    if (ok.empty() || r.coin(0.25)) return r.coin() ? top() : bot();
    return prop(r.pick(ok));
  }
  switch (r.below(8)) {
    case 0: return neg(noncritical(r, eps, opposite(s), depth - 1));
    case 1: return conj(noncritical(r, eps, s, depth - 1), noncritical(r, eps, s, depth - 1));
    case 2: return disj(noncritical(r, eps, s, depth - 1), noncritical(r, eps, s, depth - 1));
    case 3: return imp(noncritical(r, eps, opposite(s), depth - 1), noncritical(r, eps, s, depth - 1));
    case 4: return box(noncritical(r, eps, s, depth - 1));
    case 5: return dia(noncritical(r, eps, s, depth - 1));
    case 6: return sbox(noncritical(r, eps, s, depth - 1));
    default: return sdia(noncritical(r, eps, s, depth - 1));
  }
}

Formula critical_leaf(Rng& r, const OrderType& eps, Sign s) {
  std::vector<std::string> ok;
  for (const auto& [p, o] : eps) {
    if (critical(eps, p, s)) ok.push_back(p);
  }
  if (ok.empty()) return top();
  return prop(r.pick(ok));
}

// Inner part: + and/box/sbox/not, - or/dia/sdia/not.
Formula inner(Rng& r, const OrderType& eps, Sign s, int depth) {
  if (depth <= 0 || r.coin(0.3)) return r.coin(0.8) ? critical_leaf(r, eps, s) : noncritical(r, eps, s, 1);
  const bool plus = s == Sign::Plus;
  switch (r.below(5)) {
    case 0: return neg(inner(r, eps, opposite(s), depth - 1));
    case 1: {
      // One side may be non-critical material.
      Formula a = inner(r, eps, s, depth - 1);
      Formula b = r.coin() ? inner(r, eps, s, depth - 1) : noncritical(r, eps, s, depth - 1);
      return plus ? conj(a, b) : disj(a, b);
    }
    case 2: return plus ? box(inner(r, eps, s, depth - 1)) : dia(inner(r, eps, s, depth - 1));
    case 3: return plus ? sbox(inner(r, eps, s, depth - 1)) : sdia(inner(r, eps, s, depth - 1));
    default: return critical_leaf(r, eps, s);
  }
}

// Outer part: + or/and/dia/sdia/not, - and/or/box/sbox/not/imp.
Formula outer(Rng& r, const OrderType& eps, Sign s, int depth) {
  if (depth <= 0 || r.coin(0.3)) return r.coin(0.85) ? inner(r, eps, s, depth) : noncritical(r, eps, s, depth);
  const bool plus = s == Sign::Plus;
  switch (r.below(plus ? 5 : 6)) {
    case 0: return neg(outer(r, eps, opposite(s), depth - 1));
    case 1: return disj(outer(r, eps, s, depth - 1), outer(r, eps, s, depth - 1));
    case 2: return conj(outer(r, eps, s, depth - 1), outer(r, eps, s, depth - 1));
    case 3: return plus ? dia(outer(r, eps, s, depth - 1)) : box(outer(r, eps, s, depth - 1));
    case 4: return plus ? sdia(outer(r, eps, s, depth - 1)) : sbox(outer(r, eps, s, depth - 1));
    default: return imp(outer(r, eps, Sign::Plus, depth - 1), outer(r, eps, Sign::Minus, depth - 1));
  }
}

}  // namespace

Ineq sahlqvist_inequality(Rng& r, const OrderType& eps, int depth) {
  return ineq(outer(r, eps, Sign::Plus, depth), outer(r, eps, Sign::Minus, depth));
}

}  // namespace gen
