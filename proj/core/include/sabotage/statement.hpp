#pragma once

#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "sabotage/formula.hpp"

namespace sabotage {

/// `lhs <=^{sup}_{sub} rhs`: wherever lhs holds with the `sup` edges removed,
/// rhs holds with the `sub` edges removed.
struct Ineq {
  Formula lhs;
  Formula rhs;
  EdgeLabelSet sup;
  EdgeLabelSet sub;

  friend bool operator==(const Ineq&, const Ineq&) = default;
  friend auto operator<=>(const Ineq&, const Ineq&) = default;
};

inline Ineq ineq(Formula lhs, Formula rhs, EdgeLabelSet sup = {}, EdgeLabelSet sub = {}) {
  return Ineq{std::move(lhs), std::move(rhs), std::move(sup), std::move(sub)};
}

struct Mega;

/// forall from, to ( from <=^{ctx}_{ctx} dia^{ctx} to  =>  body )
struct MegaGuard {
  std::string from;
  std::string to;
  EdgeLabelSet ctx;
  std::shared_ptr<const Mega> body;
};

/// Meta-conjunction of two mega-inequalities.
struct MegaConj {
  std::shared_ptr<const Mega> left;
  std::shared_ptr<const Mega> right;
};

struct Mega {
  std::variant<Ineq, MegaConj, MegaGuard> node;
};

Mega mega_leaf(Ineq i);
Mega mega_conj(Mega a, Mega b);
Mega mega_guard(std::string from, std::string to, EdgeLabelSet ctx, Mega body);

bool operator==(const Mega& a, const Mega& b);

/// forall binders . body
struct UQIneq {
  std::vector<std::string> binders;
  Ineq body;

  friend bool operator==(const UQIneq&, const UQIneq&) = default;
};

/// premises[0] & ... & premises[n-1]  =>  conclusion
struct QuasiUQ {
  std::vector<UQIneq> premises;
  UQIneq conclusion;

  friend bool operator==(const QuasiUQ&, const QuasiUQ&) = default;
};

using Statement = std::variant<Ineq, Mega, UQIneq, QuasiUQ>;

/// A guard of a mega-inequality, outermost first.
struct Guard {
  std::string from;
  std::string to;
  EdgeLabelSet ctx;

  friend bool operator==(const Guard&, const Guard&) = default;
};

/// A mega-inequality flattened into its guard chain and its body below the
/// last guard (an inequality or a conjunction).
struct GuardedBody {
  std::vector<Guard> guards;
  Mega body;
};

GuardedBody unguard(const Mega& m);
Mega reguard(const std::vector<Guard>& guards, Mega body);

std::string to_string(const EdgeLabelSet& s);
std::string to_string(const Ineq& i);
std::string to_string(const Mega& m);
std::string to_string(const UQIneq& u);
std::string to_string(const QuasiUQ& q);
std::string to_string(const Statement& s);

/// Propositional variables occurring anywhere in the statement.
std::set<std::string> props(const Statement& s);
std::set<std::string> props(const Ineq& i);
/// Nominals occurring free (not bound by a guard, binder or quantifier).
std::set<std::string> free_nominals(const Statement& s);
std::set<std::string> free_nominals(const Ineq& i);
/// Every nominal name occurring, bound or free.
std::set<std::string> all_nominals(const Statement& s);

bool is_pure(const Statement& s);
bool is_pure(const Ineq& i);

Statement substitute(const Statement& s, const std::string& p, const Formula& g);

}  // namespace sabotage
