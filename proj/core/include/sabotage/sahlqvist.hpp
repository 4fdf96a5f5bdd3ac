#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sabotage/formula.hpp"
#include "sabotage/statement.hpp"

namespace sabotage {

enum class Sign { Plus, Minus };

inline Sign opposite(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

/// Per-variable choice of which occurrences are solved for: `One` marks
/// positive occurrences critical, `Dual` negative ones.
enum class Order { One, Dual };
using OrderType = std::map<std::string, Order>;

std::string to_string(const OrderType& eps);
/// Parses `p=1,q=d` (also accepts `∂`). Throws std::invalid_argument.
OrderType parse_order_type(const std::string& text);

/// Signed generation tree of a formula.
struct SignedTree {
  Kind kind;
  Sign sign;
  std::string name;  // proposition or nominal name for leaves
  std::vector<SignedTree> children;
};

/// Children keep the parent's sign, except below `~` (flipped) and the first
/// child of `->` (flipped). Throws std::invalid_argument on `<->`.
SignedTree build_signed_tree(const Formula& f, Sign root);

struct NodeClass {
  bool is_outer = false;
  bool is_inner = false;
  friend bool operator==(const NodeClass&, const NodeClass&) = default;
};

/// Outer/inner classification of a signed connective. Connectives outside
/// {or, and, dia, box, sdia, sbox, not, imp} are neither.
NodeClass classify_node(Kind connective, Sign sign);

/// Leaf-to-root sequence, leaf excluded. True iff it splits into an
/// inner-only prefix followed by an outer-only suffix.
bool is_excellent_branch(std::span<const NodeClass> branch);

/// True iff the signed leaf is solved for under `eps`.
bool is_critical(const OrderType& eps, const std::string& var, Sign leaf_sign);

struct SignedNode {
  Kind kind;
  Sign sign;
};

/// A proposition occurrence and the connectives above it, leaf side first.
struct Branch {
  std::string var;
  Sign leaf_sign;
  std::vector<SignedNode> path;
};

std::vector<Branch> branches(const SignedTree& t);

/// Every critical branch of the tree is excellent.
bool is_epsilon_sahlqvist(const SignedTree& t, const OrderType& eps);
/// Checks `+lhs` and `-rhs`. Throws std::invalid_argument if `eps` misses a
/// variable of the inequality.
bool is_epsilon_sahlqvist(const Ineq& i, const OrderType& eps);

/// First order-type, in lexicographic order over the sorted variables with
/// `One` before `Dual`, under which the inequality is Sahlqvist.
std::optional<OrderType> find_order_type(const Ineq& i);

/// No `+or` or `-and` on the outer part of any critical branch.
bool is_definite(const SignedTree& t, const OrderType& eps);
/// Every critical branch consists of inner nodes only.
bool is_inner_sahlqvist(const SignedTree& t, const OrderType& eps);
/// No critical leaf at all: every variable occurs only with the sign opposite
/// to the one `eps` solves for.
bool is_dual_uniform(const SignedTree& t, const OrderType& eps);
/// Inequality-level uniformity in `p` over `+lhs` and `-rhs`, with the sign
/// opposite to `eps(p)`.
bool is_dual_uniform_in(const Ineq& i, const OrderType& eps, const std::string& p);

/// Per-branch diagnostic for reports.
struct BranchReport {
  std::string side;  // "lhs" or "rhs"
  Branch branch;
  bool critical = false;
  bool excellent = false;
};

struct Classification {
  bool sahlqvist = false;
  std::optional<OrderType> order_type;
  std::vector<BranchReport> branches;  // under order_type, or under all-One when none
};

/// Classifies an inequality; `forced` restricts the search to one order-type.
Classification classify(const Ineq& i, const std::optional<OrderType>& forced = std::nullopt);

std::string describe(const Branch& b);

}  // namespace sabotage
