#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sabotage/names.hpp"
#include "sabotage/sahlqvist.hpp"
#include "sabotage/statement.hpp"

namespace sabotage {

/// One rewrite: `consumed` items leave the pool, `produced` items enter it at
/// the position of the first consumed item.
struct DerivationStep {
  std::string stage;
  std::string rule;
  std::vector<Statement> consumed;
  std::vector<Statement> produced;
};

/// A reduction stage cannot make progress on `item`.
class StageError : public std::runtime_error {
 public:
  StageError(std::string stage, Statement item, const std::string& reason);
  const std::string& stage() const { return stage_; }
  const Statement& item() const { return item_; }

 private:
  std::string stage_;
  Statement item_;
};

/// Side conditions of an Ackermann rule fail on `item`.
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(std::string variable, Statement item, const std::string& reason);
  const std::string& variable() const { return variable_; }
  const Statement& item() const { return item_; }

 private:
  std::string variable_;
  Statement item_;
};

/// The working set for one preprocessed inequality.
struct System {
  std::vector<Statement> items;
  std::string goal_from;  // i in  i <= ~j
  std::string goal_to;    // j
  OrderType eps;
  NameGenerator names;
  std::vector<DerivationStep> trace;

  Ineq goal() const;
};

/// Removes the first occurrence of each consumed item and inserts the produced
/// ones where the first consumed item was. Throws std::logic_error if a
/// consumed item is missing.
void apply_step(std::vector<Statement>& pool, const DerivationStep& step);

/// Replays a whole trace starting from the single input statement.
std::vector<Statement> replay(const Statement& input, const std::vector<DerivationStep>& trace);

// ---- single rule applications ----------------------------------------------

struct RuleApplication {
  std::string rule;
  std::vector<Statement> produced;
};

/// One distribution, splitting or variable-elimination rewrite of `i`, or
/// nothing when `i` is in normal form.
std::optional<RuleApplication> preprocess_step(const Ineq& i);

/// Decomposition of the outer part at the root of `i`.
std::optional<RuleApplication> outer_step(const Ineq& i, NameGenerator& names);

/// Decomposition of the inner part at the head of a (possibly guarded) item.
std::optional<RuleApplication> inner_step(const Statement& item, NameGenerator& names);

/// Packing of one item into a plain or universally quantified inequality.
/// Throws StageError when no packing rule matches.
RuleApplication pack_item(const Statement& item, const OrderType& eps);

enum class Handedness { Right, Left };

// ---- stages ------------------------------------------------------------------

std::vector<Ineq> preprocess(const Ineq& input, std::vector<DerivationStep>* trace = nullptr);

/// Builds {i <= lhs, rhs <= ~j}. When `goal` is absent two fresh nominals are
/// drawn from `names`.
System first_approximation(const Ineq& i, const OrderType& eps, NameGenerator names = {},
                           std::optional<std::pair<std::string, std::string>> goal = std::nullopt);

System reduce_outer(System sys);
System reduce_inner(System sys);
System pack(System sys);
System ackermann_eliminate(System sys, const std::string& p, Handedness side);
/// Every variable in lexicographic order, right-handed for order 1.
System eliminate_all(System sys);
QuasiUQ assemble_output(System& sys);

// ---- postconditions ----------------------------------------------------------

bool is_definite_inequality(const Ineq& i, const OrderType& eps);
/// Pure, or `i <= a` with +a inner, or `b <= ~i` with -b inner.
bool is_outer_terminal(const Statement& item, const OrderType& eps);
/// A guarded item whose head is solved for a variable, uniform on its
/// unsolved side, or pure.
bool is_inner_head(const Statement& item, const OrderType& eps);
/// Plain or quantified inequality on which the Ackermann rules can act.
bool is_ackermann_ready(const Statement& item, const OrderType& eps);

// ---- whole run ---------------------------------------------------------------

struct SystemSnapshots {
  Ineq preprocessed;
  std::vector<Statement> approximated;
  std::vector<Statement> outer;
  std::vector<Statement> inner;
  std::vector<Statement> packed;
  std::vector<Statement> eliminated;
};

struct AlbaFailure {
  std::string stage;
  std::string reason;
  std::optional<Statement> item;
};

struct AlbaResult {
  bool success = false;
  Ineq input;
  std::optional<OrderType> order_type;
  std::vector<Ineq> preprocessed;
  std::vector<QuasiUQ> output;
  std::vector<SystemSnapshots> snapshots;
  std::vector<DerivationStep> trace;
  std::optional<AlbaFailure> failure;
};

/// Runs the whole pipeline. `forced` skips the order-type search.
AlbaResult run_alba(const Ineq& input, const std::optional<OrderType>& forced = std::nullopt);

/// `[{"stage":..,"rule":..,"consumed":[..],"produced":[..]}, ...]`
std::string trace_to_json(const std::vector<DerivationStep>& trace, int indent = 2);

}  // namespace sabotage
