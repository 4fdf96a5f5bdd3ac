#include "sabotage/alba.hpp"

#include <algorithm>
#include "json.hpp"

#include "alba_internal.hpp"
#include "sabotage/syntax.hpp"

namespace sabotage {

StageError::StageError(std::string stage, Statement item, const std::string& reason)
    : std::runtime_error(stage + ": " + reason + ": " + to_string(item)), stage_(std::move(stage)),
      item_(std::move(item)) {}

PreconditionError::PreconditionError(std::string variable, Statement item, const std::string& reason)
    : std::runtime_error("cannot eliminate " + variable + ": " + reason + ": " + to_string(item)),
      variable_(std::move(variable)), item_(std::move(item)) {}

Ineq System::goal() const { return ineq(nom(goal_from), neg(nom(goal_to))); }

void apply_step(std::vector<Statement>& pool, const DerivationStep& step) {
  // With nothing consumed the new items go right after the finished outputs.
  std::size_t at = 0;
  if (step.consumed.empty()) {
    for (std::size_t k = 0; k < pool.size(); ++k) {
      if (std::holds_alternative<QuasiUQ>(pool[k])) at = k + 1;
    }
  } else {
    at = pool.size();
  }
  for (std::size_t c = 0; c < step.consumed.size(); ++c) {
    auto it = std::find(pool.begin(), pool.end(), step.consumed[c]);
    if (it == pool.end()) {
      throw std::logic_error("replay: consumed item not present: " + to_string(step.consumed[c]));
    }
    const auto idx = static_cast<std::size_t>(it - pool.begin());
    if (c == 0) {
      at = idx;
    } else if (idx < at) {
      --at;
    }
    pool.erase(it);
  }
  pool.insert(pool.begin() + static_cast<std::ptrdiff_t>(at), step.produced.begin(), step.produced.end());
}

std::vector<Statement> replay(const Statement& input, const std::vector<DerivationStep>& trace) {
  std::vector<Statement> pool{input};
  for (const auto& s : trace) apply_step(pool, s);
  return pool;
}

namespace detail {

void record(System& sys, const std::string& stage, const std::string& rule, std::vector<Statement> consumed,
            std::vector<Statement> produced) {
  DerivationStep step{stage, rule, std::move(consumed), std::move(produced)};
  apply_step(sys.items, step);
  sys.trace.push_back(std::move(step));
}

}  // namespace detail

System first_approximation(const Ineq& i, const OrderType& eps, NameGenerator names,
                           std::optional<std::pair<std::string, std::string>> goal) {
  System sys;
  sys.eps = eps;
  names.reserve_all(all_nominals(Statement{i}));
  if (!goal) goal = std::pair{names.fresh(), names.fresh()};
  sys.goal_from = goal->first;
  sys.goal_to = goal->second;
  names.reserve(sys.goal_from);
  names.reserve(sys.goal_to);
  sys.names = std::move(names);
  sys.items = {Statement{i}};
  detail::record(sys, "first-approximation", "first-approximation", {Statement{i}},
                 {Statement{ineq(nom(sys.goal_from), i.lhs)}, Statement{ineq(i.rhs, neg(nom(sys.goal_to)))}});
  return sys;
}

QuasiUQ assemble_output(System& sys) {
  QuasiUQ q;
  for (const auto& item : sys.items) {
    if (!is_pure(item)) throw StageError("output", item, "variable left after elimination");
    if (const auto* i = std::get_if<Ineq>(&item)) {
      q.premises.push_back(UQIneq{{}, *i});
    } else if (const auto* u = std::get_if<UQIneq>(&item)) {
      q.premises.push_back(*u);
    } else {
      throw StageError("output", item, "not a plain or quantified inequality");
    }
  }
  q.conclusion = UQIneq{{}, sys.goal()};
  detail::record(sys, "output", "output", sys.items, {Statement{q}});
  return q;
}

AlbaResult run_alba(const Ineq& input, const std::optional<OrderType>& forced) {
  AlbaResult res;
  res.input = input;
  const Ineq plain = ineq(eliminate_iff(input.lhs), eliminate_iff(input.rhs), input.sup, input.sub);
  try {
    if (forced) {
      if (!is_epsilon_sahlqvist(plain, *forced)) {
        res.failure = AlbaFailure{"classification", "not Sahlqvist under order-type " + to_string(*forced), std::nullopt};
        return res;
      }
      res.order_type = forced;
    } else {
      res.order_type = find_order_type(plain);
    }
  } catch (const std::invalid_argument& e) {
    res.failure = AlbaFailure{"classification", e.what(), std::nullopt};
    return res;
  }
  if (!res.order_type) {
    res.failure = AlbaFailure{"classification", "no order-type makes the inequality Sahlqvist", std::nullopt};
    return res;
  }
  const OrderType& eps = *res.order_type;

  res.preprocessed = preprocess(input, &res.trace);
  NameGenerator names;
  names.reserve_all(all_nominals(Statement{input}));
  const std::pair goal{names.fresh(), names.fresh()};

  for (const auto& pre : res.preprocessed) {
    System sys = first_approximation(pre, eps, names, goal);
    SystemSnapshots snap;
    snap.preprocessed = pre;
    snap.approximated = sys.items;
    try {
      detail::reduce_outer_in_place(sys);
      snap.outer = sys.items;
      detail::reduce_inner_in_place(sys);
      snap.inner = sys.items;
      detail::pack_in_place(sys);
      snap.packed = sys.items;
      detail::eliminate_all_in_place(sys);
      snap.eliminated = sys.items;
      res.output.push_back(assemble_output(sys));
    } catch (const StageError& e) {
      res.failure = AlbaFailure{e.stage(), e.what(), e.item()};
    } catch (const PreconditionError& e) {
      res.failure = AlbaFailure{"ackermann", e.what(), e.item()};
    }
    res.trace.insert(res.trace.end(), sys.trace.begin(), sys.trace.end());
    res.snapshots.push_back(std::move(snap));
    names = sys.names;
    if (res.failure) {
      res.output.clear();
      return res;
    }
  }
  res.success = true;
  return res;
}

std::string trace_to_json(const std::vector<DerivationStep>& trace, int indent) {
  auto texts = [](const std::vector<Statement>& v) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& s : v) arr.push_back(to_string(s));
    return arr;
  };
  auto out = nlohmann::ordered_json::array();
  for (const auto& s : trace) {
    nlohmann::ordered_json step;
    step["stage"] = s.stage;
    step["rule"] = s.rule;
    step["consumed"] = texts(s.consumed);
    step["produced"] = texts(s.produced);
    out.push_back(std::move(step));
  }
  return out.dump(indent);
}

}  // namespace sabotage
