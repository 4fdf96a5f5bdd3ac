#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sabotage/statement.hpp"

namespace check {

/// Model-level equivalence of a rewrite, evaluated with the reference
/// semantics:
///
///   Q_props. /\ premises   <=>   forall U. exists F. /\ conclusions
///
/// where Q is exists or forall over `quantified_props`, U are
/// `forall_in_conclusion` and F are `exists_in_conclusion`. Every other name is
/// free and ranges over all values on every frame with 1..max_worlds worlds.
struct RuleCheck {
  std::vector<sabotage::Statement> premises;
  std::vector<sabotage::Statement> conclusions;
  std::vector<std::string> exists_in_conclusion;
  std::vector<std::string> forall_in_conclusion;
  std::vector<std::string> quantified_props;
  bool props_existential = true;
};

struct CheckResult {
  long cases = 0;
  std::optional<std::string> violation;
};

CheckResult equivalent(const RuleCheck& c, int max_worlds = 2);

}  // namespace check
