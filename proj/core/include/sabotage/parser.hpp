#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sabotage/formula.hpp"
#include "sabotage/statement.hpp"

namespace sabotage {

/// Malformed input. `position` is a 0-based character offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected, std::string found);

  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
  std::string found_;
};

/// Parses one base-language formula.
///
///   phi := bot | top | ident | ~phi | phi & phi | phi | phi | phi -> phi
///        | phi <-> phi | <>phi | []phi | <!>phi | [!]phi | ( phi )
///
/// Prefix operators bind tightest, then `&`, `|`, `->` (right-assoc) and
/// `<->`. `&`, `|` and `<->` associate to the left.
Formula parse_formula(std::string_view text);

/// Parses `phi <= psi`. Without `<=`, a top-level implication `phi -> psi` is
/// read as `phi <= psi` and any other formula `phi` as `top <= phi`.
Ineq parse_inequality(std::string_view text);

}  // namespace sabotage
