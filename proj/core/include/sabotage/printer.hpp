#pragma once

#include <string>

#include "sabotage/formula.hpp"

namespace sabotage {

/// Prints with the parser's ASCII syntax and minimal parentheses.
///
/// Expanded-language constructors use `box^{S}`, `dia^{S}`, `inv-box^{S}`,
/// `inv-dia^{S}`, `A`, `E`, `forall i.` and `exists i.`, where `S` is written
/// as `(i1,i2),(i3,i4)`. Nominals print as their names.
std::string print_formula(const Formula& f);

}  // namespace sabotage
