#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sabotage/formula.hpp"
#include "sabotage/frame.hpp"
#include "sabotage/statement.hpp"

namespace sabotage {

/// A name needed during evaluation has no interpretation.
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Edges denoted by a label set under `val`, as a mask over `frame`.
EdgeMask label_edges(const KripkeFrame& frame, const Valuation& val, const EdgeLabelSet& s);

/// Worlds where `f` holds when the current relation is R0 minus `ctx.deleted`.
WorldSet extension(const KripkeFrame& frame, const Valuation& val, const DeletionContext& ctx,
                   const Formula& f);

bool satisfies(const KripkeFrame& frame, const Valuation& val, const DeletionContext& ctx, int w,
               const Formula& f);

/// Model-level truth of a statement.
bool eval_statement(const KripkeFrame& frame, const Valuation& val, const Statement& s);

/// Truth on the frame: every valuation of `vars` and every assignment of worlds
/// to the free nominals of `s`. Valuations are visited with `vars` sorted and
/// subsets as ascending bitmasks.
bool frame_valid(const KripkeFrame& frame, const Statement& s, std::vector<std::string> vars);
/// As above with `vars` = the propositions of `s`.
bool frame_valid(const KripkeFrame& frame, const Statement& s);
/// A bare formula is checked as `top <= f`.
bool frame_valid(const KripkeFrame& frame, const Formula& f);

}  // namespace sabotage
