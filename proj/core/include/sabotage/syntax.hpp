#pragma once

#include <cstddef>
#include <set>
#include <string>

#include "sabotage/formula.hpp"

namespace sabotage {

enum class Polarity { Positive, Negative, Both, Absent };

std::string_view polarity_name(Polarity p);

/// Sign pattern of the occurrences of `p` in `f`. `~` and the antecedent of
/// `->` flip; any occurrence under `<->` counts as both.
Polarity polarity(const Formula& f, const std::string& p);
Polarity flip(Polarity p);
/// Combines the polarities of two sibling positions.
Polarity join(Polarity a, Polarity b);

/// True when the polarity admits a monotone reading (positive or absent).
inline bool at_most_positive(Polarity p) { return p == Polarity::Positive || p == Polarity::Absent; }
inline bool at_most_negative(Polarity p) { return p == Polarity::Negative || p == Polarity::Absent; }

std::set<std::string> props(const Formula& f);
/// Every nominal name occurring in `f`: atoms, labels and binders.
std::set<std::string> all_nominals(const Formula& f);
/// Nominals not captured by an enclosing quantifier.
std::set<std::string> free_nominals(const Formula& f);

bool is_pure(const Formula& f);
/// No sabotage modalities.
bool is_static(const Formula& f);
/// Built only from the constructors the parser can produce.
bool is_base_language(const Formula& f);
/// No box, diamond, sabotage box or sabotage diamond: truth does not depend on
/// the current deletion context.
bool is_context_free(const Formula& f);
bool is_contextual(Kind k);

std::size_t size(const Formula& f);
std::size_t depth(const Formula& f);

/// Replaces every occurrence of proposition `p` with `g`.
Formula substitute(const Formula& f, const std::string& p, const Formula& g);
/// Expands every `a <-> b` into `(a -> b) & (b -> a)`.
Formula eliminate_iff(const Formula& f);
/// Constant folding: removes top/bot below connectives where the result is
/// equivalent on every model.
Formula fold_constants(const Formula& f);

}  // namespace sabotage
