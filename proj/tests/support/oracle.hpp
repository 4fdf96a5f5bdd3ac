#pragma once

// Reference semantics written independently of the library evaluator:
// explicit edge sets, world-by-world recursion, no bitmasks.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sabotage/formula.hpp"
#include "sabotage/frame.hpp"
#include "sabotage/statement.hpp"

namespace oracle {

using Edge = std::pair<int, int>;
using EdgeSet = std::set<Edge>;

struct Model {
  int n = 1;
  EdgeSet rel;
  std::map<std::string, std::set<int>> props;
  std::map<std::string, int> noms;
};

Model from_frame(const sabotage::KripkeFrame& f);
sabotage::Valuation to_valuation(const Model& m);

/// Truth of `f` at `w` when the edges in `deleted` are gone.
bool holds(const Model& m, const EdgeSet& deleted, int w, const sabotage::Formula& f);
bool holds(const Model& m, const sabotage::Statement& s);

/// Names a statement needs interpreted.
std::set<std::string> free_noms(const sabotage::Statement& s);
std::set<std::string> props_of(const sabotage::Statement& s);

/// Calls `fn(model)` for every valuation of `props` and every assignment of
/// `noms` over the frame of `base`. Stops early when fn returns false; the
/// return value is false iff it stopped early.
template <typename Fn>
bool for_each_valuation(const Model& base, const std::vector<std::string>& props,
                        const std::vector<std::string>& noms, Fn&& fn);

/// All frames with exactly n worlds.
std::vector<Model> frames(int n);

}  // namespace oracle

#include "oracle_inl.hpp"
