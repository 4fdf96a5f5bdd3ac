#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sabotage {

/// Largest supported frame; edges of an n-world frame are packed into n*n bits.
inline constexpr int kMaxFrameWorlds = 5;

using WorldSet = std::uint32_t;
using EdgeMask = std::uint32_t;

/// Finite frame on worlds {0..n-1} with baseline relation R0.
class KripkeFrame {
 public:
  /// Throws std::invalid_argument when n is outside [1, kMaxFrameWorlds] or an
  /// edge endpoint is out of range.
  KripkeFrame(int n, const std::vector<std::pair<int, int>>& edges);
  static KripkeFrame from_mask(int n, EdgeMask edges);

  int size() const { return n_; }
  EdgeMask edges() const { return edges_; }
  WorldSet all_worlds() const { return (WorldSet{1} << n_) - 1u; }
  bool has_edge(int a, int b) const { return (edges_ >> edge_index(a, b)) & 1u; }
  int edge_index(int a, int b) const { return a * n_ + b; }
  std::vector<std::pair<int, int>> edge_list() const;

  friend bool operator==(const KripkeFrame&, const KripkeFrame&) = default;

 private:
  KripkeFrame() = default;
  int n_ = 1;
  EdgeMask edges_ = 0;
};

/// Interpretation of propositions (as world sets) and nominals (as worlds).
struct Valuation {
  std::map<std::string, WorldSet> props;
  std::map<std::string, int> noms;

  Valuation& set_prop(const std::string& p, std::initializer_list<int> worlds);
  Valuation& set_nom(const std::string& i, int w) {
    noms[i] = w;
    return *this;
  }
};

/// Edges removed from R0 by enclosing sabotage operators; the current relation
/// is R0 minus `deleted`.
struct DeletionContext {
  EdgeMask deleted = 0;
};

/// All 2^(n*n) frames on n worlds, ordered by the edge set read as an n*n-bit
/// integer. Throws std::invalid_argument if n < 1 or n > cap.
std::vector<KripkeFrame> enumerate_frames(int n, int cap = 3);

/// Parses `n=3; edges=(0,1),(1,2)`.
KripkeFrame parse_frame_literal(std::string_view text);
/// Parses `{"n": 3, "edges": [[0,1],[1,2]]}`.
KripkeFrame parse_frame_json(std::string_view text);
std::string to_literal(const KripkeFrame& f);
std::string to_json(const KripkeFrame& f);

}  // namespace sabotage
