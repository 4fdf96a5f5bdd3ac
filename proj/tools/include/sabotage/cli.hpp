#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sabotage/fol.hpp"
#include "sabotage/frame.hpp"
#include "sabotage/statement.hpp"

namespace sabotage {

/// Exit statuses shared by every subcommand.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitInputError = 2 };

/// Hard cap on `--max-worlds`.
inline constexpr int kMaxWorldsCap = 4;

struct CorpusEntry {
  std::string label;
  int line = 0;
  std::string text;
  Ineq ineq;
};

/// Reads a corpus file: one formula or `phi <= psi` per line, `#` comments,
/// optional `name:` prefix. Throws std::invalid_argument naming the line.
std::vector<CorpusEntry> load_corpus(const std::string& path);
std::vector<CorpusEntry> parse_corpus(const std::string& content);

struct FrameCheck {
  int frames = 0;
  std::vector<int> per_size;  // frames checked at n = 1, 2, ...
  std::optional<KripkeFrame> counterexample;
  bool modal_valid = false;  // at the counterexample
  bool passed() const { return !counterexample; }
};

/// Compares frame validity of `input` with truth of the closed sentence `fo`
/// on every frame with 1..max_worlds worlds; stops at the first disagreement
/// in enumeration order. Frames are split across threads.
FrameCheck check_correspondent(const Ineq& input, const FOFormula& fo, int max_worlds);

/// Entry point of the `sabotage` tool.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sabotage
