#include "sabotage/frame.hpp"

#include <cctype>
#include <json.hpp>

namespace sabotage {

KripkeFrame::KripkeFrame(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
  if (n < 1 || n > kMaxFrameWorlds) {
    throw std::invalid_argument("frame size must be in [1, " + std::to_string(kMaxFrameWorlds) +
                                "], got " + std::to_string(n));
  }
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw std::invalid_argument("edge (" + std::to_string(a) + "," + std::to_string(b) +
                                  ") has an endpoint outside the frame");
    }
    edges_ |= EdgeMask{1} << edge_index(a, b);
  }
}

KripkeFrame KripkeFrame::from_mask(int n, EdgeMask edges) {
  KripkeFrame f(n, {});
  EdgeMask full = n * n >= 32 ? ~EdgeMask{0} : ((EdgeMask{1} << (n * n)) - 1);
  if (edges & ~full) throw std::invalid_argument("edge mask exceeds frame size");
  f.edges_ = edges;
  return f;
}

std::vector<std::pair<int, int>> KripkeFrame::edge_list() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (has_edge(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

Valuation& Valuation::set_prop(const std::string& p, std::initializer_list<int> worlds) {
  WorldSet s = 0;
  for (int w : worlds) s |= WorldSet{1} << w;
  props[p] = s;
  return *this;
}

std::vector<KripkeFrame> enumerate_frames(int n, int cap) {
  if (n < 1 || n > cap || n > kMaxFrameWorlds) {
    throw std::invalid_argument("frame enumeration size " + std::to_string(n) +
                                " outside [1, " + std::to_string(cap) + "]");
  }
  const std::uint64_t count = std::uint64_t{1} << (n * n);
  std::vector<KripkeFrame> out;
  out.reserve(count);
  for (std::uint64_t m = 0; m < count; ++m) {
    out.push_back(KripkeFrame::from_mask(n, static_cast<EdgeMask>(m)));
  }
  return out;
}

namespace {

class LiteralReader {
 public:
  explicit LiteralReader(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool accept(char c) {
    skip_ws();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("'") + c + "'");
  }
  void expect_word(std::string_view w) {
    skip_ws();
    if (s_.substr(i_, w.size()) != w) fail("'" + std::string(w) + "'");
    i_ += w.size();
  }
  int number() {
    skip_ws();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("number");
    return std::stoi(std::string(s_.substr(start, i_ - start)));
  }
  bool at_end() {
    skip_ws();
    return i_ >= s_.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("frame literal: expected " + what + " at offset " +
                                std::to_string(i_));
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

KripkeFrame parse_frame_literal(std::string_view text) {
  LiteralReader r(text);
  r.expect_word("n");
  r.expect('=');
  int n = r.number();
  std::vector<std::pair<int, int>> edges;
  if (r.accept(';')) {
    if (!r.at_end()) {
      r.expect_word("edges");
      r.expect('=');
      if (!r.at_end()) {
        do {
          r.expect('(');
          int a = r.number();
          r.expect(',');
          int b = r.number();
          r.expect(')');
          edges.emplace_back(a, b);
        } while (r.accept(','));
      }
    }
  }
  if (!r.at_end()) r.fail("end of input");
  return KripkeFrame(n, edges);
}

KripkeFrame parse_frame_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a pair");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return KripkeFrame(j.at("n").get<int>(), edges);
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("frame json: ") + ex.what());
  }
}

std::string to_literal(const KripkeFrame& f) {
  std::string out = "n=" + std::to_string(f.size()) + "; edges=";
  bool first = true;
  for (const auto& [a, b] : f.edge_list()) {
    if (!first) out += ",";
    first = false;
    out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  return out;
}

std::string to_json(const KripkeFrame& f) {
  nlohmann::json j;
  j["n"] = f.size();
  j["edges"] = nlohmann::json::array();
  for (const auto& [a, b] : f.edge_list()) j["edges"].push_back({a, b});
  return j.dump();
}

}  // namespace sabotage
