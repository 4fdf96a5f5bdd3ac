#include <cctype>
#include <vector>

#include "sabotage/fol.hpp"

namespace sabotage {

namespace {

struct TptpError {
  std::string message;
};

// Recursive descent over the fof fragment the emitter produces.
class Checker {
 public:
  explicit Checker(const std::string& s) : s_(s) {}

  void annotated() {
    expect_word("fof");
    expect("(");
    lower_word("formula name");
    expect(",");
    const std::string role = lower_word("role");
    if (role != "axiom" && role != "conjecture" && role != "hypothesis") fail("unsupported role '" + role + "'");
    expect(",");
    formula();
    expect(")");
    expect(".");
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw TptpError{what + " at offset " + std::to_string(pos_)};
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(const std::string& tok) {
    skip_ws();
    return s_.compare(pos_, tok.size(), tok) == 0;
  }

  bool accept(const std::string& tok) {
    if (!peek(tok)) return false;
    pos_ += tok.size();
    return true;
  }

  void expect(const std::string& tok) {
    if (!accept(tok)) fail("expected '" + tok + "'");
  }

  std::string word() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  std::string lower_word(const char* what) {
    const std::string w = word();
    if (w.empty() || !std::islower(static_cast<unsigned char>(w[0]))) fail(std::string("expected ") + what);
    return w;
  }

  void expect_word(const std::string& w) {
    if (word() != w) fail("expected '" + w + "'");
  }

  std::string variable() {
    const std::string w = word();
    if (w.empty() || !std::isupper(static_cast<unsigned char>(w[0]))) fail("expected a variable");
    return w;
  }

  void bound_variable() {
    const std::string v = variable();
    for (const auto& b : bound_) {
      if (b == v) return;
    }
    fail("unbound variable " + v);
  }

  void formula() {
    unit();
    if (peek("&") || peek("|")) {
      const std::string op = peek("&") ? "&" : "|";
      while (accept(op)) unit();
      if (peek("&") || peek("|") || peek("=>") || peek("<=>")) fail("mixed connectives need parentheses");
    } else if (accept("=>") || accept("<=>")) {
      unit();
      if (peek("&") || peek("|") || peek("=>") || peek("<=>")) fail("binary connective needs parentheses");
    }
  }

  void unit() {
    if (accept("(")) {
      formula();
      expect(")");
    } else if (accept("~")) {
      unit();
    } else if (peek("!=")) {
      fail("unexpected '!='");
    } else if (accept("!") || accept("?")) {
      expect("[");
      const std::size_t depth = bound_.size();
      do bound_.push_back(variable());
      while (accept(","));
      expect("]");
      expect(":");
      unit();
      bound_.resize(depth);
    } else if (accept("$true") || accept("$false")) {
    } else {
      atom();
    }
  }

  void atom() {
    skip_ws();
    if (pos_ < s_.size() && std::isupper(static_cast<unsigned char>(s_[pos_]))) {
      bound_variable();
      if (!accept("!=") && !accept("=")) fail("expected '=' or '!='");
      bound_variable();
      return;
    }
    const std::string name = word();
    if (name.empty()) fail("expected a formula");
    std::size_t arity = 0;
    if (name == "r") {
      arity = 2;
    } else if (name.size() > 2 && name.compare(0, 2, "p_") == 0) {
      arity = 1;
    } else {
      fail("unknown predicate '" + name + "'");
    }
    expect("(");
    std::size_t args = 0;
    do {
      bound_variable();
      ++args;
    } while (accept(","));
    expect(")");
    if (args != arity) fail("'" + name + "' expects " + std::to_string(arity) + " arguments");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  std::vector<std::string> bound_;
};

}  // namespace

std::optional<std::string> validate_tptp(const std::string& text) {
  try {
    Checker(text).annotated();
  } catch (const TptpError& e) {
    return e.message;
  }
  return std::nullopt;
}

}  // namespace sabotage
