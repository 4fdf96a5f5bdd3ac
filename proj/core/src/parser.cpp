#include "sabotage/parser.hpp"

#include <cctype>
#include <optional>

namespace sabotage {

namespace {

std::string describe(std::size_t position, const std::vector<std::string>& expected,
                     const std::string& found) {
  std::string msg = "parse error at offset " + std::to_string(position) + ": expected ";
  if (expected.size() > 1) msg += "one of ";
  for (std::size_t k = 0; k < expected.size(); ++k) {
    if (k) msg += ", ";
    msg += expected[k];
  }
  msg += " but found " + found;
  return msg;
}

enum class Tok {
  End,
  LParen,
  RParen,
  Not,
  And,
  Or,
  Imp,
  Iff,
  Dia,
  Box,
  SDia,
  SBox,
  Leq,
  Bot,
  Top,
  Ident,
};

struct Token {
  Tok tok;
  std::size_t pos;
  std::string text;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : src_(s) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
      if (i_ >= src_.size()) {
        out.push_back({Tok::End, i_, "end of input"});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  bool starts(std::string_view lit) const { return src_.substr(i_).starts_with(lit); }

  Token take(Tok t, std::size_t len) {
    Token tok{t, i_, "'" + std::string(src_.substr(i_, len)) + "'"};
    i_ += len;
    return tok;
  }

  Token next() {
    static constexpr std::pair<std::string_view, Tok> kSymbols[] = {
        {"<->", Tok::Iff}, {"<!>", Tok::SDia}, {"[!]", Tok::SBox}, {"<>", Tok::Dia},
        {"[]", Tok::Box},  {"<=", Tok::Leq},   {"->", Tok::Imp},   {"(", Tok::LParen},
        {")", Tok::RParen}, {"~", Tok::Not},   {"&", Tok::And},    {"|", Tok::Or},
    };
    for (const auto& [lit, t] : kSymbols) {
      if (starts(lit)) return take(t, lit.size());
    }
    char c = src_[i_];
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[i_]))) ++i_;
      std::string word(src_.substr(start, i_ - start));
      if (word == "bot") return {Tok::Bot, start, "'bot'"};
      if (word == "top") return {Tok::Top, start, "'top'"};
      if (is_reserved_nominal_name(word)) {
        throw ParseError(start, {"proposition name (names i<digits> are reserved)"},
                         "'" + word + "'");
      }
      return {Tok::Ident, start, word};
    }
    throw ParseError(i_, {"formula"}, "'" + std::string(1, c) + "'");
  }

  std::string_view src_;
  std::size_t i_ = 0;
};

const std::vector<std::string>& formula_start() {
  static const std::vector<std::string> v = {"'bot'", "'top'", "proposition", "'~'", "'<>'",
                                             "'[]'", "'<!>'", "'[!]'", "'('"};
  return v;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula formula() { return parse_iff(); }

  const Token& peek() const { return toks_[k_]; }
  bool accept(Tok t) {
    if (peek().tok != t) return false;
    ++k_;
    return true;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    throw ParseError(t.pos, std::move(expected), t.tok == Tok::Ident ? "'" + t.text + "'" : t.text);
  }

 private:
  Formula parse_iff() {
    Formula f = parse_imp();
    while (accept(Tok::Iff)) f = iff(f, parse_imp());
    return f;
  }

  Formula parse_imp() {
    Formula f = parse_or();
    if (accept(Tok::Imp)) return imp(f, parse_imp());
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (accept(Tok::Or)) f = disj(f, parse_and());
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (accept(Tok::And)) f = conj(f, parse_unary());
    return f;
  }

  Formula parse_unary() {
    if (accept(Tok::Not)) return neg(parse_unary());
    if (accept(Tok::Dia)) return dia(parse_unary());
    if (accept(Tok::Box)) return box(parse_unary());
    if (accept(Tok::SDia)) return sdia(parse_unary());
    if (accept(Tok::SBox)) return sbox(parse_unary());
    return parse_atom();
  }

  Formula parse_atom() {
    const Token& t = peek();
    switch (t.tok) {
      case Tok::Bot:
        ++k_;
        return bot();
      case Tok::Top:
        ++k_;
        return top();
      case Tok::Ident: {
        std::string name = t.text;
        ++k_;
        return prop(std::move(name));
      }
      case Tok::LParen: {
        ++k_;
        Formula f = parse_iff();
        if (!accept(Tok::RParen)) fail({"')'", "binary operator"});
        return f;
      }
      default:
        fail(formula_start());
    }
  }

  std::vector<Token> toks_;
  std::size_t k_ = 0;
};

}  // namespace

ParseError::ParseError(std::size_t position, std::vector<std::string> expected, std::string found)
    : std::runtime_error(describe(position, expected, found)),
      position_(position),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

Formula parse_formula(std::string_view text) {
  Parser p(Lexer(text).run());
  Formula f = p.formula();
  if (p.peek().tok != Tok::End) p.fail({"binary operator", "end of input"});
  return f;
}

Ineq parse_inequality(std::string_view text) {
  Parser p(Lexer(text).run());
  Formula lhs = p.formula();
  if (p.accept(Tok::Leq)) {
    Formula rhs = p.formula();
    if (p.peek().tok != Tok::End) p.fail({"binary operator", "end of input"});
    return ineq(lhs, rhs);
  }
  if (p.peek().tok != Tok::End) p.fail({"binary operator", "'<='", "end of input"});
  if (lhs.is(Kind::Imp)) return ineq(lhs.left(), lhs.right());
  return ineq(top(), lhs);
}

}  // namespace sabotage
