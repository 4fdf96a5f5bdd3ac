#include "sabotage/printer.hpp"

#include "sabotage/statement.hpp"

namespace sabotage {

namespace {

// Binding strength; higher binds tighter.
enum Level { kIff = 1, kImp = 2, kOr = 3, kAnd = 4, kPrefix = 5, kAtom = 6 };

int level(const Formula& f) {
  switch (f.kind()) {
    case Kind::Iff: return kIff;
    case Kind::Imp: return kImp;
    case Kind::Or: return kOr;
    case Kind::And: return kAnd;
    case Kind::Bot:
    case Kind::Top:
    case Kind::Prop:
    case Kind::Nom: return kAtom;
    default: return kPrefix;
  }
}

std::string labels_text(const EdgeLabelSet& s) {
  std::string out;
  for (const auto& [a, b] : s) {
    if (!out.empty()) out += ",";
    out += "(" + a + "," + b + ")";
  }
  return out;
}

std::string prefix_token(const Formula& f) {
  switch (f.kind()) {
    case Kind::Not: return "~";
    case Kind::Dia: return "<>";
    case Kind::Box: return "[]";
    case Kind::SDia: return "<!>";
    case Kind::SBox: return "[!]";
    case Kind::LBox: return "box^{" + labels_text(f.labels()) + "} ";
    case Kind::LDia: return "dia^{" + labels_text(f.labels()) + "} ";
    case Kind::InvLBox: return "inv-box^{" + labels_text(f.labels()) + "} ";
    case Kind::InvLDia: return "inv-dia^{" + labels_text(f.labels()) + "} ";
    case Kind::GBox: return "A ";
    case Kind::GDia: return "E ";
    case Kind::ForallNom: return "forall " + f.name() + ". ";
    case Kind::ExistsNom: return "exists " + f.name() + ". ";
    default: return "";
  }
}

std::string print(const Formula& f);

std::string wrap_if(bool paren, const Formula& f) {
  return paren ? "(" + print(f) + ")" : print(f);
}

std::string print(const Formula& f) {
  switch (f.kind()) {
    case Kind::Bot: return "bot";
    case Kind::Top: return "top";
    case Kind::Prop:
    case Kind::Nom: return f.name();
    case Kind::And:
    case Kind::Or:
    case Kind::Iff: {
      // Left-associative: a right operand at the same level needs parentheses.
      int lv = level(f);
      std::string op = f.is(Kind::And) ? " & " : f.is(Kind::Or) ? " | " : " <-> ";
      return wrap_if(level(f.left()) < lv, f.left()) + op +
             wrap_if(level(f.right()) <= lv, f.right());
    }
    case Kind::Imp:
      return wrap_if(level(f.left()) <= kImp, f.left()) + " -> " +
             wrap_if(level(f.right()) < kImp, f.right());
    default:
      return prefix_token(f) + wrap_if(level(f.child()) < kPrefix, f.child());
  }
}

}  // namespace

std::string print_formula(const Formula& f) { return print(f); }

std::string to_string(const EdgeLabelSet& s) { return labels_text(s); }

}  // namespace sabotage
