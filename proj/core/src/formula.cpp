#include "sabotage/formula.hpp"

#include <functional>
#include <stdexcept>

namespace sabotage {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t arity_of(Kind k) {
  switch (k) {
    case Kind::Bot:
    case Kind::Top:
    case Kind::Prop:
    case Kind::Nom:
      return 0;
    case Kind::And:
    case Kind::Or:
    case Kind::Imp:
    case Kind::Iff:
      return 2;
    default:
      return 1;
  }
}

bool carries_labels(Kind k) {
  return k == Kind::LBox || k == Kind::LDia || k == Kind::InvLBox || k == Kind::InvLDia;
}

bool carries_name(Kind k) {
  return k == Kind::Prop || k == Kind::Nom || k == Kind::ForallNom || k == Kind::ExistsNom;
}

}  // namespace

std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::Bot: return "bot";
    case Kind::Top: return "top";
    case Kind::Prop: return "prop";
    case Kind::Nom: return "nom";
    case Kind::Not: return "not";
    case Kind::And: return "and";
    case Kind::Or: return "or";
    case Kind::Imp: return "imp";
    case Kind::Iff: return "iff";
    case Kind::Box: return "box";
    case Kind::Dia: return "dia";
    case Kind::SBox: return "sbox";
    case Kind::SDia: return "sdia";
    case Kind::LBox: return "lbox";
    case Kind::LDia: return "ldia";
    case Kind::InvLBox: return "inv-lbox";
    case Kind::InvLDia: return "inv-ldia";
    case Kind::GBox: return "gbox";
    case Kind::GDia: return "gdia";
    case Kind::ForallNom: return "forall-nom";
    case Kind::ExistsNom: return "exists-nom";
  }
  return "?";
}

bool is_reserved_nominal_name(std::string_view name) {
  if (name.size() < 2 || name[0] != 'i') return false;
  for (std::size_t k = 1; k < name.size(); ++k) {
    if (name[k] < '0' || name[k] > '9') return false;
  }
  return true;
}

Formula::Formula() : Formula(top()) {}

Formula Formula::make(Kind kind, std::string name, EdgeLabelSet labels,
                      std::vector<Formula> children) {
  if (children.size() != arity_of(kind)) {
    throw std::invalid_argument("wrong number of children for " + std::string(kind_name(kind)));
  }
  if (carries_name(kind) && name.empty()) {
    throw std::invalid_argument("empty name for " + std::string(kind_name(kind)));
  }
  if (!carries_name(kind)) name.clear();
  if (!carries_labels(kind)) labels.clear();
  if (kind == Kind::Prop && is_reserved_nominal_name(name)) {
    throw std::invalid_argument("proposition name '" + name + "' is reserved for nominals");
  }
  for (const auto& [a, b] : labels) {
    if (a.empty() || b.empty()) throw std::invalid_argument("empty nominal in edge label");
  }

  std::size_t h = std::hash<int>{}(static_cast<int>(kind));
  h = mix(h, std::hash<std::string>{}(name));
  for (const auto& [a, b] : labels) {
    h = mix(h, std::hash<std::string>{}(a));
    h = mix(h, std::hash<std::string>{}(b));
  }
  for (const auto& c : children) h = mix(h, c.hash());

  return Formula(std::make_shared<const Node>(
      Node{kind, std::move(name), std::move(labels), std::move(children), h}));
}

Formula Formula::with_children(std::vector<Formula> kids) const {
  return make(kind(), name(), labels(), std::move(kids));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind()) return false;
  return a.name() == b.name() && a.labels() == b.labels() && a.children() == b.children();
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (auto c = a.name() <=> b.name(); c != 0) return c;
  if (auto c = a.labels() <=> b.labels(); c != 0) return c;
  return a.children() <=> b.children();
}

namespace {
Formula leaf(Kind k, std::string name = {}) { return Formula::make(k, std::move(name), {}, {}); }
Formula unary(Kind k, Formula f) { return Formula::make(k, {}, {}, {std::move(f)}); }
Formula binary(Kind k, Formula a, Formula b) {
  return Formula::make(k, {}, {}, {std::move(a), std::move(b)});
}
}  // namespace

Formula bot() {
  static const Formula f = leaf(Kind::Bot);
  return f;
}
Formula top() {
  static const Formula f = leaf(Kind::Top);
  return f;
}
Formula prop(std::string name) { return leaf(Kind::Prop, std::move(name)); }
Formula nom(std::string name) { return leaf(Kind::Nom, std::move(name)); }
Formula neg(Formula f) { return unary(Kind::Not, std::move(f)); }
Formula conj(Formula a, Formula b) { return binary(Kind::And, std::move(a), std::move(b)); }
Formula disj(Formula a, Formula b) { return binary(Kind::Or, std::move(a), std::move(b)); }
Formula imp(Formula a, Formula b) { return binary(Kind::Imp, std::move(a), std::move(b)); }
Formula iff(Formula a, Formula b) { return binary(Kind::Iff, std::move(a), std::move(b)); }
Formula box(Formula f) { return unary(Kind::Box, std::move(f)); }
Formula dia(Formula f) { return unary(Kind::Dia, std::move(f)); }
Formula sbox(Formula f) { return unary(Kind::SBox, std::move(f)); }
Formula sdia(Formula f) { return unary(Kind::SDia, std::move(f)); }
Formula lbox(EdgeLabelSet s, Formula f) {
  return Formula::make(Kind::LBox, {}, std::move(s), {std::move(f)});
}
Formula ldia(EdgeLabelSet s, Formula f) {
  return Formula::make(Kind::LDia, {}, std::move(s), {std::move(f)});
}
Formula inv_lbox(EdgeLabelSet s, Formula f) {
  return Formula::make(Kind::InvLBox, {}, std::move(s), {std::move(f)});
}
Formula inv_ldia(EdgeLabelSet s, Formula f) {
  return Formula::make(Kind::InvLDia, {}, std::move(s), {std::move(f)});
}
Formula gbox(Formula f) { return unary(Kind::GBox, std::move(f)); }
Formula gdia(Formula f) { return unary(Kind::GDia, std::move(f)); }
Formula forall_nom(std::string i, Formula f) {
  return Formula::make(Kind::ForallNom, std::move(i), {}, {std::move(f)});
}
Formula exists_nom(std::string i, Formula f) {
  return Formula::make(Kind::ExistsNom, std::move(i), {}, {std::move(f)});
}

Formula conj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return top();
  Formula acc = fs.front();
  for (std::size_t k = 1; k < fs.size(); ++k) acc = conj(acc, fs[k]);
  return acc;
}

Formula disj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return bot();
  Formula acc = fs.front();
  for (std::size_t k = 1; k < fs.size(); ++k) acc = disj(acc, fs[k]);
  return acc;
}

}  // namespace sabotage
