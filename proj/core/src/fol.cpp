#include "sabotage/fol.hpp"

#include <algorithm>

namespace sabotage {

FOFormula FOFormula::make(FOKind kind, std::vector<FOTerm> terms, std::string pred, std::vector<FOFormula> kids) {
  std::size_t want_terms = 0;
  switch (kind) {
    case FOKind::Eq:
    case FOKind::Rel: want_terms = 2; break;
    case FOKind::Pred:
    case FOKind::Forall:
    case FOKind::Exists: want_terms = 1; break;
    default: break;
  }
  if (terms.size() != want_terms) throw std::invalid_argument("first-order node has the wrong number of terms");
  const bool unary = kind == FOKind::Not || kind == FOKind::Forall || kind == FOKind::Exists;
  if (unary && kids.size() != 1) throw std::invalid_argument("first-order node needs one subformula");
  if (kind == FOKind::Imp && kids.size() != 2) throw std::invalid_argument("implication needs two subformulas");
  return FOFormula(std::make_shared<const Node>(Node{kind, std::move(terms), std::move(pred), std::move(kids)}));
}

bool operator==(const FOFormula& a, const FOFormula& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.terms() == b.terms() && a.pred() == b.pred() && a.children() == b.children();
}

FOFormula fo_eq(FOTerm a, FOTerm b) { return FOFormula::make(FOKind::Eq, {std::move(a), std::move(b)}, "", {}); }
FOFormula fo_neq(FOTerm a, FOTerm b) { return fo_not(fo_eq(std::move(a), std::move(b))); }
FOFormula fo_rel(FOTerm a, FOTerm b) { return FOFormula::make(FOKind::Rel, {std::move(a), std::move(b)}, "", {}); }
FOFormula fo_pred(std::string p, FOTerm t) { return FOFormula::make(FOKind::Pred, {std::move(t)}, std::move(p), {}); }
FOFormula fo_not(FOFormula f) { return FOFormula::make(FOKind::Not, {}, "", {std::move(f)}); }

FOFormula fo_and(std::vector<FOFormula> fs) {
  if (fs.size() == 1) return fs.front();
  return FOFormula::make(FOKind::And, {}, "", std::move(fs));
}

FOFormula fo_or(std::vector<FOFormula> fs) {
  if (fs.size() == 1) return fs.front();
  return FOFormula::make(FOKind::Or, {}, "", std::move(fs));
}

FOFormula fo_imp(FOFormula a, FOFormula b) {
  return FOFormula::make(FOKind::Imp, {}, "", {std::move(a), std::move(b)});
}
FOFormula fo_forall(FOTerm v, FOFormula body) {
  return FOFormula::make(FOKind::Forall, {std::move(v)}, "", {std::move(body)});
}
FOFormula fo_exists(FOTerm v, FOFormula body) {
  return FOFormula::make(FOKind::Exists, {std::move(v)}, "", {std::move(body)});
}
FOFormula fo_true() { return FOFormula::make(FOKind::And, {}, "", {}); }
FOFormula fo_false() { return FOFormula::make(FOKind::Or, {}, "", {}); }

namespace {

void collect_free(const FOFormula& f, std::vector<std::string>& bound, std::vector<FOTerm>& out) {
  switch (f.kind()) {
    case FOKind::Eq:
    case FOKind::Rel:
    case FOKind::Pred:
      for (const auto& t : f.terms()) {
        const bool is_bound = std::find(bound.begin(), bound.end(), t.name) != bound.end();
        const bool seen = std::any_of(out.begin(), out.end(), [&](const FOTerm& u) { return u.name == t.name; });
        if (!is_bound && !seen) out.push_back(t);
      }
      return;
    case FOKind::Forall:
    case FOKind::Exists:
      bound.push_back(f.terms().front().name);
      collect_free(f.child(), bound, out);
      bound.pop_back();
      return;
    default:
      for (const auto& c : f.children()) collect_free(c, bound, out);
  }
}

bool no_shadow(const FOFormula& f, std::vector<std::string>& bound) {
  if (f.is(FOKind::Forall) || f.is(FOKind::Exists)) {
    const auto& v = f.terms().front().name;
    if (std::find(bound.begin(), bound.end(), v) != bound.end()) return false;
    bound.push_back(v);
    const bool ok = no_shadow(f.child(), bound);
    bound.pop_back();
    return ok;
  }
  return std::all_of(f.children().begin(), f.children().end(),
                     [&](const FOFormula& c) { return no_shadow(c, bound); });
}

std::vector<FOTerm> free_terms(const FOFormula& f) {
  std::vector<std::string> bound;
  std::vector<FOTerm> out;
  collect_free(f, bound, out);
  return out;
}

}  // namespace

std::vector<std::string> free_names(const FOFormula& f) {
  std::vector<std::string> out;
  for (auto& t : free_terms(f)) out.push_back(std::move(t.name));
  return out;
}

bool has_no_shadowing(const FOFormula& f) {
  std::vector<std::string> bound;
  return no_shadow(f, bound);
}

FOFormula universal_closure(const FOFormula& f) {
  const auto terms = free_terms(f);
  FOFormula out = f;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) out = fo_forall(*it, out);
  return out;
}

FOFormula correspondent(const std::vector<QuasiUQ>& output) {
  std::vector<FOFormula> parts;
  parts.reserve(output.size());
  for (const auto& q : output) parts.push_back(universal_closure(st_statement(Statement{q})));
  return fo_and(std::move(parts));
}

FOFormat parse_fo_format(const std::string& name) {
  if (name == "text") return FOFormat::Text;
  if (name == "json") return FOFormat::Json;
  if (name == "tptp") return FOFormat::Tptp;
  throw std::invalid_argument("unknown format '" + name + "' (expected text, json or tptp)");
}

}  // namespace sabotage
