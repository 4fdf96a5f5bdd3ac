#include "sabotage/syntax.hpp"

#include <algorithm>
#include <functional>

namespace sabotage {

std::string_view polarity_name(Polarity p) {
  switch (p) {
    case Polarity::Positive: return "positive";
    case Polarity::Negative: return "negative";
    case Polarity::Both: return "both";
    case Polarity::Absent: return "absent";
  }
  return "?";
}

Polarity flip(Polarity p) {
  switch (p) {
    case Polarity::Positive: return Polarity::Negative;
    case Polarity::Negative: return Polarity::Positive;
    default: return p;
  }
}

Polarity join(Polarity a, Polarity b) {
  if (a == Polarity::Absent) return b;
  if (b == Polarity::Absent) return a;
  return a == b ? a : Polarity::Both;
}

Polarity polarity(const Formula& f, const std::string& p) {
  switch (f.kind()) {
    case Kind::Prop:
      return f.name() == p ? Polarity::Positive : Polarity::Absent;
    case Kind::Bot:
    case Kind::Top:
    case Kind::Nom:
      return Polarity::Absent;
    case Kind::Not:
      return flip(polarity(f.child(), p));
    case Kind::Imp:
      return join(flip(polarity(f.left(), p)), polarity(f.right(), p));
    case Kind::Iff: {
      Polarity inner = join(polarity(f.left(), p), polarity(f.right(), p));
      return inner == Polarity::Absent ? Polarity::Absent : Polarity::Both;
    }
    default: {
      Polarity acc = Polarity::Absent;
      for (const auto& c : f.children()) acc = join(acc, polarity(c, p));
      return acc;
    }
  }
}

namespace {

void collect_props(const Formula& f, std::set<std::string>& out) {
  if (f.is(Kind::Prop)) out.insert(f.name());
  for (const auto& c : f.children()) collect_props(c, out);
}

void collect_nominals(const Formula& f, std::set<std::string>& out) {
  if (f.is(Kind::Nom) || f.is(Kind::ForallNom) || f.is(Kind::ExistsNom)) out.insert(f.name());
  for (const auto& [a, b] : f.labels()) {
    out.insert(a);
    out.insert(b);
  }
  for (const auto& c : f.children()) collect_nominals(c, out);
}

void collect_free(const Formula& f, std::multiset<std::string>& bound, std::set<std::string>& out) {
  auto note = [&](const std::string& n) {
    if (!bound.contains(n)) out.insert(n);
  };
  if (f.is(Kind::Nom)) note(f.name());
  for (const auto& [a, b] : f.labels()) {
    note(a);
    note(b);
  }
  if (f.is(Kind::ForallNom) || f.is(Kind::ExistsNom)) {
    auto it = bound.insert(f.name());
    collect_free(f.child(), bound, out);
    bound.erase(it);
    return;
  }
  for (const auto& c : f.children()) collect_free(c, bound, out);
}

bool any_node(const Formula& f, const std::function<bool(const Formula&)>& pred) {
  if (pred(f)) return true;
  return std::ranges::any_of(f.children(), [&](const Formula& c) { return any_node(c, pred); });
}

}  // namespace

std::set<std::string> props(const Formula& f) {
  std::set<std::string> out;
  collect_props(f, out);
  return out;
}

std::set<std::string> all_nominals(const Formula& f) {
  std::set<std::string> out;
  collect_nominals(f, out);
  return out;
}

std::set<std::string> free_nominals(const Formula& f) {
  std::set<std::string> out;
  std::multiset<std::string> bound;
  collect_free(f, bound, out);
  return out;
}

bool is_pure(const Formula& f) {
  return !any_node(f, [](const Formula& g) { return g.is(Kind::Prop); });
}

bool is_static(const Formula& f) {
  return !any_node(f, [](const Formula& g) { return g.is(Kind::SBox) || g.is(Kind::SDia); });
}

bool is_base_language(const Formula& f) {
  return !any_node(f, [](const Formula& g) {
    switch (g.kind()) {
      case Kind::Bot:
      case Kind::Top:
      case Kind::Prop:
      case Kind::Not:
      case Kind::And:
      case Kind::Or:
      case Kind::Imp:
      case Kind::Iff:
      case Kind::Box:
      case Kind::Dia:
      case Kind::SBox:
      case Kind::SDia:
        return false;
      default:
        return true;
    }
  });
}

bool is_contextual(Kind k) {
  return k == Kind::Box || k == Kind::Dia || k == Kind::SBox || k == Kind::SDia;
}

bool is_context_free(const Formula& f) {
  return !any_node(f, [](const Formula& g) { return is_contextual(g.kind()); });
}

std::size_t size(const Formula& f) {
  std::size_t n = 1;
  for (const auto& c : f.children()) n += size(c);
  return n;
}

std::size_t depth(const Formula& f) {
  std::size_t d = 0;
  for (const auto& c : f.children()) d = std::max(d, depth(c));
  return f.arity() == 0 ? 0 : d + 1;
}

Formula substitute(const Formula& f, const std::string& p, const Formula& g) {
  if (f.is(Kind::Prop)) return f.name() == p ? g : f;
  if (f.arity() == 0) return f;
  std::vector<Formula> kids;
  kids.reserve(f.arity());
  bool changed = false;
  for (const auto& c : f.children()) {
    kids.push_back(substitute(c, p, g));
    changed = changed || !(kids.back() == c);
  }
  return changed ? f.with_children(std::move(kids)) : f;
}

Formula eliminate_iff(const Formula& f) {
  if (f.arity() == 0) return f;
  std::vector<Formula> kids;
  kids.reserve(f.arity());
  for (const auto& c : f.children()) kids.push_back(eliminate_iff(c));
  if (f.is(Kind::Iff)) return conj(imp(kids[0], kids[1]), imp(kids[1], kids[0]));
  return f.with_children(std::move(kids));
}

Formula fold_constants(const Formula& f) {
  if (f.arity() == 0) return f;
  std::vector<Formula> kids;
  kids.reserve(f.arity());
  for (const auto& c : f.children()) kids.push_back(fold_constants(c));
  auto is_top = [](const Formula& g) { return g.is(Kind::Top); };
  auto is_bot = [](const Formula& g) { return g.is(Kind::Bot); };

  switch (f.kind()) {
    case Kind::Not:
      if (is_top(kids[0])) return bot();
      if (is_bot(kids[0])) return top();
      break;
    case Kind::And:
      if (is_bot(kids[0]) || is_bot(kids[1])) return bot();
      if (is_top(kids[0])) return kids[1];
      if (is_top(kids[1])) return kids[0];
      break;
    case Kind::Or:
      if (is_top(kids[0]) || is_top(kids[1])) return top();
      if (is_bot(kids[0])) return kids[1];
      if (is_bot(kids[1])) return kids[0];
      break;
    case Kind::Imp:
      if (is_bot(kids[0]) || is_top(kids[1])) return top();
      if (is_top(kids[0])) return kids[1];
      if (is_bot(kids[1])) return fold_constants(neg(kids[0]));
      break;
    case Kind::Iff:
      if (is_top(kids[0])) return kids[1];
      if (is_top(kids[1])) return kids[0];
      break;
    case Kind::Box:
    case Kind::SBox:
    case Kind::LBox:
    case Kind::InvLBox:
    case Kind::GBox:
    case Kind::ForallNom:
      if (is_top(kids[0])) return top();
      break;
    case Kind::Dia:
    case Kind::SDia:
    case Kind::LDia:
    case Kind::InvLDia:
    case Kind::GDia:
    case Kind::ExistsNom:
      if (is_bot(kids[0])) return bot();
      break;
    default:
      break;
  }
  return f.with_children(std::move(kids));
}

}  // namespace sabotage
