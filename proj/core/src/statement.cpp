#include "sabotage/statement.hpp"

#include "sabotage/printer.hpp"
#include "sabotage/syntax.hpp"

namespace sabotage {

Mega mega_leaf(Ineq i) { return Mega{std::move(i)}; }

Mega mega_conj(Mega a, Mega b) {
  return Mega{MegaConj{std::make_shared<const Mega>(std::move(a)),
                       std::make_shared<const Mega>(std::move(b))}};
}

Mega mega_guard(std::string from, std::string to, EdgeLabelSet ctx, Mega body) {
  return Mega{MegaGuard{std::move(from), std::move(to), std::move(ctx),
                        std::make_shared<const Mega>(std::move(body))}};
}

bool operator==(const Mega& a, const Mega& b) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* x = std::get_if<Ineq>(&a.node)) return *x == std::get<Ineq>(b.node);
  if (const auto* x = std::get_if<MegaConj>(&a.node)) {
    const auto& y = std::get<MegaConj>(b.node);
    return *x->left == *y.left && *x->right == *y.right;
  }
  const auto& x = std::get<MegaGuard>(a.node);
  const auto& y = std::get<MegaGuard>(b.node);
  return x.from == y.from && x.to == y.to && x.ctx == y.ctx && *x.body == *y.body;
}

GuardedBody unguard(const Mega& m) {
  GuardedBody out{{}, m};
  while (const auto* g = std::get_if<MegaGuard>(&out.body.node)) {
    out.guards.push_back(Guard{g->from, g->to, g->ctx});
    Mega next = *g->body;
    out.body = std::move(next);
  }
  return out;
}

Mega reguard(const std::vector<Guard>& guards, Mega body) {
  for (auto it = guards.rbegin(); it != guards.rend(); ++it) {
    body = mega_guard(it->from, it->to, it->ctx, std::move(body));
  }
  return body;
}

std::string to_string(const Ineq& i) {
  std::string rel = "<=";
  if (!i.sup.empty() || !i.sub.empty()) {
    rel += "^{" + to_string(i.sup) + "}_{" + to_string(i.sub) + "}";
  }
  return print_formula(i.lhs) + " " + rel + " " + print_formula(i.rhs);
}

std::string to_string(const Mega& m) {
  if (const auto* x = std::get_if<Ineq>(&m.node)) return to_string(*x);
  if (const auto* x = std::get_if<MegaConj>(&m.node)) {
    return "(" + to_string(*x->left) + " && " + to_string(*x->right) + ")";
  }
  const auto& g = std::get<MegaGuard>(m.node);
  Ineq guard = ineq(nom(g.from), ldia(g.ctx, nom(g.to)), g.ctx, g.ctx);
  return "forall " + g.from + " " + g.to + ". (" + to_string(guard) + " => " + to_string(*g.body) +
         ")";
}

std::string to_string(const UQIneq& u) {
  if (u.binders.empty()) return to_string(u.body);
  std::string out = "forall";
  for (const auto& b : u.binders) out += " " + b;
  return out + ". (" + to_string(u.body) + ")";
}

std::string to_string(const QuasiUQ& q) {
  std::string out;
  for (std::size_t k = 0; k < q.premises.size(); ++k) {
    if (k) out += " && ";
    out += to_string(q.premises[k]);
  }
  return out + (out.empty() ? "=> " : " => ") + to_string(q.conclusion);
}

std::string to_string(const Statement& s) {
  return std::visit([](const auto& x) { return to_string(x); }, s);
}

namespace {

void collect_props(const Ineq& i, std::set<std::string>& out) {
  out.merge(props(i.lhs));
  out.merge(props(i.rhs));
}

void collect_props(const Mega& m, std::set<std::string>& out) {
  if (const auto* x = std::get_if<Ineq>(&m.node)) return collect_props(*x, out);
  if (const auto* x = std::get_if<MegaConj>(&m.node)) {
    collect_props(*x->left, out);
    collect_props(*x->right, out);
    return;
  }
  collect_props(*std::get<MegaGuard>(m.node).body, out);
}

void insert_labels(const EdgeLabelSet& s, std::set<std::string>& out) {
  for (const auto& [a, b] : s) {
    out.insert(a);
    out.insert(b);
  }
}

std::set<std::string> ineq_nominals(const Ineq& i, bool free_only) {
  std::set<std::string> out = free_only ? free_nominals(i.lhs) : all_nominals(i.lhs);
  out.merge(free_only ? free_nominals(i.rhs) : all_nominals(i.rhs));
  insert_labels(i.sup, out);
  insert_labels(i.sub, out);
  return out;
}

std::set<std::string> mega_nominals(const Mega& m, bool free_only) {
  if (const auto* x = std::get_if<Ineq>(&m.node)) return ineq_nominals(*x, free_only);
  if (const auto* x = std::get_if<MegaConj>(&m.node)) {
    auto out = mega_nominals(*x->left, free_only);
    out.merge(mega_nominals(*x->right, free_only));
    return out;
  }
  const auto& g = std::get<MegaGuard>(m.node);
  auto out = mega_nominals(*g.body, free_only);
  if (free_only) {
    out.erase(g.from);
    out.erase(g.to);
  } else {
    out.insert(g.from);
    out.insert(g.to);
  }
  // The guard's own label set is read outside the binders' scope.
  insert_labels(g.ctx, out);
  return out;
}

std::set<std::string> uq_nominals(const UQIneq& u, bool free_only) {
  auto out = ineq_nominals(u.body, free_only);
  for (const auto& b : u.binders) {
    if (free_only) {
      out.erase(b);
    } else {
      out.insert(b);
    }
  }
  return out;
}

std::set<std::string> nominals_of(const Statement& s, bool free_only) {
  if (const auto* x = std::get_if<Ineq>(&s)) return ineq_nominals(*x, free_only);
  if (const auto* x = std::get_if<Mega>(&s)) return mega_nominals(*x, free_only);
  if (const auto* x = std::get_if<UQIneq>(&s)) return uq_nominals(*x, free_only);
  const auto& q = std::get<QuasiUQ>(s);
  auto out = uq_nominals(q.conclusion, free_only);
  for (const auto& p : q.premises) out.merge(uq_nominals(p, free_only));
  return out;
}

Ineq subst(const Ineq& i, const std::string& p, const Formula& g) {
  return Ineq{substitute(i.lhs, p, g), substitute(i.rhs, p, g), i.sup, i.sub};
}

Mega subst(const Mega& m, const std::string& p, const Formula& g) {
  if (const auto* x = std::get_if<Ineq>(&m.node)) return mega_leaf(subst(*x, p, g));
  if (const auto* x = std::get_if<MegaConj>(&m.node)) {
    return mega_conj(subst(*x->left, p, g), subst(*x->right, p, g));
  }
  const auto& gd = std::get<MegaGuard>(m.node);
  return mega_guard(gd.from, gd.to, gd.ctx, subst(*gd.body, p, g));
}

UQIneq subst(const UQIneq& u, const std::string& p, const Formula& g) {
  return UQIneq{u.binders, subst(u.body, p, g)};
}

QuasiUQ subst(const QuasiUQ& q, const std::string& p, const Formula& g) {
  QuasiUQ out{{}, subst(q.conclusion, p, g)};
  for (const auto& x : q.premises) out.premises.push_back(subst(x, p, g));
  return out;
}

}  // namespace

std::set<std::string> props(const Ineq& i) {
  std::set<std::string> out;
  collect_props(i, out);
  return out;
}

std::set<std::string> props(const Statement& s) {
  std::set<std::string> out;
  if (const auto* x = std::get_if<Ineq>(&s)) {
    collect_props(*x, out);
  } else if (const auto* x = std::get_if<Mega>(&s)) {
    collect_props(*x, out);
  } else if (const auto* x = std::get_if<UQIneq>(&s)) {
    collect_props(x->body, out);
  } else {
    const auto& q = std::get<QuasiUQ>(s);
    collect_props(q.conclusion.body, out);
    for (const auto& p : q.premises) collect_props(p.body, out);
  }
  return out;
}

std::set<std::string> free_nominals(const Ineq& i) { return ineq_nominals(i, true); }
std::set<std::string> free_nominals(const Statement& s) { return nominals_of(s, true); }
std::set<std::string> all_nominals(const Statement& s) { return nominals_of(s, false); }

bool is_pure(const Ineq& i) { return is_pure(i.lhs) && is_pure(i.rhs); }
bool is_pure(const Statement& s) { return props(s).empty(); }

Statement substitute(const Statement& s, const std::string& p, const Formula& g) {
  return std::visit([&](const auto& x) -> Statement { return subst(x, p, g); }, s);
}

}  // namespace sabotage
