#include "sabotage/sahlqvist.hpp"

#include <algorithm>
#include <stdexcept>

#include "sabotage/syntax.hpp"

namespace sabotage {

std::string to_string(const OrderType& eps) {
  if (eps.empty()) return "{}";
  std::string out;
  for (const auto& [p, o] : eps) {
    if (!out.empty()) out += ",";
    out += p + "=" + (o == Order::One ? "1" : "d");
  }
  return out;
}

OrderType parse_order_type(const std::string& text) {
  OrderType eps;
  std::size_t pos = 0;
  auto trim = [](std::string s) {
    auto ws = [](unsigned char c) { return std::isspace(c); };
    while (!s.empty() && ws(s.front())) s.erase(s.begin());
    while (!s.empty() && ws(s.back())) s.pop_back();
    return s;
  };
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string item = trim(text.substr(pos, comma - pos));
    pos = comma + 1;
    if (item.empty()) {
      if (comma == text.size()) break;
      throw std::invalid_argument("order-type: empty entry");
    }
    std::size_t eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("order-type: missing '=' in '" + item + "'");
    std::string var = trim(item.substr(0, eq));
    std::string val = trim(item.substr(eq + 1));
    if (var.empty()) throw std::invalid_argument("order-type: missing variable in '" + item + "'");
    Order o;
    if (val == "1") {
      o = Order::One;
    } else if (val == "d" || val == "∂" || val == "dual") {
      o = Order::Dual;
    } else {
      throw std::invalid_argument("order-type: value for '" + var + "' must be 1 or d");
    }
    if (!eps.emplace(var, o).second) {
      throw std::invalid_argument("order-type: duplicate variable '" + var + "'");
    }
  }
  return eps;
}

SignedTree build_signed_tree(const Formula& f, Sign root) {
  if (f.is(Kind::Iff)) throw std::invalid_argument("signed trees are built after <-> elimination");
  SignedTree t{f.kind(), root, f.name(), {}};
  for (std::size_t k = 0; k < f.arity(); ++k) {
    Sign s = root;
    if (f.is(Kind::Not) || (f.is(Kind::Imp) && k == 0)) s = opposite(root);
    t.children.push_back(build_signed_tree(f.child(k), s));
  }
  return t;
}

NodeClass classify_node(Kind connective, Sign sign) {
  const bool plus = sign == Sign::Plus;
  switch (connective) {
    case Kind::Or: return plus ? NodeClass{true, false} : NodeClass{true, true};
    case Kind::And: return plus ? NodeClass{true, true} : NodeClass{true, false};
    case Kind::Dia:
    case Kind::SDia: return plus ? NodeClass{true, false} : NodeClass{false, true};
    case Kind::Box:
    case Kind::SBox: return plus ? NodeClass{false, true} : NodeClass{true, false};
    case Kind::Not: return NodeClass{true, true};
    case Kind::Imp: return plus ? NodeClass{false, false} : NodeClass{true, false};
    default: return NodeClass{false, false};
  }
}

bool is_excellent_branch(std::span<const NodeClass> branch) {
  const std::size_t n = branch.size();
  // Longest inner prefix from the leaf; any split point up to it is a candidate.
  std::size_t inner_end = 0;
  while (inner_end < n && branch[inner_end].is_inner) ++inner_end;
  for (std::size_t split = 0; split <= inner_end; ++split) {
    bool rest_outer = std::all_of(branch.begin() + static_cast<std::ptrdiff_t>(split), branch.end(),
                                  [](const NodeClass& c) { return c.is_outer; });
    if (rest_outer) return true;
  }
  return false;
}

bool is_critical(const OrderType& eps, const std::string& var, Sign leaf_sign) {
  auto it = eps.find(var);
  if (it == eps.end()) throw std::invalid_argument("order-type has no entry for '" + var + "'");
  return (it->second == Order::One) == (leaf_sign == Sign::Plus);
}

namespace {

void collect_branches(const SignedTree& t, std::vector<SignedNode>& above, std::vector<Branch>& out) {
  if (t.kind == Kind::Prop) {
    Branch b{t.name, t.sign, {}};
    b.path.assign(above.rbegin(), above.rend());
    out.push_back(std::move(b));
    return;
  }
  above.push_back(SignedNode{t.kind, t.sign});
  for (const auto& c : t.children) collect_branches(c, above, out);
  above.pop_back();
}

std::vector<NodeClass> classes(const Branch& b) {
  std::vector<NodeClass> out;
  out.reserve(b.path.size());
  for (const auto& n : b.path) out.push_back(classify_node(n.kind, n.sign));
  return out;
}

bool is_plus_or_minus_and(const SignedNode& n) {
  return (n.kind == Kind::Or && n.sign == Sign::Plus) ||
         (n.kind == Kind::And && n.sign == Sign::Minus);
}

// Some excellent split keeps every node in the outer segment admissible.
bool has_split(const Branch& b, bool allow_outer, bool allow_disjunctive_outer) {
  auto cls = classes(b);
  const std::size_t n = cls.size();
  for (std::size_t split = 0; split <= n; ++split) {
    bool ok = true;
    for (std::size_t k = 0; k < n && ok; ++k) {
      if (k < split) {
        ok = cls[k].is_inner;
      } else {
        ok = allow_outer && cls[k].is_outer &&
             (allow_disjunctive_outer || !is_plus_or_minus_and(b.path[k]));
      }
    }
    if (ok) return true;
  }
  return false;
}

template <typename Pred>
bool all_critical(const SignedTree& t, const OrderType& eps, Pred pred) {
  for (const auto& b : branches(t)) {
    if (is_critical(eps, b.var, b.leaf_sign) && !pred(b)) return false;
  }
  return true;
}

void require_total(const Ineq& i, const OrderType& eps) {
  for (const auto& p : props(i)) {
    if (!eps.contains(p)) throw std::invalid_argument("order-type has no entry for '" + p + "'");
  }
}

}  // namespace

std::vector<Branch> branches(const SignedTree& t) {
  std::vector<Branch> out;
  std::vector<SignedNode> above;
  collect_branches(t, above, out);
  return out;
}

bool is_epsilon_sahlqvist(const SignedTree& t, const OrderType& eps) {
  return all_critical(t, eps, [](const Branch& b) {
    auto cls = classes(b);
    return is_excellent_branch(cls);
  });
}

bool is_epsilon_sahlqvist(const Ineq& i, const OrderType& eps) {
  require_total(i, eps);
  return is_epsilon_sahlqvist(build_signed_tree(eliminate_iff(i.lhs), Sign::Plus), eps) &&
         is_epsilon_sahlqvist(build_signed_tree(eliminate_iff(i.rhs), Sign::Minus), eps);
}

std::optional<OrderType> find_order_type(const Ineq& i) {
  const auto vars = props(i);
  const std::vector<std::string> sorted(vars.begin(), vars.end());
  const Ineq plain = ineq(eliminate_iff(i.lhs), eliminate_iff(i.rhs), i.sup, i.sub);
  const std::size_t n = sorted.size();
  if (n >= 63) throw std::invalid_argument("too many variables for order-type search");
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
    OrderType eps;
    for (std::size_t k = 0; k < n; ++k) {
      const bool dual = (code >> (n - 1 - k)) & 1u;
      eps[sorted[k]] = dual ? Order::Dual : Order::One;
    }
    if (is_epsilon_sahlqvist(plain, eps)) return eps;
  }
  return std::nullopt;
}

bool is_definite(const SignedTree& t, const OrderType& eps) {
  return all_critical(t, eps, [](const Branch& b) { return has_split(b, true, false); });
}

bool is_inner_sahlqvist(const SignedTree& t, const OrderType& eps) {
  return all_critical(t, eps, [](const Branch& b) { return has_split(b, false, false); });
}

bool is_dual_uniform(const SignedTree& t, const OrderType& eps) {
  return all_critical(t, eps, [](const Branch&) { return false; });
}

bool is_dual_uniform_in(const Ineq& i, const OrderType& eps, const std::string& p) {
  OrderType only;
  auto it = eps.find(p);
  if (it == eps.end()) throw std::invalid_argument("order-type has no entry for '" + p + "'");
  only[p] = it->second;
  auto lhs = build_signed_tree(eliminate_iff(i.lhs), Sign::Plus);
  auto rhs = build_signed_tree(eliminate_iff(i.rhs), Sign::Minus);
  auto clean = [&](const SignedTree& t) {
    for (const auto& b : branches(t)) {
      if (b.var == p && is_critical(only, p, b.leaf_sign)) return false;
    }
    return true;
  };
  return clean(lhs) && clean(rhs);
}

Classification classify(const Ineq& input, const std::optional<OrderType>& forced) {
  const Ineq i = ineq(eliminate_iff(input.lhs), eliminate_iff(input.rhs), input.sup, input.sub);
  Classification out;
  if (forced) {
    require_total(i, *forced);
    if (is_epsilon_sahlqvist(i, *forced)) out.order_type = forced;
  } else {
    out.order_type = find_order_type(i);
  }
  out.sahlqvist = out.order_type.has_value();

  OrderType shown;
  if (out.order_type) {
    shown = *out.order_type;
  } else if (forced) {
    shown = *forced;
  } else {
    for (const auto& p : props(i)) shown[p] = Order::One;
  }
  auto report = [&](const Formula& f, Sign s, const char* side) {
    for (auto& b : branches(build_signed_tree(f, s))) {
      BranchReport r{side, b, is_critical(shown, b.var, b.leaf_sign), false};
      auto cls = classes(r.branch);
      r.excellent = is_excellent_branch(cls);
      out.branches.push_back(std::move(r));
    }
  };
  report(i.lhs, Sign::Plus, "lhs");
  report(i.rhs, Sign::Minus, "rhs");
  return out;
}

std::string describe(const Branch& b) {
  std::string out;
  out += sign_char(b.leaf_sign);
  out += b.var;
  for (const auto& n : b.path) {
    out += " < ";
    out += sign_char(n.sign);
    out += std::string(kind_name(n.kind));
  }
  return out;
}

}  // namespace sabotage
