#include <gtest/gtest.h>

#include <map>
#include <vector>

#include "gen.hpp"
#include "sabotage/parser.hpp"
#include "sabotage/printer.hpp"
#include "sabotage/sahlqvist.hpp"
#include "sabotage/syntax.hpp"

using namespace sabotage;

namespace {

Ineq in(const char* text) { return parse_inequality(text); }

const OrderType p1{{"p", Order::One}};
const OrderType pd{{"p", Order::Dual}};

TEST(SignedTree, Examples) {
  const SignedTree t = build_signed_tree(imp(prop("p"), prop("q")), Sign::Plus);
  EXPECT_EQ(t.kind, Kind::Imp);
  EXPECT_EQ(t.sign, Sign::Plus);
  EXPECT_EQ(t.children[0].sign, Sign::Minus);
  EXPECT_EQ(t.children[1].sign, Sign::Plus);

  const SignedTree n = build_signed_tree(neg(prop("p")), Sign::Minus);
  EXPECT_EQ(n.children[0].sign, Sign::Plus);

  const SignedTree s = build_signed_tree(sdia(prop("p")), Sign::Plus);
  EXPECT_EQ(s.kind, Kind::SDia);
  EXPECT_EQ(s.children[0].sign, Sign::Plus);

  EXPECT_THROW(build_signed_tree(iff(prop("p"), prop("q")), Sign::Plus), std::invalid_argument);
}

// Recomputes each node's sign from its parent and compares with the stored one.
void check_signs(const SignedTree& t) {
  for (std::size_t k = 0; k < t.children.size(); ++k) {
    const bool flips = t.kind == Kind::Not || (t.kind == Kind::Imp && k == 0);
    ASSERT_EQ(t.children[k].sign, flips ? opposite(t.sign) : t.sign);
    check_signs(t.children[k]);
  }
}

TEST(SignedTree, SignCorrectnessProperty) {
  gen::Rng rng(31);
  const gen::Vocabulary v{{"p", "q"}, {}};
  for (int k = 0; k < 1000; ++k) {
    const Formula g = eliminate_iff(gen::base_formula(rng, 5, v));
    check_signs(build_signed_tree(g, rng.coin() ? Sign::Plus : Sign::Minus));
  }
}

TEST(ClassifyNode, FullTable) {
  struct Row {
    Kind kind;
    Sign sign;
    bool outer;
    bool inner;
  };
  const std::vector<Row> table{
      {Kind::Or, Sign::Plus, true, false},     {Kind::Or, Sign::Minus, true, true},
      {Kind::And, Sign::Plus, true, true},     {Kind::And, Sign::Minus, true, false},
      {Kind::Dia, Sign::Plus, true, false},    {Kind::Dia, Sign::Minus, false, true},
      {Kind::Box, Sign::Plus, false, true},    {Kind::Box, Sign::Minus, true, false},
      {Kind::SDia, Sign::Plus, true, false},   {Kind::SDia, Sign::Minus, false, true},
      {Kind::SBox, Sign::Plus, false, true},   {Kind::SBox, Sign::Minus, true, false},
      {Kind::Not, Sign::Plus, true, true},     {Kind::Not, Sign::Minus, true, true},
      {Kind::Imp, Sign::Plus, false, false},   {Kind::Imp, Sign::Minus, true, false},
  };
  ASSERT_EQ(table.size(), 16u);
  for (const auto& r : table) {
    const NodeClass c = classify_node(r.kind, r.sign);
    EXPECT_EQ(c.is_outer, r.outer) << kind_name(r.kind) << sign_char(r.sign);
    EXPECT_EQ(c.is_inner, r.inner) << kind_name(r.kind) << sign_char(r.sign);
  }
  for (Kind k : {Kind::LDia, Kind::GBox, Kind::ForallNom, Kind::Iff}) {
    EXPECT_EQ(classify_node(k, Sign::Plus), NodeClass{});
    EXPECT_EQ(classify_node(k, Sign::Minus), NodeClass{});
  }
}

TEST(ExcellentBranch, Examples) {
  const NodeClass box_p = classify_node(Kind::Box, Sign::Plus);
  const NodeClass sdia_p = classify_node(Kind::SDia, Sign::Plus);
  const NodeClass dia_p = classify_node(Kind::Dia, Sign::Plus);
  const NodeClass and_p = classify_node(Kind::And, Sign::Plus);
  EXPECT_TRUE(is_excellent_branch(std::vector{box_p}));
  EXPECT_TRUE(is_excellent_branch(std::vector{box_p, sdia_p}));
  EXPECT_FALSE(is_excellent_branch(std::vector{dia_p, box_p}));
  EXPECT_TRUE(is_excellent_branch(std::vector<NodeClass>{}));
  // +and may sit on either side of the boundary.
  EXPECT_TRUE(is_excellent_branch(std::vector{box_p, and_p, box_p, dia_p}));
  EXPECT_TRUE(is_excellent_branch(std::vector{dia_p, and_p, dia_p}));
}

// Brute force over every boundary position.
bool excellent_by_search(const std::vector<NodeClass>& b) {
  for (std::size_t cut = 0; cut <= b.size(); ++cut) {
    bool ok = true;
    for (std::size_t k = 0; k < b.size() && ok; ++k) ok = k < cut ? b[k].is_inner : b[k].is_outer;
    if (ok) return true;
  }
  return false;
}

TEST(ExcellentBranch, AgreesWithBoundarySearch) {
  gen::Rng rng(32);
  const std::vector<NodeClass> classes{{false, false}, {true, false}, {false, true}, {true, true}};
  for (int k = 0; k < 5000; ++k) {
    std::vector<NodeClass> b(static_cast<std::size_t>(rng.below(7)));
    for (auto& c : b) c = rng.pick(classes);
    ASSERT_EQ(is_excellent_branch(b), excellent_by_search(b));
  }
}

TEST(Sahlqvist, Examples) {
  EXPECT_TRUE(is_epsilon_sahlqvist(in("[]p -> p"), p1));
  EXPECT_TRUE(is_epsilon_sahlqvist(in("<!>[]p <= []<!>p"), p1));
  EXPECT_FALSE(is_epsilon_sahlqvist(in("[]<>p -> <>[]p"), p1));
  EXPECT_FALSE(is_epsilon_sahlqvist(in("[]<>p -> <>[]p"), pd));
  EXPECT_THROW(is_epsilon_sahlqvist(in("p -> q"), p1), std::invalid_argument);
}

TEST(Sahlqvist, OrderTypeSearch) {
  EXPECT_EQ(find_order_type(in("<>p -> p")), p1);
  EXPECT_EQ(find_order_type(in("[]<>p -> <>[]p")), std::nullopt);
  EXPECT_EQ(find_order_type(in("top -> <!>top")), OrderType{});
  EXPECT_EQ(find_order_type(in("[]<>p -> p")), pd);
}

TEST(Sahlqvist, DefiniteAndInner) {
  const OrderType pq{{"p", Order::One}, {"q", Order::One}};
  EXPECT_FALSE(is_definite(build_signed_tree(parse_formula("<>p | <>q"), Sign::Plus), pq));
  EXPECT_TRUE(is_definite(build_signed_tree(parse_formula("<>p"), Sign::Plus), p1));
  EXPECT_FALSE(is_inner_sahlqvist(build_signed_tree(parse_formula("<>p"), Sign::Plus), p1));
  EXPECT_TRUE(is_inner_sahlqvist(build_signed_tree(parse_formula("[]p"), Sign::Plus), p1));
}

TEST(Sahlqvist, Uniformity) {
  EXPECT_TRUE(is_dual_uniform(build_signed_tree(parse_formula("~p"), Sign::Plus), p1));
  EXPECT_FALSE(is_dual_uniform(build_signed_tree(parse_formula("p"), Sign::Plus), p1));
  const OrderType pq{{"p", Order::One}, {"q", Order::One}};
  EXPECT_FALSE(is_dual_uniform_in(in("p <= []q"), pq, "p"));
  EXPECT_TRUE(is_dual_uniform_in(in("[]q <= p"), pq, "p"));
}

TEST(Sahlqvist, ParseOrderType) {
  EXPECT_EQ(parse_order_type("p=1,q=d"), (OrderType{{"p", Order::One}, {"q", Order::Dual}}));
  EXPECT_EQ(parse_order_type("p=∂"), pd);
  EXPECT_EQ(to_string(OrderType{{"p", Order::One}, {"q", Order::Dual}}), "p=1,q=d");
  EXPECT_THROW(parse_order_type("p=2"), std::invalid_argument);
}

TEST(Sahlqvist, GeneratedInputsAreSahlqvist) {
  gen::Rng rng(33);
  const std::vector<OrderType> types{
      {{"p", Order::One}, {"q", Order::One}},
      {{"p", Order::One}, {"q", Order::Dual}},
      {{"p", Order::Dual}, {"q", Order::Dual}},
  };
  for (int k = 0; k < 500; ++k) {
    const OrderType& eps = types[static_cast<std::size_t>(k) % types.size()];
    const Ineq i = gen::sahlqvist_inequality(rng, eps, 3);
    ASSERT_TRUE(is_epsilon_sahlqvist(i, eps)) << to_string(i);
    ASSERT_TRUE(classify(i).sahlqvist) << to_string(i);
  }
}

TEST(Sahlqvist, SearchIsFirstHit) {
  // Any order-type the search returns works, and no earlier one does.
  gen::Rng rng(34);
  const gen::Vocabulary v{{"p", "q"}, {}};
  for (int k = 0; k < 400; ++k) {
    const Ineq i = gen::inequality(rng, 3, v);
    const Ineq e{eliminate_iff(i.lhs), eliminate_iff(i.rhs), {}, {}};
    const auto found = find_order_type(e);
    const auto names = props(e);
    const std::vector<std::string> vars(names.begin(), names.end());
    bool earlier = false;
    for (unsigned mask = 0; mask < (1u << vars.size()); ++mask) {
      OrderType eps;
      // Most significant choice is the first variable; One before Dual.
      for (std::size_t b = 0; b < vars.size(); ++b)
        eps[vars[b]] = ((mask >> (vars.size() - 1 - b)) & 1u) ? Order::Dual : Order::One;
      const bool ok = is_epsilon_sahlqvist(e, eps);
      if (ok && !earlier) {
        ASSERT_EQ(found, eps) << to_string(e);
        earlier = true;
      }
    }
    if (!earlier) ASSERT_EQ(found, std::nullopt) << to_string(e);
  }
}

TEST(Classify, BranchReports) {
  const Classification c = classify(in("[]p -> p"));
  EXPECT_TRUE(c.sahlqvist);
  EXPECT_EQ(c.order_type, p1);
  ASSERT_EQ(c.branches.size(), 2u);
  for (const auto& b : c.branches) EXPECT_TRUE(!b.critical || b.excellent);

  EXPECT_TRUE(classify(in("[]p -> p"), pd).sahlqvist);
  EXPECT_FALSE(classify(in("[]<>p -> p"), p1).sahlqvist);
  EXPECT_TRUE(classify(in("[]<>p -> p"), pd).sahlqvist);
}

}  // namespace
