#include <gtest/gtest.h>

#include "gen.hpp"
#include "oracle.hpp"
#include "sabotage/parser.hpp"
#include "sabotage/printer.hpp"
#include "sabotage/semantics.hpp"

using namespace sabotage;

namespace {

const Formula p = prop("p");

KripkeFrame loop1() { return KripkeFrame(1, {{0, 0}}); }
KripkeFrame empty1() { return KripkeFrame(1, {}); }

oracle::Model to_model(const KripkeFrame& f, const Valuation& val) {
  oracle::Model m = oracle::from_frame(f);
  for (const auto& [name, ws] : val.props) {
    auto& ext = m.props[name];
    for (int w = 0; w < f.size(); ++w)
      if ((ws >> w) & 1u) ext.insert(w);
  }
  m.noms = val.noms;
  return m;
}

TEST(Satisfies, SabotageDiamondNeedsAnEdge) {
  EXPECT_TRUE(satisfies(loop1(), {}, {}, 0, sdia(top())));
  EXPECT_FALSE(satisfies(empty1(), {}, {}, 0, sdia(top())));
}

TEST(Satisfies, SabotageBoxIsVacuousWithoutEdges) { EXPECT_TRUE(satisfies(empty1(), {}, {}, 0, sbox(bot()))); }

TEST(Satisfies, LabelledDiamondReadsBaselineMinusLabels) {
  Valuation v;
  v.set_nom("i1", 0).set_nom("i2", 0);
  EXPECT_FALSE(satisfies(loop1(), v, {}, 0, ldia({{"i1", "i2"}}, top())));
  EXPECT_TRUE(satisfies(loop1(), v, {}, 0, ldia({}, top())));
}

TEST(Satisfies, LabelledModalityIgnoresDeletions) {
  // Inside <!>, the plain diamond sees the deletion, the labelled one does not.
  EXPECT_FALSE(satisfies(loop1(), {}, {}, 0, sdia(dia(top()))));
  EXPECT_TRUE(satisfies(loop1(), {}, {}, 0, sdia(ldia({}, top()))));
}

TEST(Satisfies, UninterpretedNominalIsAnError) {
  EXPECT_THROW(satisfies(loop1(), {}, {}, 0, nom("i0")), EvalError);
}

TEST(Satisfies, NominalQuantifiers) {
  const KripkeFrame f(2, {{0, 1}});
  EXPECT_TRUE(satisfies(f, {}, {}, 0, exists_nom("i0", dia(nom("i0")))));
  EXPECT_FALSE(satisfies(f, {}, {}, 1, exists_nom("i0", dia(nom("i0")))));
  EXPECT_FALSE(satisfies(f, {}, {}, 0, forall_nom("i0", dia(nom("i0")))));
  EXPECT_TRUE(satisfies(f, {}, {}, 1, gdia(dia(top()))));
  EXPECT_FALSE(satisfies(f, {}, {}, 0, gbox(dia(top()))));
}

TEST(Statements, Examples) {
  EXPECT_TRUE(eval_statement(loop1(), {}, Statement{ineq(bot(), top())}));

  const KripkeFrame f(2, {{0, 1}});
  Valuation v;
  v.set_nom("i", 0).set_nom("j", 1);
  EXPECT_TRUE(eval_statement(f, v, Statement{ineq(nom("i"), ldia({}, nom("j")))}));
  v.set_nom("i", 1);
  EXPECT_FALSE(eval_statement(f, v, Statement{ineq(nom("i"), ldia({}, nom("j")))}));

  const Mega m = mega_guard("i", "j", {}, mega_leaf(ineq(nom("i"), nom("j"))));
  EXPECT_TRUE(eval_statement(loop1(), {}, Statement{m}));
  EXPECT_FALSE(eval_statement(f, {}, Statement{m}));
}

TEST(Statements, IneqContextsApplyPerSide) {
  // Top <=^{}_{(i,i)} <>top: the reflexive edge is removed only on the right.
  Valuation v;
  v.set_nom("i", 0);
  EXPECT_FALSE(eval_statement(loop1(), v, Statement{ineq(top(), dia(top()), {}, {{"i", "i"}})}));
  EXPECT_TRUE(eval_statement(loop1(), v, Statement{ineq(dia(top()), bot(), {{"i", "i"}}, {})}));
}

TEST(FrameValid, Examples) {
  EXPECT_TRUE(frame_valid(loop1(), parse_formula("[]p -> p")));
  EXPECT_FALSE(frame_valid(empty1(), parse_formula("[]p -> p")));
  EXPECT_TRUE(frame_valid(empty1(), parse_formula("<!>top -> <>top")));
  EXPECT_TRUE(frame_valid(KripkeFrame(2, {}), parse_formula("<!>top -> <>top")));
  EXPECT_FALSE(frame_valid(KripkeFrame(2, {{0, 1}}), parse_formula("[]p -> [!]p")));
}

TEST(Frames, Enumeration) {
  EXPECT_EQ(enumerate_frames(1).size(), 2u);
  EXPECT_EQ(enumerate_frames(2).size(), 16u);
  EXPECT_EQ(enumerate_frames(3).size(), 512u);
  EXPECT_THROW(enumerate_frames(4), std::invalid_argument);
  EXPECT_THROW(enumerate_frames(0), std::invalid_argument);
  const auto two = enumerate_frames(2);
  for (std::size_t k = 0; k < two.size(); ++k) EXPECT_EQ(two[k].edges(), k);
}

TEST(Frames, LiteralAndJson) {
  const KripkeFrame f = parse_frame_literal("n=3; edges=(0,1),(1,2)");
  EXPECT_EQ(f, KripkeFrame(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(parse_frame_json(R"({"n": 3, "edges": [[0,1],[1,2]]})"), f);
  EXPECT_EQ(parse_frame_literal(to_literal(f)), f);
  EXPECT_EQ(parse_frame_json(to_json(f)), f);
  EXPECT_THROW(parse_frame_literal("n=2; edges=(0,2)"), std::invalid_argument);
}

// The library evaluator against the set-based oracle on the expanded language.
TEST(OracleAgreement, ExpandedFormulas) {
  gen::Rng rng(21);
  const gen::Vocabulary v;
  for (int k = 0; k < 3000; ++k) {
    const KripkeFrame f = gen::frame(rng, 3);
    const Valuation val = gen::valuation(rng, f, v);
    const Formula phi = gen::expanded_formula(rng, 3, v);
    const oracle::Model m = to_model(f, val);
    const WorldSet ext = extension(f, val, {}, phi);
    for (int w = 0; w < f.size(); ++w) {
      ASSERT_EQ(((ext >> w) & 1u) != 0, oracle::holds(m, {}, w, phi)) << print_formula(phi) << " at " << w;
    }
  }
}

TEST(OracleAgreement, Statements) {
  gen::Rng rng(22);
  const gen::Vocabulary v;
  for (int k = 0; k < 1500; ++k) {
    const Statement s = gen::statement(rng, gen::kAllForms[k % 5], 2, v);
    const KripkeFrame f = gen::frame(rng, 3);
    const Valuation val = gen::valuation(rng, f, v);
    const oracle::Model m = to_model(f, val);
    ASSERT_EQ(eval_statement(f, val, s), oracle::holds(m, s)) << to_string(s);
  }
}

TEST(OracleAgreement, FrameValidity) {
  gen::Rng rng(23);
  const gen::Vocabulary v{{"p"}, {}};
  for (int k = 0; k < 60; ++k) {
    const Ineq in = gen::inequality(rng, 2, v);
    const Statement s{in};
    for (int n = 1; n <= 2; ++n) {
      for (const auto& f : enumerate_frames(n)) {
        const oracle::Model base = oracle::from_frame(f);
        const auto ps = oracle::props_of(s);
        const bool expected = oracle::for_each_valuation(base, {ps.begin(), ps.end()}, {},
                                                         [&](const oracle::Model& m) { return oracle::holds(m, s); });
        ASSERT_EQ(frame_valid(f, s), expected) << to_string(s) << " on " << to_literal(f);
      }
    }
  }
}

}  // namespace
