#include <gtest/gtest.h>

#include "gen.hpp"
#include "sabotage/alba.hpp"
#include "sabotage/fol.hpp"
#include "sabotage/parser.hpp"
#include "sabotage/printer.hpp"
#include "sabotage/semantics.hpp"

using namespace sabotage;

namespace {

const FOTerm x = FOTerm::var("x");
const FOTerm y0 = FOTerm::var("y0");
const FOTerm y1 = FOTerm::var("y1");
const FOTerm y2 = FOTerm::var("y2");

TEST(Translation, Diamond) {
  EXPECT_EQ(st_formula({}, dia(prop("p"))), fo_exists(y0, fo_and({fo_rel(x, y0), fo_pred("p", y0)})));
}

TEST(Translation, SabotageDiamondMovesNoWorld) {
  EXPECT_EQ(st_formula({}, sdia(prop("p"))), fo_exists(y0, fo_exists(y1, fo_and({fo_rel(y0, y1), fo_pred("p", x)}))));
}

TEST(Translation, DiamondUnderDeletion) {
  TranslationContext ctx;
  ctx.e = {{y0, y1}};
  const FOFormula expected =
      fo_exists(y2, fo_and({fo_rel(x, y2), fo_not(fo_and({fo_eq(x, y0), fo_eq(y2, y1)})), fo_eq(y2, y2)}));
  EXPECT_EQ(st_formula(ctx, dia(top())), expected);
}

TEST(Translation, Statements) {
  EXPECT_EQ(st_statement(Statement{ineq(bot(), top())}), fo_forall(x, fo_imp(fo_neq(x, x), fo_eq(x, x))));

  const FOTerm i = FOTerm::nominal("i");
  const FOTerm j = FOTerm::nominal("j");
  EXPECT_EQ(st_statement(Statement{ineq(nom("i"), ldia({}, nom("j")))}),
            fo_forall(x, fo_imp(fo_eq(x, i), fo_exists(y0, fo_and({fo_rel(x, y0), fo_eq(y0, j)})))));

  const Mega m = mega_guard("i2", "i3", {}, mega_leaf(ineq(nom("i2"), nom("i3"))));
  const FOFormula guarded = st_statement(Statement{m});
  ASSERT_TRUE(guarded.is(FOKind::Forall));
  ASSERT_TRUE(guarded.child().is(FOKind::Forall));
  const FOFormula& imp_part = guarded.child().child();
  ASSERT_TRUE(imp_part.is(FOKind::Imp));
  EXPECT_EQ(imp_part.child(0), fo_rel(FOTerm::nominal("i2"), FOTerm::nominal("i3")));
}

TEST(Translation, GuardContextIsReadOutsideItsBinders) {
  // The outer i2 names the excluded edge; the guard's own i2 must not capture it.
  const Mega m = mega_guard("i2", "i3", {{"i2", "i2"}}, mega_leaf(ineq(nom("i2"), bot())));
  const Statement s{m};
  for (int n = 1; n <= 2; ++n) {
    for (const auto& f : enumerate_frames(n)) {
      for (int w = 0; w < n; ++w) {
        Valuation v;
        v.set_nom("i2", w);
        ASSERT_EQ(eval_statement(f, v, s), eval_fo(f, v, {}, st_statement(s))) << to_literal(f);
      }
    }
  }
}

TEST(Translation, NoShadowing) {
  const FOFormula f = st_formula({}, dia(dia(sdia(box(prop("p"))))));
  EXPECT_TRUE(has_no_shadowing(f));
  EXPECT_FALSE(has_no_shadowing(fo_forall(x, fo_forall(x, fo_eq(x, x)))));
}

TEST(Eval, Examples) {
  const KripkeFrame empty(2, {});
  EXPECT_TRUE(eval_fo(empty, {}, {}, fo_forall(x, fo_eq(x, x))));
  EXPECT_FALSE(eval_fo(empty, {}, {}, fo_exists(y0, fo_exists(y1, fo_rel(y0, y1)))));
  EXPECT_TRUE(eval_fo(KripkeFrame(1, {{0, 0}}), {}, {}, st_statement(Statement{ineq(top(), sdia(top()))})));
  EXPECT_THROW(eval_fo(empty, {}, {}, fo_eq(x, x)), FOEvalError);
}

TEST(Equivalence, Examples) {
  const FOFormula refl = fo_forall(x, fo_rel(x, x));
  EXPECT_TRUE(fo_equiv_on_small_frames(refl, fo_forall(x, fo_and({fo_rel(x, x), fo_eq(x, x)})), 3));
  const auto cex = fo_counterexample(refl, fo_exists(x, fo_rel(x, x)), 3);
  ASSERT_TRUE(cex);
  EXPECT_EQ(*cex, KripkeFrame(2, {{0, 0}}));
  EXPECT_THROW(fo_equiv_on_small_frames(refl, refl, 5), std::invalid_argument);
}

TEST(Equivalence, TAxiomOutput) {
  const AlbaResult res = run_alba(parse_inequality("[]p -> p"));
  ASSERT_TRUE(res.success);
  EXPECT_TRUE(fo_equiv_on_small_frames(correspondent(res.output), fo_forall(x, fo_rel(x, x)), 3));
}

TEST(Emit, Formats) {
  const FOFormula f = fo_forall(x, fo_rel(x, x));
  EXPECT_EQ(emit_fo(f, FOFormat::Text), "forall x. R(x,x)");
  EXPECT_EQ(emit_fo(f, FOFormat::Tptp), "fof(corr, axiom, ![X]: r(X,X)).");
  const FOTerm i0 = FOTerm::nominal("i0");
  EXPECT_EQ(emit_fo(fo_eq(i0, i0), FOFormat::Json), R"({"eq":["i0","i0"]})");
  EXPECT_EQ(parse_fo_format("tptp"), FOFormat::Tptp);
  EXPECT_THROW(parse_fo_format("xml"), std::invalid_argument);
}

TEST(Emit, TptpClosesFreeNames) {
  const FOFormula f = fo_rel(FOTerm::nominal("i0"), FOTerm::nominal("i1"));
  const std::string t = emit_fo(f, FOFormat::Tptp);
  EXPECT_EQ(validate_tptp(t), std::nullopt) << t;
  EXPECT_NE(t.find("![I0,I1]:"), std::string::npos) << t;
}

TEST(Emit, JsonRoundTripAndValidTptpProperty) {
  gen::Rng rng(51);
  const gen::Vocabulary v;
  for (int k = 0; k < 500; ++k) {
    const Statement s = gen::statement(rng, gen::kAllForms[k % 5], 2, v);
    const FOFormula f = st_statement(s);
    ASSERT_EQ(fo_from_json(emit_fo(f, FOFormat::Json)), f) << to_string(s);
    const std::string t = emit_fo(f, FOFormat::Tptp);
    const auto problem = validate_tptp(t);
    ASSERT_FALSE(problem) << *problem << "\n" << t;
  }
}

TEST(Tptp, ValidatorRejects) {
  EXPECT_FALSE(validate_tptp("fof(a, axiom, ![X]: r(X,X))."));
  EXPECT_TRUE(validate_tptp("fof(a, axiom, ![X]: r(X,X)"));
  EXPECT_TRUE(validate_tptp("fof(a, axiom, r(X,X))."));
  EXPECT_TRUE(validate_tptp("fof(a, axiom, ![X]: r(X))."));
  EXPECT_TRUE(validate_tptp("fof(a, axiom, ![X]: q(X))."));
  EXPECT_TRUE(validate_tptp("fof(a, lemma, $true)."));
  EXPECT_TRUE(validate_tptp("fof(a, axiom, ![X]: (r(X,X) & p_q(X) | r(X,X)))."));
  EXPECT_TRUE(validate_tptp("fof(a, axiom, $true) extra"));
  EXPECT_TRUE(validate_tptp("fof(a, conjecture, ?[X,Y]: (X != Y & ~r(X,Y) => p_p(X)))."));
  EXPECT_FALSE(validate_tptp("fof(a, conjecture, ?[X,Y]: (((X != Y) & ~r(X,Y)) => p_p(X)))."));
}

TEST(Json, RejectsMalformed) {
  EXPECT_THROW(fo_from_json("{"), std::invalid_argument);
  EXPECT_THROW(fo_from_json(R"({"nope":[]})"), std::invalid_argument);
}

// Truth of the translation equals satisfaction, on the expanded language.
TEST(Correctness, FormulasProperty) {
  gen::Rng rng(52);
  const gen::Vocabulary v;
  for (int k = 0; k < 2000; ++k) {
    const KripkeFrame f = gen::frame(rng, 3);
    const Valuation val = gen::valuation(rng, f, v);
    const Formula phi = gen::expanded_formula(rng, 3, v);
    const FOFormula t = st_formula({}, phi);
    for (int w = 0; w < f.size(); ++w)
      ASSERT_EQ(satisfies(f, val, {}, w, phi), eval_fo(f, val, {{"x", w}}, t)) << print_formula(phi);
  }
}

TEST(Correctness, StatementsProperty) {
  gen::Rng rng(53);
  const gen::Vocabulary v;
  for (int k = 0; k < 1000; ++k) {
    const Statement s = gen::statement(rng, gen::kAllForms[k % 5], 2, v);
    const KripkeFrame f = gen::frame(rng, 3);
    const Valuation val = gen::valuation(rng, f, v);
    ASSERT_EQ(eval_statement(f, val, s), eval_fo(f, val, {}, st_statement(s))) << to_string(s);
  }
}

TEST(Correctness, CorrespondentsOfGeneratedInputs) {
  gen::Rng rng(54);
  const std::vector<OrderType> types{{{"p", Order::One}, {"q", Order::Dual}}, {{"p", Order::Dual}, {"q", Order::One}}};
  for (int k = 0; k < 40; ++k) {
    const Ineq in = gen::sahlqvist_inequality(rng, types[static_cast<std::size_t>(k) % 2], 2);
    const AlbaResult res = run_alba(in);
    ASSERT_TRUE(res.success) << to_string(in);
    const CompiledFO fo(correspondent(res.output));
    ASSERT_TRUE(fo.free_names().empty());
    for (int n = 1; n <= 2; ++n) {
      for (const auto& f : enumerate_frames(n)) {
        std::vector<WorldSet> preds(fo.predicates().size(), 0);
        ASSERT_EQ(frame_valid(f, Statement{in}), fo.eval(f, preds, {})) << to_string(in) << " on " << to_literal(f);
      }
    }
  }
}

}  // namespace
