#include <gtest/gtest.h>

#include "aoperad/action_operad.hpp"
#include "fixtures.hpp"

using aoperad::BraidWord;
using aoperad::Permutation;

namespace {

void expect_all_pass(const aoperad::Report& r) {
  EXPECT_TRUE(r.all_passed()) << r.text();
  for (const auto& l : r.laws()) {
    EXPECT_GT(l.cases, 0U) << l.law;
  }
}

}  // namespace

TEST(ActionOperad, TrivialInstance) {
  const auto T = aoperad::trivial_action_operad();
  EXPECT_EQ(T.project(aoperad::TrivialElement{3}), Permutation::identity(3));
  EXPECT_EQ(T.elements(2).size(), 1U);
  expect_all_pass(aoperad::check_axioms(T, aoperad::exhaustive_sampler(T)));
}

TEST(ActionOperad, SymmetricInstanceExhaustive) {
  const auto S = aoperad::symmetric_action_operad();
  const std::vector<Permutation> taus{Permutation{2, 1}, Permutation{2, 1}};
  EXPECT_EQ(S.compose(Permutation{1, 2}, taus), aoperad::mu_sigma(Permutation{1, 2}, taus));
  const auto r = aoperad::check_axioms(S, aoperad::exhaustive_sampler(S));
  expect_all_pass(r);
  for (const char* law : {"group.associativity", "operad.associativity", "compatibility", "project.operad_map",
                          "calclem.unit_is_identity", "calclem.identity_composite", "calclem.g1_abelian",
                          "monoidal.plus_identity", "monoidal.plus_multiplicative", "monoidal.plus_associative"}) {
    EXPECT_NE(r.find(law), nullptr) << law;
  }
}

TEST(ActionOperad, SymmetricMonoidalSumExhaustive) {
  const auto S = aoperad::symmetric_action_operad();
  aoperad::CheckBudget budget;
  budget.max_arity = 3;
  budget.max_total = 6;
  budget.max_cases = 1U << 20;
  aoperad::Report r;
  aoperad::check_monoidal_sum(S, aoperad::exhaustive_sampler(S), budget, r);
  EXPECT_TRUE(r.passed("monoidal.plus_identity"));
  EXPECT_TRUE(r.passed("monoidal.plus_multiplicative"));
  EXPECT_TRUE(r.passed("monoidal.plus_associative"));
  // Arities a, b <= 3 give 1+1+2+6 elements each, all pairs of pairs covered.
  EXPECT_GE(r.find("monoidal.plus_multiplicative")->cases, 6U * 6U * 6U * 6U);
}

TEST(ActionOperad, BraidInstanceSampled) {
  const auto B = aoperad::braid_action_operad();
  EXPECT_FALSE(B.finite());
  EXPECT_THROW(B.elements(2), aoperad::UnsupportedGroup);
  aoperad::CheckBudget budget;
  budget.max_cases = 600;
  expect_all_pass(aoperad::check_axioms(B, aoperad::random_braid_sampler(5, 6, 5), budget));
}

TEST(ActionOperad, CorruptedProjectionBreaksCompatibility) {
  auto B = aoperad::braid_action_operad();
  B.name = "braid with constant projection";
  B.project = [](const BraidWord& g) { return Permutation::identity(g.strands()); };
  aoperad::CheckBudget budget;
  budget.max_cases = 600;
  const auto r = aoperad::check_axioms(B, aoperad::random_braid_sampler(5, 6, 5), budget);
  EXPECT_FALSE(r.passed("compatibility"));
  EXPECT_FALSE(r.find("compatibility")->witness.empty());
  EXPECT_TRUE(r.passed("group.associativity"));
  EXPECT_TRUE(r.passed("operad.associativity"));
}

TEST(ActionOperad, ArityMixingIsAnError) {
  const auto S = aoperad::symmetric_action_operad();
  EXPECT_THROW(S.multiply(Permutation::identity(2), Permutation::identity(3)), aoperad::ArityError);
  const auto T = aoperad::trivial_action_operad();
  EXPECT_THROW(T.multiply(aoperad::TrivialElement{1}, aoperad::TrivialElement{2}), aoperad::ArityError);
  const std::vector<aoperad::TrivialElement> one{aoperad::TrivialElement{1}};
  EXPECT_THROW(T.compose(aoperad::TrivialElement{2}, one), aoperad::ArityError);
}

TEST(ActionOperad, MapsOfActionOperads) {
  const auto T = aoperad::trivial_action_operad();
  const auto S = aoperad::symmetric_action_operad();
  const auto B = aoperad::braid_action_operad();
  expect_all_pass(aoperad::check_map(aoperad::map_from_trivial(S), aoperad::exhaustive_sampler(T)));
  expect_all_pass(aoperad::check_map(aoperad::map_from_trivial(B), aoperad::exhaustive_sampler(T)));
  expect_all_pass(aoperad::check_map(aoperad::identity_map(S), aoperad::exhaustive_sampler(S)));
  aoperad::CheckBudget budget;
  budget.max_cases = 500;
  expect_all_pass(aoperad::check_map(aoperad::projection_map(B), aoperad::random_braid_sampler(9, 6, 6), budget));
}

TEST(ActionOperad, NonHomomorphismIsReported) {
  const auto S = aoperad::symmetric_action_operad();
  aoperad::ActionOperadMap<Permutation, Permutation> bad{"inverse", S, S,
                                                         [](const Permutation& p) { return aoperad::inverse(p); }};
  const auto r = aoperad::check_map(bad, aoperad::exhaustive_sampler(S));
  EXPECT_FALSE(r.passed("map.homomorphism"));
  EXPECT_FALSE(r.passed("map.over_sigma"));
}

TEST(ActionOperad, RandomSamplerIsDeterministic) {
  const auto a = aoperad::random_braid_sampler(3, 5, 4);
  const auto b = aoperad::random_braid_sampler(3, 5, 4);
  EXPECT_EQ(a(4), b(4));
  EXPECT_EQ(a(4).front(), BraidWord::identity(4));
  EXPECT_EQ(a(1).size(), 1U);
  EXPECT_NE(aoperad::random_braid_sampler(4, 5, 4)(4), a(4));
}

TEST(ActionOperad, ReportText) {
  aoperad::Report r("demo");
  r.check("law.a", true, [] { return std::string("never"); });
  r.check("law.b", false, [] { return std::string("first"); });
  r.check("law.b", false, [] { return std::string("second"); });
  EXPECT_EQ(r.text(), "== demo\nPASS law.a (1 case)\nFAIL law.b (2 cases): first\n");
  EXPECT_EQ(r.failures(), 1U);
}
