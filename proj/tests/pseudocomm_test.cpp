#include <gtest/gtest.h>

#include <algorithm>

#include "aoperad/pseudocomm.hpp"
#include "fixtures.hpp"

using aoperad::BraidWord;
using aoperad::Permutation;
using aoperad::SwapPattern;

namespace {

bool has_note(const aoperad::Report& r, const std::string& line) {
  return std::find(r.notes().begin(), r.notes().end(), line) != r.notes().end();
}

// Patterns under which the first and second equations hold at one index.
std::pair<std::size_t, std::size_t> passing_patterns(std::size_t l, const std::vector<std::size_t>& ms, std::size_t n) {
  const auto G = aoperad::symmetric_action_operad();
  const std::function<Permutation(std::size_t, std::size_t)> t = [](std::size_t a, std::size_t b) {
    return aoperad::tau(a, b);
  };
  std::size_t first = 0;
  std::size_t second = 0;
  for (unsigned code = 0; code < 8; ++code) {
    const SwapPattern s{(code & 4) != 0, (code & 2) != 0, (code & 1) != 0};
    const auto [a, b] = aoperad::first_sides(G, t, s, l, ms, n);
    first += a == b ? 1 : 0;
    const auto [c, d] = aoperad::second_sides(G, t, s, n, l, ms);
    second += c == d ? 1 : 0;
  }
  return {first, second};
}

aoperad::TFamily<BraidWord> corrupted_positive() {
  auto family = aoperad::positive_family();
  family.name = "corrupted";
  family.t = [](std::size_t m, std::size_t n) {
    return m == 2 && n == 2 ? BraidWord(4, {1}) : aoperad::t_positive(m, n);
  };
  return family;
}

}  // namespace

TEST(Orientation, UniqueAtBoundThreeAndStable) {
  const auto three = aoperad::search_orientations(3);
  ASSERT_EQ(three.first.size(), 1u);
  ASSERT_EQ(three.second.size(), 1u);
  EXPECT_EQ(three.first.front(), (SwapPattern{true, true, false}));
  EXPECT_EQ(three.second.front(), (SwapPattern{false, false, false}));
  const auto four = aoperad::search_orientations(4);
  EXPECT_EQ(four.first, three.first);
  EXPECT_EQ(four.second, three.second);
  EXPECT_EQ(aoperad::resolve_orientation(3), aoperad::resolved_orientation());
}

TEST(Orientation, BoundTwoIsAmbiguous) {
  const auto two = aoperad::search_orientations(2);
  EXPECT_EQ(two.first.size(), 4u);
  EXPECT_EQ(two.second.size(), 4u);
  EXPECT_NE(std::find(two.first.begin(), two.first.end(), aoperad::resolved_orientation().first), two.first.end());
  EXPECT_THROW(aoperad::resolve_orientation(2), aoperad::Error);
}

TEST(Orientation, SingleIndexCounts) {
  // With l = n = 1 every t involved is an identity.
  EXPECT_EQ(passing_patterns(1, {1}, 1), (std::pair<std::size_t, std::size_t>{8, 8}));
  // At l = n = 2, m = (1, 2) the inner and composed t's are symmetric in
  // their indices, so only the right side is decided: one of its two
  // readings passes, under all four settings of the other flags.
  EXPECT_EQ(passing_patterns(2, {1, 2}, 2), (std::pair<std::size_t, std::size_t>{4, 4}));
  const auto G = aoperad::symmetric_action_operad();
  const auto t = aoperad::tau_family();
  EXPECT_TRUE(aoperad::verify_interchange(G, t, 2, {1, 2}, 2));
  auto swapped = t;
  swapped.orientation.first[2] = !swapped.orientation.first[2];
  EXPECT_FALSE(aoperad::verify_interchange(G, swapped, 2, {1, 2}, 2));
}

TEST(Orientation, DescriptionNamesTheResolvedEquations) {
  EXPECT_EQ(aoperad::describe(aoperad::resolved_orientation()),
            "first:  mu(e_l; t(n,m_i)) . mu(t(n,l); e_m_1..e_m_l repeated n times) = t(n,M)\n"
            "second: mu(t(m,l); e_n_1 x l, .., e_n_m x l) . mu(e_m; t(n_i,l)) = t(N,l)");
}

TEST(Symmetric, TauSatisfiesEveryHypothesis) {
  const auto G = aoperad::symmetric_action_operad();
  const auto t = aoperad::tau_family();
  const auto r = aoperad::check_family(G, t, 3);
  EXPECT_TRUE(r.all_passed()) << r.text();
  EXPECT_EQ(r.find("interchange.first")->cases, 117u);
  EXPECT_EQ(r.find("interchange.second")->cases, 117u);
  EXPECT_TRUE(aoperad::verify_unit_family(G, t, 6));
  EXPECT_TRUE(aoperad::verify_symmetry(G, t, 4).holds);
  EXPECT_TRUE(aoperad::verify_interchange(G, t, 2, {1, 2}, 2));
  EXPECT_TRUE(aoperad::verify_interchange_dual(G, t, 2, 2, {1, 2}));
}

TEST(Symmetric, TheoremReport) {
  const auto r = aoperad::symmetric_theorem_report(3);
  EXPECT_TRUE(r.all_passed()) << r.text();
  EXPECT_TRUE(has_note(r, "SYMMETRY: HOLDS"));
}

TEST(Braid, BothFamiliesSatisfyTheHypotheses) {
  const auto G = aoperad::braid_action_operad();
  for (const auto& t : {aoperad::positive_family(), aoperad::negative_family()}) {
    const auto r = aoperad::check_family(G, t, 3);
    EXPECT_TRUE(r.all_passed()) << r.text();
    for (const auto* law : {"pi_condition", "unit_family", "minimal.t", "minimal.first_lhs", "minimal.second_lhs"}) {
      ASSERT_NE(r.find(law), nullptr) << law;
    }
    EXPECT_EQ(r.find("pi_condition")->cases, 25u);
    EXPECT_TRUE(aoperad::verify_unit_family(G, t, 6));
  }
}

TEST(Braid, LeftSidesArePositiveMinimal) {
  const auto G = aoperad::braid_action_operad();
  const auto t = aoperad::positive_family();
  aoperad::for_each_interchange_index(3, [&](std::size_t l, const std::vector<std::size_t>& ms, std::size_t n) {
    const auto [lhs, rhs] = aoperad::first_sides(G, t.t, t.orientation.first, l, ms, n);
    EXPECT_TRUE(aoperad::is_positive(lhs));
    EXPECT_EQ(lhs.length(), aoperad::inversions(aoperad::underlying_permutation(rhs)));
  });
}

TEST(Braid, NonSymmetryWitness) {
  EXPECT_EQ(aoperad::t_positive(2, 2), BraidWord(4, {2}));
  const BraidWord t22 = aoperad::t_positive(2, 2);
  EXPECT_FALSE(aoperad::equal(t22 * t22, BraidWord::identity(4)));
  const auto G = aoperad::braid_action_operad();
  for (const auto& t : {aoperad::positive_family(), aoperad::negative_family()}) {
    const auto s = aoperad::verify_symmetry(G, t, 4);
    EXPECT_FALSE(s.holds);
    EXPECT_EQ(s.m, 2u);
    EXPECT_EQ(s.n, 2u);
  }
  EXPECT_EQ(aoperad::verify_symmetry(G, aoperad::negative_family(), 4).product, "<4: -2 -2>");
}

TEST(Braid, TheoremReport) {
  const auto r = aoperad::braid_theorem_report(3);
  EXPECT_TRUE(r.all_passed()) << r.text();
  EXPECT_TRUE(has_note(r, "SYMMETRY: FAILS (expected)"));
  EXPECT_TRUE(has_note(r, "t_positive(2,2) = 2"));
  EXPECT_TRUE(has_note(r, "t_positive: t(2,2) t(2,2) = <4: 2 2> is not e"));
}

TEST(Braid, CorruptedFamilyFails) {
  const auto G = aoperad::braid_action_operad();
  const auto t = corrupted_positive();
  const auto r = aoperad::check_family(G, t, 3);
  EXPECT_FALSE(r.passed("pi_condition"));
  ASSERT_FALSE(r.passed("interchange.first"));
  EXPECT_FALSE(r.find("interchange.first")->witness.empty());
  EXPECT_FALSE(aoperad::verify_interchange(G, t, 2, {2, 1}, 2));
}
