#include <gtest/gtest.h>

#include <set>

#include "aoperad/g_operad.hpp"
#include "aoperad/product.hpp"
#include "fixtures.hpp"

using aoperad::FiniteGOperad;
using aoperad::Op;
using aoperad::Permutation;

namespace {

void expect_all_pass(const aoperad::Report& r) {
  EXPECT_TRUE(r.all_passed()) << r.text();
  EXPECT_FALSE(r.laws().empty());
}

// alpha(p; xs) = m(act(p, xs)) for an Ass-algebra from an ordered product m
// with unit u on a table mult[a][b].
aoperad::AlgebraStructure monoid_algebra(std::vector<std::string> carrier, std::vector<std::vector<std::size_t>> mult,
                                         std::size_t unit, bool permute_inputs) {
  auto ass = aoperad::ass_operad(4);
  auto perms = std::make_shared<std::vector<std::vector<Permutation>>>();
  for (std::size_t n = 0; n <= 4; ++n) {
    perms->push_back(aoperad::all_permutations(n));
  }
  return {std::move(carrier), [=](Op p, std::span<const std::size_t> xs) {
            std::vector<std::size_t> v(xs.begin(), xs.end());
            if (permute_inputs) {
              v = aoperad::act_on_list((*perms)[p.arity][p.index], v);
            }
            std::size_t acc = unit;
            for (auto x : v) {
              acc = mult[acc][x];
            }
            return acc;
          }};
}

}  // namespace

TEST(GOperad, ShippedOperadsPassTheirLaws) {
  expect_all_pass(aoperad::check_operad(aoperad::comm_operad()));
  expect_all_pass(aoperad::check_operad(aoperad::ass_operad()));
  expect_all_pass(
      aoperad::check_operad(aoperad::terminal_operad(aoperad::trivial_action_operad(), 4, "nonsymmetric ass")));
}

TEST(GOperad, AssLevelsAreSymmetricGroups) {
  const auto ass = aoperad::ass_operad(3);
  EXPECT_EQ(ass.collection.size(3), 6U);
  EXPECT_EQ(ass.collection.levels[2][1], "[2 1]");
  EXPECT_EQ(ass.collection.levels[0][0], "[]");
  const std::vector<Op> swaps{{2, 1}, {1, 0}};
  // mu([2 1]; [2 1], [1]) moves the swapped pair behind the single input.
  EXPECT_EQ(ass.collection.label(ass.compose({2, 1}, swaps)), "[3 2 1]");
}

TEST(GOperad, UnitLawMutationIsCaught) {
  auto broken = aoperad::ass_operad(3);
  const auto good = broken.compose_fn;
  broken.compose_fn = [good](Op p, std::span<const Op> qs) {
    if (p.arity == 1 && qs[0].arity == 2) {
      return std::size_t{1 - qs[0].index};
    }
    return good(p, qs);
  };
  const auto r = aoperad::check_operad(broken);
  EXPECT_FALSE(r.passed("operad.unit"));
  EXPECT_NE(r.find("operad.unit")->witness.find("p=[1 2]"), std::string::npos);
}

TEST(GOperad, NonActionIsCaught) {
  const std::vector<std::vector<std::size_t>> bad{{1, 2, 0}};
  EXPECT_NE(aoperad::coxeter_violation(3, bad), "");
  const std::vector<std::vector<std::size_t>> braidish{{1, 0, 2}, {0, 2, 1}};
  EXPECT_EQ(aoperad::coxeter_violation(3, braidish), "");
  const std::vector<std::vector<std::size_t>> noncox{{1, 0, 2}, {2, 1, 0}, {0, 2, 1}};
  EXPECT_EQ(aoperad::coxeter_violation(3, noncox), "(s1 s3)^2 does not fix label 1");
}

TEST(GOperad, EndomorphismOperadSizes) {
  const auto S = aoperad::symmetric_action_operad();
  const auto one = aoperad::endomorphism_operad<Permutation>({"a"}, S, 3);
  for (std::size_t n = 0; n <= 3; ++n) {
    EXPECT_EQ(one.collection.size(n), 1U);
  }
  expect_all_pass(aoperad::check_operad(one));
  const auto two = aoperad::endomorphism_operad<Permutation>({"a", "b"}, S, 2);
  EXPECT_EQ(two.collection.size(0), 2U);
  EXPECT_EQ(two.collection.size(1), 4U);
  EXPECT_EQ(two.collection.size(2), 16U);
  EXPECT_EQ(two.collection.label(two.unit_op()), "ab");
  expect_all_pass(aoperad::check_operad(two));
  EXPECT_THROW(aoperad::endomorphism_operad<Permutation>({"a", "b"}, S, 5), aoperad::SizeOverflow);
}

TEST(GOperad, EndomorphismCompositionAndAction) {
  const auto S = aoperad::symmetric_action_operad();
  const auto E = aoperad::endomorphism_operad<Permutation>({"a", "b"}, S, 2);
  const auto& X = E.collection;
  // "abbb" is x or y with a = false; "aaab" is and; "ba" is not.
  const Op orr{2, X.find(2, "abbb")};
  const Op nott{1, X.find(1, "ba")};
  const std::vector<Op> nots{nott, nott};
  // or(not x, not y) = nand.
  EXPECT_EQ(X.label(E.compose(orr, nots)), "bbba");
  // Swapping inputs of "first projection" gives "second projection".
  const Op first{2, X.find(2, "aabb")};
  EXPECT_EQ(X.label(X.apply(first, Permutation{2, 1})), "abab");
}

TEST(GOperad, EndomorphismOverBraidsActsThroughProjection) {
  const auto B = aoperad::braid_action_operad();
  const auto E = aoperad::endomorphism_operad<aoperad::BraidWord>({"a", "b"}, B, 2);
  aoperad::CheckBudget budget;
  budget.max_cases = 300;
  expect_all_pass(aoperad::check_operad(E, aoperad::random_braid_sampler(2, 4, 4), budget));
}

TEST(GOperad, ChangeOfGroups) {
  const auto S = aoperad::symmetric_action_operad();
  const auto ass = aoperad::ass_operad(3);
  const auto plain = aoperad::change_groups(aoperad::map_from_trivial(S), ass);
  expect_all_pass(aoperad::check_operad(plain));
  for (std::size_t n = 0; n <= 3; ++n) {
    for (std::size_t x = 0; x < plain.collection.size(n); ++x) {
      EXPECT_EQ(plain.collection.act(n, x, aoperad::TrivialElement{n}), x);
    }
  }
  const auto same = aoperad::change_groups(aoperad::identity_map(S), ass);
  EXPECT_EQ(same.collection.levels, ass.collection.levels);
  for (const auto& g : aoperad::all_permutations(3)) {
    for (std::size_t x = 0; x < 6; ++x) {
      EXPECT_EQ(same.collection.act(3, x, g), ass.collection.act(3, x, g));
    }
  }
  const auto B = aoperad::braid_action_operad();
  const auto braided = aoperad::change_groups(aoperad::projection_map(B), aoperad::ass_operad(3));
  aoperad::CheckBudget budget;
  budget.max_cases = 300;
  expect_all_pass(aoperad::check_operad(braided, aoperad::random_braid_sampler(4, 5, 4), budget));
  const auto braided_comm = aoperad::change_groups(aoperad::projection_map(B), aoperad::comm_operad(3));
  expect_all_pass(aoperad::check_operad(braided_comm, aoperad::random_braid_sampler(4, 5, 4), budget));
}

TEST(GOperad, CommAlgebraOnACommutativeMonoid) {
  const auto comm = aoperad::comm_operad(3);
  // ({0, 1}, or, 0).
  const aoperad::AlgebraStructure A{{"0", "1"}, [](Op, std::span<const std::size_t> xs) {
                                      std::size_t acc = 0;
                                      for (auto x : xs) {
                                        acc |= x;
                                      }
                                      return acc;
                                    }};
  expect_all_pass(aoperad::check_algebra(comm, A, 3));
}

TEST(GOperad, AssAlgebraOnMonoids) {
  const auto ass = aoperad::ass_operad(3);
  // ({1, 0}, multiplication, 1).
  expect_all_pass(aoperad::check_algebra(ass, monoid_algebra({"1", "0"}, {{0, 1}, {1, 1}}, 0, true), 3));
  // A noncommutative monoid: {1, a, b} with xy = x for x, y in {a, b}.
  const std::vector<std::vector<std::size_t>> left_zero{{0, 1, 2}, {1, 1, 1}, {2, 2, 2}};
  expect_all_pass(aoperad::check_algebra(ass, monoid_algebra({"1", "a", "b"}, left_zero, 0, true), 3));
  // Ignoring the permutation label breaks equivariance.
  const auto r = aoperad::check_algebra(ass, monoid_algebra({"1", "a", "b"}, left_zero, 0, false), 3);
  EXPECT_FALSE(r.passed("algebra.equivariance"));
}

TEST(GOperad, CommStructureOnNoncommutativeTableFailsEquivariance) {
  const auto comm = aoperad::comm_operad(3);
  const std::vector<std::vector<std::size_t>> left_zero{{0, 1, 2}, {1, 1, 1}, {2, 2, 2}};
  const aoperad::AlgebraStructure A{{"1", "a", "b"}, [left_zero](Op, std::span<const std::size_t> xs) {
                                      std::size_t acc = 0;
                                      for (auto x : xs) {
                                        acc = left_zero[acc][x];
                                      }
                                      return acc;
                                    }};
  const auto r = aoperad::check_algebra(comm, A, 3);
  EXPECT_TRUE(r.passed("algebra.associativity"));
  EXPECT_FALSE(r.passed("algebra.equivariance"));
  EXPECT_FALSE(r.find("algebra.equivariance")->witness.empty());
}

TEST(GOperad, AlgebrasMatchOperadMapsIntoEndomorphisms) {
  const auto comm = aoperad::comm_operad(2);
  EXPECT_EQ(aoperad::count_algebra_structures(comm, 2, 2), 4U);
  EXPECT_EQ(aoperad::count_operad_maps_to_endomorphism(comm, 2, 2), 4U);
  const auto ass = aoperad::ass_operad(2);
  const auto ass_algebras = aoperad::count_algebra_structures(ass, 2, 2);
  EXPECT_EQ(ass_algebras, aoperad::count_operad_maps_to_endomorphism(ass, 2, 2));
  // A unital binary operation on 2 points: the unit fixes three of the four
  // table entries, times 2 choices of unit.
  EXPECT_EQ(ass_algebras, 4U);
  const auto ns = aoperad::terminal_operad(aoperad::trivial_action_operad(), 2, "ns");
  EXPECT_EQ(aoperad::count_algebra_structures(ns, 2, 2), aoperad::count_operad_maps_to_endomorphism(ns, 2, 2));
  EXPECT_EQ(aoperad::count_algebra_structures(comm, 1, 2), 1U);
}

namespace {

aoperad::FiniteGCollection<Permutation> tiny(std::string name, std::vector<std::vector<std::string>> levels,
                                             std::vector<std::vector<std::vector<std::size_t>>> gens) {
  return aoperad::collection_from_generators(std::move(name), std::move(levels), std::move(gens));
}

template <class E>
void expect_unit_bijections(const aoperad::FiniteGCollection<E>& Y, std::size_t bound) {
  const auto& G = Y.group;
  const auto I = aoperad::unit_collection(G, bound);
  const auto IY = aoperad::compose_collections(I, Y, bound);
  const auto YI = aoperad::compose_collections(Y, I, bound);
  for (std::size_t n = 0; n <= bound; ++n) {
    EXPECT_EQ(IY.collection.size(n), Y.size(n)) << "I o Y, n=" << n;
    EXPECT_EQ(YI.collection.size(n), Y.size(n)) << "Y o I, n=" << n;
    std::set<std::size_t> left_image, right_image;
    for (std::size_t y = 0; y < Y.size(n); ++y) {
      aoperad::ProductTuple<E> left{0, {{n, y}}, G.identity(n)};
      aoperad::ProductTuple<E> right{y, std::vector<Op>(n, Op{1, 0}), G.identity(n)};
      const auto l = IY.class_of(n, left);
      const auto r = YI.class_of(n, right);
      left_image.insert(l);
      right_image.insert(r);
      for (const auto& g : G.elements(n)) {
        aoperad::ProductTuple<E> moved_left{0, {{n, Y.act(n, y, g)}}, G.identity(n)};
        EXPECT_EQ(IY.class_of(n, moved_left), IY.collection.act(n, l, g));
        aoperad::ProductTuple<E> moved_right{Y.act(n, y, g), std::vector<Op>(n, Op{1, 0}), G.identity(n)};
        EXPECT_EQ(YI.class_of(n, moved_right), YI.collection.act(n, r, g));
      }
    }
    EXPECT_EQ(left_image.size(), Y.size(n));
    EXPECT_EQ(right_image.size(), Y.size(n));
  }
}

}  // namespace

TEST(CompositionProduct, UnitLawsAsEquivariantBijections) {
  // X(1) = {a}, X(2) = {m, n} swapped by s1, X(3) = three labels permuted.
  const auto X = tiny("X", {{"z"}, {"a"}, {"m", "n"}, {"p", "q", "r"}},
                      {{}, {}, {{1, 0}}, {{1, 0, 2}, {0, 2, 1}}});
  expect_unit_bijections(X, 3);
  const auto Y = tiny("Y", {{}, {"u", "v"}, {"c"}}, {});
  expect_unit_bijections(Y, 3);
  expect_unit_bijections(aoperad::plain_collection("T", {{"o"}, {"i", "j"}, {"b"}}), 3);
}

TEST(CompositionProduct, ClassesOfASmallProduct) {
  const auto X = tiny("X", {{}, {}, {"m"}}, {});
  const auto Y = tiny("Y", {{}, {"u", "v"}}, {});
  const auto XY = aoperad::compose_collections(X, Y, 2);
  // (m; y1, y2; g): the relations identify (m; u,v; g) with (m; v,u; s g),
  // leaving 4 tuples x 2 group elements / 2 = 4 classes.
  EXPECT_EQ(XY.collection.size(2), 4U);
  EXPECT_EQ(XY.collection.levels[2][0], "(m; u,u; [1 2])");
  EXPECT_EQ(XY.collection.size(1), 0U);
}

TEST(CompositionProduct, AssociativityClassCounts) {
  const auto X = tiny("X", {{}, {"a", "b"}, {"m", "n"}}, {{}, {}, {{1, 0}}});
  const auto Y = tiny("Y", {{}, {"u"}, {"c", "d"}}, {{}, {}, {{0, 1}}});
  const auto Z = tiny("Z", {{}, {"p", "q"}, {"s"}}, {});
  const auto XY = aoperad::compose_collections(X, Y, 3);
  const auto left = aoperad::compose_collections(XY.collection, Z, 3);
  const auto YZ = aoperad::compose_collections(Y, Z, 3);
  const auto right = aoperad::compose_collections(X, YZ.collection, 3);
  for (std::size_t n = 0; n <= 3; ++n) {
    EXPECT_EQ(left.collection.size(n), right.collection.size(n)) << "n=" << n;
  }
  EXPECT_GT(left.collection.size(3), 0U);
}

TEST(CompositionProduct, Limits) {
  const auto X = tiny("X", {{}, {"a"}}, {});
  EXPECT_THROW(aoperad::compose_collections(X, X, 6), aoperad::ArityOverflow);
  aoperad::FiniteGCollection<aoperad::BraidWord> B;
  B.group = aoperad::braid_action_operad();
  B.levels = {{}, {"a"}};
  B.act = [](std::size_t, std::size_t x, const aoperad::BraidWord&) { return x; };
  EXPECT_THROW(aoperad::compose_collections(B, B, 2), aoperad::UnsupportedGroup);
}
