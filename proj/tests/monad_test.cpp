#include <gtest/gtest.h>

#include <chrono>
#include <numeric>
#include <set>

#include "aoperad/g_operad.hpp"
#include "aoperad/monad.hpp"
#include "fixtures.hpp"

using aoperad::FiniteGOperad;
using aoperad::FreeClass;
using aoperad::FreeMonad;
using aoperad::Op;
using aoperad::Permutation;

namespace {

FiniteGOperad<aoperad::TrivialElement> ns_ass(std::size_t max_arity = 4) {
  return aoperad::terminal_operad(aoperad::trivial_action_operad(), max_arity, "ns-ass");
}

// Orbit count of P(n) x X^n by closing (p, xs) ~ (p . g, act(pi(g)^-1, xs))
// in a union-find, independently of the canonical representatives.
template <class E>
std::size_t orbit_count(const FiniteGOperad<E>& P, std::size_t n, std::size_t q) {
  const std::size_t tuples = aoperad::checked_power(q, n, 1 << 20);
  const std::size_t size = P.collection.size(n) * tuples;
  std::vector<std::size_t> parent(size);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (parent[a] != a) {
      a = parent[a] = parent[parent[a]];
    }
    return a;
  };
  const auto& G = P.group();
  for (std::size_t p = 0; p < P.collection.size(n); ++p) {
    for (std::size_t t = 0; t < tuples; ++t) {
      const auto xs = aoperad::tuple_unrank(t, q, n);
      for (const auto& g : G.elements(n)) {
        // (p . g, y) ~ (p, act(pi(g), y)); take y = xs.
        const std::size_t a = P.collection.act(n, p, g) * tuples + t;
        const auto moved = aoperad::act_on_list(G.project(g), xs);
        const std::size_t b = p * tuples + aoperad::tuple_rank(moved, q);
        parent[find(a)] = find(b);
      }
    }
  }
  std::size_t roots = 0;
  for (std::size_t a = 0; a < size; ++a) {
    roots += find(a) == a ? 1 : 0;
  }
  return roots;
}

// Ass with mu(p; q, e) for p, q in Sigma_2 replaced by the next label.
FiniteGOperad<Permutation> corrupted_ass() {
  auto P = aoperad::ass_operad(4);
  auto base = P.compose_fn;
  P.compose_fn = [base](Op p, std::span<const Op> qs) {
    const auto r = base(p, qs);
    if (p.arity == 2 && qs.size() == 2 && qs[0].arity == 2 && qs[1].arity == 1) {
      return (r + 1) % 6;
    }
    return r;
  };
  return P;
}

}  // namespace

TEST(FreeAlgebra, ArityTwoClassCounts) {
  EXPECT_EQ(aoperad::free_algebra(aoperad::comm_operad(), 2, 2).count(2), 3u);
  EXPECT_EQ(aoperad::free_algebra(aoperad::ass_operad(), 2, 2).count(2), 4u);
  EXPECT_EQ(aoperad::free_algebra(ns_ass(), 2, 2).count(2), 4u);
}

TEST(FreeAlgebra, CountsMatchUnionFindOracle) {
  for (std::size_t q = 0; q <= 3; ++q) {
    const auto comm = aoperad::free_algebra(aoperad::comm_operad(), q, 4);
    const auto ass = aoperad::free_algebra(aoperad::ass_operad(), q, 4);
    const auto ns = aoperad::free_algebra(ns_ass(), q, 4);
    for (std::size_t n = 0; n <= 4; ++n) {
      EXPECT_EQ(comm.count(n), orbit_count(aoperad::comm_operad(), n, q)) << "comm n=" << n << " q=" << q;
      EXPECT_EQ(ass.count(n), orbit_count(aoperad::ass_operad(), n, q)) << "ass n=" << n << " q=" << q;
      EXPECT_EQ(ns.count(n), orbit_count(ns_ass(), n, q)) << "ns n=" << n << " q=" << q;
    }
  }
  const auto end = aoperad::endomorphism_operad<Permutation>({"a", "b"}, aoperad::symmetric_action_operad(), 2);
  const auto classes = aoperad::free_algebra(end, 2, 2);
  for (std::size_t n = 0; n <= 2; ++n) {
    EXPECT_EQ(classes.count(n), orbit_count(end, n, 2)) << "End n=" << n;
  }
}

TEST(FreeAlgebra, ArityZeroIsOrbitsOfP0) {
  const auto end = aoperad::endomorphism_operad<Permutation>({"a", "b"}, aoperad::symmetric_action_operad(), 2);
  EXPECT_EQ(aoperad::free_algebra(end, 3, 2).count(0), end.collection.size(0));
  EXPECT_EQ(aoperad::free_algebra(aoperad::comm_operad(), 0, 3).size(), 1u);
}

TEST(FreeAlgebra, OrbitRelationNormalizesTogether) {
  const auto P = aoperad::ass_operad(3);
  const FreeMonad<Permutation> T(P, 3);
  for (std::size_t n = 0; n <= 3; ++n) {
    for (std::size_t p = 0; p < P.collection.size(n); ++p) {
      for (const auto& g : aoperad::all_permutations(n)) {
        aoperad::for_each_tuple(3, n, [&](const std::vector<std::size_t>& xs) {
          const Op pg = P.collection.apply({n, p}, g);
          EXPECT_EQ(T.normalize(pg, xs), T.normalize({n, p}, aoperad::act_on_list(g, xs)));
        });
      }
    }
  }
}

TEST(FreeAlgebra, RepresentativesAreOrbitMinima) {
  const auto classes = aoperad::free_algebra(aoperad::comm_operad(), 2, 3);
  std::vector<std::vector<std::size_t>> arity_two;
  for (const auto& c : classes.classes) {
    if (c.op.arity == 2) {
      arity_two.push_back(c.args);
    }
  }
  EXPECT_EQ(arity_two, (std::vector<std::vector<std::size_t>>{{0, 0}, {0, 1}, {1, 1}}));
  EXPECT_TRUE(std::is_sorted(classes.classes.begin(), classes.classes.end()));
}

TEST(FreeAlgebra, ClassFormat) {
  const auto P = aoperad::comm_operad();
  const std::vector<std::string> carrier{"a", "b"};
  EXPECT_EQ(aoperad::format_class(P, FreeClass{{2, 0}, {0, 1}}, std::span<const std::string>(carrier)), "[*; a,b]");
  EXPECT_EQ(aoperad::format_class(P, FreeClass{{0, 0}, {}}, std::span<const std::string>(carrier)), "[*;]");
}

TEST(FreeAlgebra, RelabelingCarrierIsABijectionOfClasses) {
  const auto P = aoperad::ass_operad(3);
  const FreeMonad<Permutation> T(P, 3);
  const auto classes = T.classes(3);
  const std::vector<std::size_t> relabel{2, 0, 1};
  std::set<FreeClass> images;
  for (const auto& c : classes.classes) {
    const auto image = T.fmap(relabel, c);
    EXPECT_TRUE(classes.contains(image));
    images.insert(image);
  }
  EXPECT_EQ(images.size(), classes.size());
}

TEST(FreeAlgebra, BraidGroupIsUnsupported) {
  const auto P = aoperad::terminal_operad(aoperad::braid_action_operad(), 2, "braided comm");
  EXPECT_THROW(aoperad::free_algebra(P, 2, 2), aoperad::UnsupportedGroup);
  EXPECT_THROW(aoperad::cartesian_condition(P), aoperad::UnsupportedGroup);
}

TEST(FreeMonadOps, UnitAndMultiplication) {
  const auto P = aoperad::comm_operad(3);
  const FreeMonad<Permutation> T(P, 3);
  const auto PX = T.classes(2);
  EXPECT_EQ(T.eta(1), (FreeClass{{1, 0}, {1}}));
  // [*; [*; b,a], [*; a]] -> [*; a,a,b]
  const auto ba = PX.at(T.normalize({2, 0}, {1, 0}));
  const auto a = PX.at(T.eta(0));
  EXPECT_EQ(T.mu(FreeClass{{2, 0}, {ba, a}}, PX), (FreeClass{{3, 0}, {0, 0, 1}}));
}

TEST(FreeMonadOps, MultiplicationBeyondTheBoundOverflows) {
  const auto P = aoperad::comm_operad(4);
  const FreeMonad<Permutation> T(P, 2);
  const auto PX = T.classes(2);
  const auto ab = PX.at(T.normalize({2, 0}, {0, 1}));
  EXPECT_THROW(T.mu(FreeClass{{2, 0}, {ab, ab}}, PX), aoperad::ArityOverflow);
  EXPECT_THROW(T.normalize({1, 0}, {0, 1}), aoperad::ArityError);
}

TEST(MonadLaws, CommAndAssAtBoundThree) {
  const auto start = std::chrono::steady_clock::now();
  for (const auto& r : {aoperad::check_monad_laws(aoperad::comm_operad(), 2, 3),
                        aoperad::check_monad_laws(aoperad::ass_operad(), 2, 3)}) {
    EXPECT_TRUE(r.all_passed()) << r.text();
    for (const auto* law : {"monad.left_unit", "monad.right_unit", "monad.associativity", "monad.arity_one_product",
                            "monad.algebra_count"}) {
      ASSERT_NE(r.find(law), nullptr) << law;
      EXPECT_GT(r.find(law)->cases, 0u) << law;
    }
  }
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(30));
}

TEST(MonadLaws, NonsymmetricAndEmptyCarrier) {
  const auto r = aoperad::check_monad_laws(ns_ass(3), 2, 3);
  EXPECT_TRUE(r.all_passed()) << r.text();
  const auto empty = aoperad::check_monad_laws(aoperad::comm_operad(), 0, 3);
  EXPECT_TRUE(empty.all_passed()) << empty.text();
}

TEST(MonadLaws, AlgebraCountsMatchOperadAlgebras) {
  const auto r = aoperad::check_monad_laws(aoperad::comm_operad(), 2, 3);
  const auto algebras = aoperad::count_algebra_structures(aoperad::comm_operad(), 2, 2);
  EXPECT_EQ(algebras, 4u);
  EXPECT_EQ(r.find("monad.algebra_to_monad_algebra")->cases, algebras);
  EXPECT_EQ(r.find("monad.monad_algebra_to_algebra")->cases, algebras);
}

TEST(MonadLaws, CorruptedCompositionBreaksAssociativity) {
  const auto P = corrupted_ass();
  EXPECT_FALSE(aoperad::check_operad(P).passed("operad.associativity"));
  const auto r = aoperad::check_monad_laws(P, 2, 3);
  ASSERT_FALSE(r.passed("monad.associativity")) << r.text();
  EXPECT_EQ(r.find("monad.associativity")->witness.front(), '[');
}

TEST(Cartesian, CommHasAStabilizerWitness) {
  const auto c = aoperad::cartesian_condition(aoperad::comm_operad());
  ASSERT_FALSE(c.holds);
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_EQ(c.witness->arity, 2u);
  EXPECT_EQ(c.witness->label, "*");
  EXPECT_EQ(c.witness->element, "[2 1]");
}

TEST(Cartesian, FreeActionsAndNonsymmetricOperadsHold) {
  EXPECT_TRUE(aoperad::cartesian_condition(aoperad::ass_operad()).holds);
  EXPECT_TRUE(aoperad::cartesian_condition(ns_ass()).holds);
}

TEST(Cartesian, PullbackVerdictAgrees) {
  const auto comm = aoperad::pullback_witness_test(aoperad::comm_operad());
  EXPECT_FALSE(aoperad::pullback_holds(comm));
  EXPECT_TRUE(comm.passed("pullback.stabilizer_pair")) << comm.text();
  EXPECT_FALSE(comm.passed("pullback.injective"));
  EXPECT_TRUE(comm.passed("pullback.surjective"));
  bool pair_noted = false;
  for (const auto& n : comm.notes()) {
    pair_noted = pair_noted || n == "stabilizer pair: [*; (x',y),(x,y')] and [*; (x,y),(x',y')] have equal projections";
  }
  EXPECT_TRUE(pair_noted) << comm.text();

  const auto ass = aoperad::pullback_witness_test(aoperad::ass_operad());
  EXPECT_TRUE(aoperad::pullback_holds(ass)) << ass.text();
  EXPECT_TRUE(ass.all_passed());
  const auto ns = aoperad::pullback_witness_test(ns_ass());
  EXPECT_TRUE(aoperad::pullback_holds(ns)) << ns.text();

  const auto end = aoperad::endomorphism_operad<Permutation>({"a", "b"}, aoperad::symmetric_action_operad(), 2);
  EXPECT_EQ(aoperad::pullback_holds(aoperad::pullback_witness_test(end, 2)),
            aoperad::cartesian_condition(end, 2).holds);
}
