#pragma once

// The acceptance suites, shared by the acceptance binary and `verify all`.
// Each criterion is a function producing a Report; it passes when every law
// in the report holds and, if timing is enforced, it ran within its limit.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "aoperad/action_operad.hpp"
#include "aoperad/braid.hpp"
#include "aoperad/g_operad.hpp"
#include "aoperad/monad.hpp"
#include "aoperad/perm.hpp"
#include "aoperad/product.hpp"
#include "aoperad/pseudocomm.hpp"
#include "aoperad/report.hpp"

namespace aoperad {

struct AcceptanceOptions {
  std::uint64_t seed = 1;
  std::size_t budget = 1000;  // random instances per sampled criterion
};

struct Criterion {
  std::string id;
  std::string title;
  double limit_seconds = 0;  // 0: no limit
  std::function<Report()> run;
};

struct CriterionResult {
  std::string id;
  std::string title;
  bool passed = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;
};

namespace detail {

inline void expect(Report& r, const std::string& law, bool ok, const std::string& witness) {
  r.check(law, ok, [&] { return witness; });
}

inline std::string perm_text(const Permutation& p) { return "[" + format_permutation(p) + "]"; }

inline Report criterion_sigma9() {
  Report r;
  // (123) = [2 3 1], (12)(34) = [2 1 4 3], (13) = [3 2 1], (1234) = [2 3 4 1].
  const Permutation s{2, 1};
  const std::vector<Permutation> left{s, Permutation{2, 1, 4, 3}, Permutation{3, 2, 1}};
  const std::vector<Permutation> right{s, s, s, Permutation{3, 2, 1}};
  const auto a = mu_sigma(Permutation{2, 3, 1}, left);
  const auto b = mu_sigma(Permutation{2, 3, 4, 1}, right);
  expect(r, "mu((123); (12),(12)(34),(13)) = mu((1234); (12),(12),(12),(13))", a == b,
         perm_text(a) + " != " + perm_text(b));
  expect(r, "value [5 4 7 6 9 8 3 2 1]", a == Permutation{5, 4, 7, 6, 9, 8, 3, 2, 1}, perm_text(a));
  return r;
}

inline Report criterion_sigma6() {
  Report r;
  // (23) = [1 3 2], (132) = [3 1 2].
  const Permutation s{2, 1};
  const auto e = Permutation::identity(2);
  const Permutation g{1, 3, 2};
  const Permutation g2{3, 1, 2};
  const std::vector<Permutation> fs{s, s, e};
  const std::vector<Permutation> fps{s, e, s};
  const auto lhs = compose(mu_sigma(g, fs), mu_sigma(g2, fps));
  std::vector<Permutation> combined;
  for (std::size_t i = 0; i < 3; ++i) {
    combined.push_back(compose(fs[g2.zero_based()[i]], fps[i]));
  }
  const auto rhs = mu_sigma(compose(g, g2), combined);
  expect(r, "compatibility figure", lhs == rhs, perm_text(lhs) + " != " + perm_text(rhs));
  expect(r, "value [4 3 2 1 5 6]", lhs == Permutation{4, 3, 2, 1, 5, 6}, perm_text(lhs));
  return r;
}

inline Report criterion_tau() {
  Report r;
  expect(r, "tau(2,3) = [1 3 5 2 4 6]", tau(2, 3) == Permutation{1, 3, 5, 2, 4, 6}, perm_text(tau(2, 3)));
  expect(r, "tau(4,2) = [1 5 2 6 3 7 4 8]", tau(4, 2) == Permutation{1, 5, 2, 6, 3, 7, 4, 8}, perm_text(tau(4, 2)));
  for (std::size_t m = 1; m <= 5; ++m) {
    for (std::size_t n = 1; n <= 5; ++n) {
      expect(r, "tau(m,n) = tau(n,m)^-1, m,n <= 5", tau(m, n) == inverse(tau(n, m)),
             "m=" + std::to_string(m) + " n=" + std::to_string(n));
    }
  }
  return r;
}

inline Report criterion_braid_theorem() {
  Report r;
  const auto G = braid_action_operad();
  for (const auto& t : {positive_family(), negative_family()}) {
    const auto family = check_family(G, t, 3);
    for (auto l : family.laws()) {
      l.law = t.name + " " + l.law;
      r.add(l);
    }
  }
  return r;
}

inline Report criterion_non_symmetry() {
  Report r;
  const auto t22 = t_positive(2, 2);
  expect(r, "t_positive(2,2) = 2", t22 == BraidWord(4, {2}), format_word(t22));
  const auto reduced = handle_reduce(t22 * t22);
  expect(r, "t(2,2) t(2,2) != e", !reduced.empty(), "handle reduction gave the empty word");
  return r;
}

inline Report criterion_symmetric() {
  Report r;
  const auto G = symmetric_action_operad();
  const auto t = tau_family();
  r.merge(check_family(G, t, 3));
  const auto s = verify_symmetry(G, t, 4);
  expect(r, "symmetry, m,n <= 4", s.holds,
         "m=" + std::to_string(s.m) + " n=" + std::to_string(s.n) + " product " + s.product);
  return r;
}

inline Report criterion_projection(const AcceptanceOptions& o) {
  Report r;
  std::mt19937_64 rng(mix_seed(o.seed, 7));
  for (std::size_t c = 0; c < o.budget; ++c) {
    const std::size_t n = draw(rng, 5);
    const auto g = random_braid(rng, n, draw(rng, 7));
    std::vector<BraidWord> fs;
    std::vector<Permutation> ps;
    for (std::size_t i = 0; i < n; ++i) {
      fs.push_back(random_braid(rng, draw(rng, 5), draw(rng, 7)));
      ps.push_back(underlying_permutation(fs.back()));
    }
    const auto lhs = underlying_permutation(mu_br(g, fs));
    const auto rhs = mu_sigma(underlying_permutation(g), ps);
    expect(r, "pi(mu_br(g; fs)) = mu_sigma(pi(g); pi(fs))", lhs == rhs, "g=" + format_word(g));
  }
  return r;
}

inline Report criterion_word_problem(const AcceptanceOptions& o) {
  Report r;
  std::mt19937_64 rng(mix_seed(o.seed, 8));
  for (std::size_t c = 0; c < o.budget; ++c) {
    const std::size_t n = 1 + draw(rng, 6);
    const auto w = random_braid(rng, n, draw(rng, 21));
    expect(r, "w w^-1 is trivial", is_trivial(w * inverse(w)), "<" + std::to_string(n) + ": " + format_word(w) + ">");
  }
  expect(r, "s1 s2 s1 = s2 s1 s2", equal(BraidWord(3, {1, 2, 1}), BraidWord(3, {2, 1, 2})), "unequal");
  expect(r, "s1 s3 = s3 s1", equal(BraidWord(4, {1, 3}), BraidWord(4, {3, 1})), "unequal");
  return r;
}

inline Report calclem_only(const Report& full, const std::string& prefix) {
  Report r;
  for (auto l : full.laws()) {
    if (l.law.rfind("calclem.", 0) == 0) {
      l.law = prefix + " " + l.law;
      r.add(l);
    }
  }
  if (r.laws().empty()) {
    expect(r, prefix + " calclem laws present", false, "no calclem law was checked");
  }
  return r;
}

inline Report criterion_calclem(const AcceptanceOptions& o) {
  Report r;
  const auto S = symmetric_action_operad();
  r.merge(calclem_only(check_axioms(S, exhaustive_sampler(S)), "symmetric"));
  CheckBudget budget;
  budget.max_cases = 600;
  budget.seed = o.seed;
  const auto B = braid_action_operad();
  r.merge(calclem_only(check_axioms(B, random_braid_sampler(o.seed, 6, 5), budget), "braid"));
  return r;
}

inline Report criterion_monad() {
  Report r;
  for (const auto& P : {comm_operad(), ass_operad()}) {
    const auto laws = check_monad_laws(P, 2, 3);
    for (auto l : laws.laws()) {
      l.law = P.name() + " " + l.law;
      r.add(l);
    }
  }
  const auto comm = free_algebra(comm_operad(2), 2, 2).count(2);
  const auto ass = free_algebra(ass_operad(2), 2, 2).count(2);
  expect(r, "comm arity-2 classes = 3", comm == 3, std::to_string(comm));
  expect(r, "ass arity-2 classes = 4", ass == 4, std::to_string(ass));
  return r;
}

template <class E>
void cartesian_case(Report& r, const FiniteGOperad<E>& P, bool expected) {
  const auto c = cartesian_condition(P);
  std::string witness = c.holds ? "YES" : "NO";
  if (c.witness) {
    witness += " at arity " + std::to_string(c.witness->arity) + ", " + c.witness->label + " fixed by " +
               c.witness->element;
  }
  expect(r, P.name() + " cartesian = " + (expected ? "YES" : "NO"), c.holds == expected && c.holds == !c.witness,
         witness);
  const bool pullback = pullback_holds(pullback_witness_test(P));
  expect(r, P.name() + " pullback test agrees", pullback == c.holds, pullback ? "pullback holds" : "pullback fails");
}

inline Report criterion_cartesian() {
  Report r;
  cartesian_case(r, comm_operad(), false);
  cartesian_case(r, ass_operad(), true);
  cartesian_case(r, terminal_operad(trivial_action_operad(), 4, "ns-ass"), true);
  return r;
}

template <class E>
void unit_bijections(Report& r, const FiniteGCollection<E>& Y, std::size_t bound) {
  const auto& G = Y.group;
  const auto I = unit_collection(G, bound);
  const auto IY = compose_collections(I, Y, bound);
  const auto YI = compose_collections(Y, I, bound);
  for (std::size_t n = 0; n <= bound; ++n) {
    const std::string where = Y.name + " n=" + std::to_string(n);
    std::set<std::size_t> left_image;
    std::set<std::size_t> right_image;
    bool equivariant = true;
    for (std::size_t y = 0; y < Y.size(n); ++y) {
      const ProductTuple<E> left{0, {{n, y}}, G.identity(n)};
      const ProductTuple<E> right{y, std::vector<Op>(n, Op{1, 0}), G.identity(n)};
      const auto l = IY.class_of(n, left);
      const auto rr = YI.class_of(n, right);
      left_image.insert(l);
      right_image.insert(rr);
      for (const auto& g : G.elements(n)) {
        const ProductTuple<E> moved_left{0, {{n, Y.act(n, y, g)}}, G.identity(n)};
        const ProductTuple<E> moved_right{Y.act(n, y, g), std::vector<Op>(n, Op{1, 0}), G.identity(n)};
        equivariant = equivariant && IY.class_of(n, moved_left) == IY.collection.act(n, l, g) &&
                      YI.class_of(n, moved_right) == YI.collection.act(n, rr, g);
      }
    }
    expect(r, "I o Y = Y", IY.collection.size(n) == Y.size(n) && left_image.size() == Y.size(n), where);
    expect(r, "Y o I = Y", YI.collection.size(n) == Y.size(n) && right_image.size() == Y.size(n), where);
    expect(r, "unit isomorphisms are equivariant", equivariant, where);
  }
}

inline Report criterion_product() {
  Report r;
  const auto X = collection_from_generators("X", {{}, {"a", "b"}, {"m", "n"}}, {{}, {}, {{1, 0}}});
  const auto Y = collection_from_generators("Y", {{}, {"u"}, {"c", "d"}}, {{}, {}, {{0, 1}}});
  const auto Z = collection_from_generators("Z", {{}, {"p", "q"}, {"s"}}, {});
  const auto W = collection_from_generators("W", {{"z"}, {"i", "j"}, {"w"}}, {});
  for (const auto* C : {&X, &Y, &Z, &W}) {
    unit_bijections(r, *C, 3);
  }
  const auto left = compose_collections(compose_collections(X, Y, 3).collection, Z, 3);
  const auto right = compose_collections(X, compose_collections(Y, Z, 3).collection, 3);
  std::size_t total = 0;
  for (std::size_t n = 0; n <= 3; ++n) {
    total += left.collection.size(n);
    expect(r, "(X o Y) o Z and X o (Y o Z) class counts", left.collection.size(n) == right.collection.size(n),
           "n=" + std::to_string(n) + ": " + std::to_string(left.collection.size(n)) + " vs " +
               std::to_string(right.collection.size(n)));
  }
  expect(r, "associativity instance is nonempty", total > 0, "no classes");
  return r;
}

inline Report criterion_endomorphism() {
  Report r;
  const auto comm = comm_operad(2);
  const auto algebras = count_algebra_structures(comm, 2, 2);
  const auto maps = count_operad_maps_to_endomorphism(comm, 2, 2);
  expect(r, "comm algebras on 2 points = maps comm -> End", algebras == maps,
         std::to_string(algebras) + " algebras, " + std::to_string(maps) + " maps");
  return r;
}

}  // namespace detail

inline std::vector<Criterion> acceptance_criteria(const AcceptanceOptions& o = {}) {
  using namespace detail;
  return {
      {"AC1", "mu_sigma example in Sigma_9", 0.001, criterion_sigma9},
      {"AC2", "compatibility figure in Sigma_6", 0.001, criterion_sigma6},
      {"AC3", "tau fixtures and transpose inverses", 0.01, criterion_tau},
      {"AC4", "braid interchange equations and minimality", 60, criterion_braid_theorem},
      {"AC5", "non-symmetry witness t(2,2)", 1, criterion_non_symmetry},
      {"AC6", "symmetric pseudo-commutativity with tau", 10, criterion_symmetric},
      {"AC7", "pi is an operad map on random braids", 30, [o] { return criterion_projection(o); }},
      {"AC8", "word problem soundness", 60, [o] { return criterion_word_problem(o); }},
      {"AC9", "unit and identity consequences over Sigma and Br", 0, [o] { return criterion_calclem(o); }},
      {"AC10", "free monad laws for Comm and Ass", 30, criterion_monad},
      {"AC11", "cartesian criterion and pullback test", 0, criterion_cartesian},
      {"AC12", "composition product unit and associativity counts", 60, criterion_product},
      {"AC13", "algebras match maps into the endomorphism operad", 0, criterion_endomorphism},
  };
}

// Runs one criterion; an exception counts as a failure.
inline CriterionResult run_criterion(const Criterion& c, bool enforce_time) {
  CriterionResult out{c.id, c.title, false, 0, c.limit_seconds, {}};
  const auto start = std::chrono::steady_clock::now();
  try {
    const Report r = c.run();
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.passed = !r.laws().empty() && r.all_passed();
    std::size_t cases = 0;
    for (const auto& l : r.laws()) {
      cases += l.cases;
      if (!l.passed && out.detail.empty()) {
        out.detail = l.law + ": " + l.witness;
      }
    }
    if (out.passed) {
      const auto laws = r.laws().size();
      out.detail = std::to_string(laws) + (laws == 1 ? " law, " : " laws, ") + std::to_string(cases) +
                   (cases == 1 ? " case" : " cases");
    }
  } catch (const std::exception& e) {
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.detail = std::string("error: ") + e.what();
  }
  if (enforce_time && out.limit_seconds > 0 && out.seconds > out.limit_seconds) {
    if (out.passed) {
      out.detail = "over time limit";
    }
    out.passed = false;
  }
  return out;
}

// "PASS AC1 <title> (<detail>)", with the time and limit when `with_time`.
inline std::string format_result(const CriterionResult& r, bool with_time) {
  std::string line = std::string(r.passed ? "PASS " : "FAIL ") + r.id + " " + r.title + " (" + r.detail + ")";
  if (with_time) {
    char buf[64];
    if (r.limit_seconds > 0) {
      std::snprintf(buf, sizeof buf, " [%.3f s, limit %g s]", r.seconds, r.limit_seconds);
    } else {
      std::snprintf(buf, sizeof buf, " [%.3f s]", r.seconds);
    }
    line += buf;
  }
  return line;
}

}  // namespace aoperad
