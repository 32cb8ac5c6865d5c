#pragma once

// Finite G-operads.
//
// A G-collection X has finite label sets X(0..N) with a right action of G(n)
// on X(n); levels above N are empty.  A G-operad adds a unit in P(1) and a
// composition defined whenever the composite arity is at most N.  Labels are
// addressed by Op{arity, index}.
//
// Conventions shared with the monad:
//   equivariance    mu(x; y_i . g_i)  == mu(x; y) . mu(e; g_1..g_n)
//                   mu(x . g; y)      == mu(x; act(pi(g), y)) . mu(g; e_{k_1}..e_{k_n})
//   algebras        alpha(p . g; xs)  == alpha(p; act(pi(g), xs))
// where act is act_on_list, so act(pi(g), y)_i = y_{pi(g)^{-1}(i)}.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "aoperad/action_operad.hpp"
#include "aoperad/error.hpp"
#include "aoperad/perm.hpp"
#include "aoperad/report.hpp"

namespace aoperad {

struct Op {
  std::size_t arity = 0;
  std::size_t index = 0;
  friend bool operator==(const Op&, const Op&) = default;
  friend auto operator<=>(const Op&, const Op&) = default;
};

template <class E>
struct FiniteGCollection {
  std::string name;
  ActionOperad<E> group;
  std::vector<std::vector<std::string>> levels;
  // x . g for x in X(n), g in G(n); returns an index into levels[n].
  std::function<std::size_t(std::size_t n, std::size_t x, const E& g)> act;

  std::size_t max_arity() const { return levels.empty() ? 0 : levels.size() - 1; }
  std::size_t size(std::size_t n) const { return n < levels.size() ? levels[n].size() : 0; }
  const std::string& label(Op x) const { return levels.at(x.arity).at(x.index); }
  Op apply(Op x, const E& g) const { return {x.arity, act(x.arity, x.index, g)}; }

  std::size_t find(std::size_t n, const std::string& label) const {
    const auto& level = levels.at(n);
    const auto it = std::find(level.begin(), level.end(), label);
    if (it == level.end()) {
      throw ParseError("label '" + label + "' is not in level " + std::to_string(n));
    }
    return static_cast<std::size_t>(it - level.begin());
  }
};

template <class E>
struct FiniteGOperad {
  FiniteGCollection<E> collection;
  std::size_t unit = 0;  // index in level 1
  // mu(p; qs) as an index into the level of the composite arity.
  std::function<std::size_t(Op p, std::span<const Op> qs)> compose_fn;

  const std::string& name() const { return collection.name; }
  const ActionOperad<E>& group() const { return collection.group; }
  std::size_t max_arity() const { return collection.max_arity(); }
  Op unit_op() const { return {1, unit}; }

  Op compose(Op p, std::span<const Op> qs) const {
    if (qs.size() != p.arity) {
      throw ArityError("operadic composition: " + std::to_string(qs.size()) + " inputs for an operation of arity " +
                       std::to_string(p.arity));
    }
    std::size_t total = 0;
    for (const auto& q : qs) {
      total += q.arity;
    }
    if (total > max_arity()) {
      throw ArityOverflow("composite arity " + std::to_string(total) + " exceeds the bound " +
                          std::to_string(max_arity()));
    }
    return {total, compose_fn(p, qs)};
  }

  Op compose(Op p, const std::vector<Op>& qs) const { return compose(p, std::span<const Op>(qs)); }
};

// ---------------------------------------------------------------------------
// Combinatorial helpers.

// Calls visit(p, qs) for p in P(n) and q_i in P(ks[i]), capped like
// for_each_choice.
template <class E>
void for_each_composable(const FiniteGCollection<E>& P, std::size_t n, std::span<const std::size_t> ks,
                         std::size_t cap, std::mt19937_64& rng,
                         const std::function<void(Op, const std::vector<Op>&)>& visit) {
  std::vector<std::size_t> sizes{P.size(n)};
  for (auto k : ks) {
    sizes.push_back(P.size(k));
  }
  for_each_choice(sizes, cap, rng, [&](const std::vector<std::size_t>& ix) {
    std::vector<Op> qs;
    for (std::size_t i = 0; i < ks.size(); ++i) {
      qs.push_back({ks[i], ix[i + 1]});
    }
    visit({n, ix[0]}, qs);
  });
}

// A Sigma-collection from the images of the adjacent transpositions:
// generators[n][i-1][x] is x . s_i, and an empty generators[n] means a
// trivial action.  The images must satisfy the Coxeter relations; validate
// with coxeter_violation before use.
inline FiniteGCollection<Permutation> collection_from_generators(
    std::string name, std::vector<std::vector<std::string>> levels,
    std::vector<std::vector<std::vector<std::size_t>>> generators) {
  generators.resize(levels.size());
  auto gens = std::make_shared<std::vector<std::vector<std::vector<std::size_t>>>>(std::move(generators));
  FiniteGCollection<Permutation> X;
  X.name = std::move(name);
  X.group = symmetric_action_operad();
  X.levels = std::move(levels);
  X.act = [gens](std::size_t n, std::size_t x, const Permutation& g) {
    const auto& images = (*gens)[n];
    if (images.empty()) {
      return x;
    }
    // g = s_{i_1} o ... o s_{i_k}, so x . g = (...(x . s_{i_1}) ...) . s_{i_k}.
    const BraidWord word = permutation_braid(g);
    for (int i : word.letters()) {
      const auto& image = images.at(static_cast<std::size_t>(i) - 1);
      x = image.empty() ? x : image.at(x);
    }
    return x;
  };
  return X;
}

// First Coxeter relation broken by generator images on `size` labels, as
// text, or empty if s_i^2 = 1, (s_i s_{i+1})^3 = 1 and (s_i s_j)^2 = 1 for
// |i - j| >= 2 all hold.
inline std::string coxeter_violation(std::size_t size, const std::vector<std::vector<std::size_t>>& gens) {
  auto apply_word = [&](std::size_t x, std::initializer_list<std::size_t> word) {
    for (auto i : word) {
      x = gens[i][x];
    }
    return x;
  };
  const std::size_t r = gens.size();
  for (std::size_t x = 0; x < size; ++x) {
    for (std::size_t i = 0; i < r; ++i) {
      if (apply_word(x, {i, i}) != x) {
        return "s" + std::to_string(i + 1) + "^2 does not fix label " + std::to_string(x + 1);
      }
      if (i + 1 < r && apply_word(x, {i, i + 1, i, i + 1, i, i + 1}) != x) {
        return "(s" + std::to_string(i + 1) + " s" + std::to_string(i + 2) + ")^3 does not fix label " +
               std::to_string(x + 1);
      }
      for (std::size_t j = i + 2; j < r; ++j) {
        if (apply_word(x, {i, j, i, j}) != x) {
          return "(s" + std::to_string(i + 1) + " s" + std::to_string(j + 1) + ")^2 does not fix label " +
                 std::to_string(x + 1);
        }
      }
    }
  }
  return {};
}

// A T-collection: the trivial group acts trivially.
inline FiniteGCollection<TrivialElement> plain_collection(std::string name,
                                                          std::vector<std::vector<std::string>> levels) {
  FiniteGCollection<TrivialElement> X;
  X.name = std::move(name);
  X.group = trivial_action_operad();
  X.levels = std::move(levels);
  X.act = [](std::size_t, std::size_t x, const TrivialElement&) { return x; };
  return X;
}

// ---------------------------------------------------------------------------
// Law checking.

template <class E>
void check_collection(const FiniteGCollection<E>& X, const Sampler<E>& sampler, const CheckBudget& budget,
                      Report& report) {
  std::mt19937_64 rng(budget.seed);
  const auto& G = X.group;
  for (std::size_t n = 0; n <= X.max_arity(); ++n) {
    const auto elements = sampler(n);
    const E e = G.identity(n);
    for (std::size_t x = 0; x < X.size(n); ++x) {
      report.check("action.identity", X.act(n, x, e) == x, [&] { return X.levels[n][x] + " . e != itself"; });
    }
    std::vector<std::size_t> sizes{X.size(n), elements.size(), elements.size()};
    for_each_choice(sizes, budget.max_cases, rng, [&](const std::vector<std::size_t>& ix) {
      const E& g = elements[ix[1]];
      const E& h = elements[ix[2]];
      const std::size_t lhs = X.act(n, X.act(n, ix[0], g), h);
      const std::size_t rhs = X.act(n, ix[0], G.multiply(g, h));
      report.check("action.compose", lhs == rhs, [&] {
        return "x=" + X.levels[n][ix[0]] + " g=" + G.format(g) + " h=" + G.format(h) + ": (x.g).h=" +
               X.levels[n][lhs] + " x.(gh)=" + X.levels[n][rhs];
      });
    });
  }
}

template <class E>
std::string format_ops(const FiniteGCollection<E>& P, std::span<const Op> qs) {
  std::string out = "(";
  for (std::size_t i = 0; i < qs.size(); ++i) {
    out += (i ? ", " : "") + P.label(qs[i]);
  }
  return out + ")";
}

// Unit, associativity and both equivariance axioms, plus the action laws,
// for composites of arity <= budget.max_total (clamped to the operad bound).
template <class E>
Report check_operad(const FiniteGOperad<E>& P, const Sampler<E>& sampler, CheckBudget budget = {}) {
  Report report("operad laws: " + P.name());
  const auto& X = P.collection;
  const auto& G = P.group();
  budget.max_total = std::min(budget.max_total, P.max_arity());
  budget.max_arity = std::min(budget.max_arity, budget.max_total);
  check_collection(X, sampler, budget, report);
  std::mt19937_64 rng(budget.seed);
  const Op id = P.unit_op();

  for (std::size_t n = 0; n <= budget.max_total; ++n) {
    for (std::size_t p = 0; p < X.size(n); ++p) {
      const Op op{n, p};
      const std::vector<Op> one{op};
      const std::vector<Op> ids(n, id);
      const bool ok = P.compose(id, one) == op && P.compose(op, ids) == op;
      report.check("operad.unit", ok, [&] { return "p=" + X.label(op); });
    }
  }

  for (std::size_t n = 0; n <= budget.max_arity; ++n) {
    for (const auto& ks : bounded_signatures(n, budget.max_total, budget.max_total)) {
      const std::size_t K = std::accumulate(ks.begin(), ks.end(), std::size_t{0});
      for (const auto& ls : bounded_signatures(K, budget.max_total, budget.max_total)) {
        std::vector<std::size_t> sizes{X.size(n)};
        for (auto k : ks) {
          sizes.push_back(X.size(k));
        }
        for (auto l : ls) {
          sizes.push_back(X.size(l));
        }
        for_each_choice(sizes, budget.max_cases, rng, [&](const std::vector<std::size_t>& ix) {
          const Op p{n, ix[0]};
          std::vector<Op> qs, rs;
          for (std::size_t i = 0; i < n; ++i) {
            qs.push_back({ks[i], ix[1 + i]});
          }
          for (std::size_t j = 0; j < K; ++j) {
            rs.push_back({ls[j], ix[1 + n + j]});
          }
          const Op lhs = P.compose(P.compose(p, qs), rs);
          std::vector<Op> inner;
          std::size_t at = 0;
          for (std::size_t i = 0; i < n; ++i) {
            std::vector<Op> block(rs.begin() + static_cast<long>(at), rs.begin() + static_cast<long>(at + ks[i]));
            inner.push_back(P.compose(qs[i], block));
            at += ks[i];
          }
          const Op rhs = P.compose(p, inner);
          report.check("operad.associativity", lhs == rhs, [&] {
            return "p=" + X.label(p) + " qs=" + format_ops<E>(X, qs) + " rs=" + format_ops<E>(X, rs) +
                   ": " + X.label(lhs) + " != " + X.label(rhs);
          });
        });
      }
    }
  }

  // Equivariance.
  std::vector<std::vector<E>> elements(budget.max_total + 1);
  for (std::size_t n = 0; n <= budget.max_total; ++n) {
    elements[n] = sampler(n);
  }
  for (std::size_t n = 0; n <= budget.max_arity; ++n) {
    for (const auto& ks : bounded_signatures(n, budget.max_total, budget.max_total)) {
      std::vector<E> es;
      for (auto k : ks) {
        es.push_back(G.identity(k));
      }
      for_each_composable<E>(X, n, ks, budget.max_cases, rng, [&](Op x, const std::vector<Op>& ys) {
        const Op base = P.compose(x, ys);
        // Inputs: one g_i per input, sampled jointly.
        std::vector<std::size_t> gsizes;
        for (auto k : ks) {
          gsizes.push_back(elements[k].size());
        }
        for_each_choice(gsizes, std::max<std::size_t>(1, budget.max_cases / 16), rng,
                        [&](const std::vector<std::size_t>& gx) {
                          std::vector<E> gs;
                          std::vector<Op> acted;
                          for (std::size_t i = 0; i < n; ++i) {
                            gs.push_back(elements[ks[i]][gx[i]]);
                            acted.push_back(X.apply(ys[i], gs.back()));
                          }
                          const Op lhs = P.compose(x, acted);
                          const Op rhs = X.apply(base, G.compose_list(G.identity(n), gs));
                          report.check("equivariance.inputs", lhs == rhs, [&] {
                            return "x=" + X.label(x) + " ys=" + format_ops<E>(X, ys) +
                                   " gs=" + detail::format_list<E>(G, gs);
                          });
                        });
        for (const auto& g : elements[n]) {
          const Op lhs = P.compose(X.apply(x, g), ys);
          const auto permuted = act_on_list(G.project(g), ys);
          const Op rhs = X.apply(P.compose(x, permuted), G.compose_list(g, es));
          report.check("equivariance.output", lhs == rhs, [&] {
            return "x=" + X.label(x) + " g=" + G.format(g) + " ys=" + format_ops<E>(X, ys);
          });
        }
      });
    }
  }
  return report;
}

template <class E>
Report check_operad(const FiniteGOperad<E>& P, CheckBudget budget = {}) {
  return check_operad(P, exhaustive_sampler(P.group()), budget);
}

// ---------------------------------------------------------------------------
// Shipped operads built in code.

// P(n) = {*} with the trivial action; over Sigma this is Comm, over T the
// nonsymmetric associative operad.
template <class E>
FiniteGOperad<E> terminal_operad(const ActionOperad<E>& G, std::size_t max_arity, std::string name) {
  FiniteGOperad<E> P;
  P.collection.name = std::move(name);
  P.collection.group = G;
  P.collection.levels.assign(max_arity + 1, {"*"});
  P.collection.act = [](std::size_t, std::size_t x, const E&) { return x; };
  P.unit = 0;
  P.compose_fn = [](Op, std::span<const Op>) { return std::size_t{0}; };
  return P;
}

inline FiniteGOperad<Permutation> comm_operad(std::size_t max_arity = 4) {
  return terminal_operad(symmetric_action_operad(), max_arity, "comm");
}

inline std::string permutation_label(const Permutation& p) { return "[" + format_permutation(p) + "]"; }

// P(n) = Sigma_n acting by right multiplication, composed by mu_sigma.
inline FiniteGOperad<Permutation> ass_operad(std::size_t max_arity = 4) {
  auto table = std::make_shared<std::vector<std::vector<Permutation>>>();
  FiniteGOperad<Permutation> P;
  P.collection.name = "ass";
  P.collection.group = symmetric_action_operad();
  for (std::size_t n = 0; n <= max_arity; ++n) {
    table->push_back(all_permutations(n));
    P.collection.levels.emplace_back();
    for (const auto& p : table->back()) {
      P.collection.levels.back().push_back(permutation_label(p));
    }
  }
  auto rank = [table](const Permutation& p) {
    const auto& level = (*table)[p.size()];
    return static_cast<std::size_t>(std::lower_bound(level.begin(), level.end(), p) - level.begin());
  };
  P.collection.act = [table, rank](std::size_t n, std::size_t x, const Permutation& g) {
    return rank(compose((*table)[n][x], g));
  };
  P.unit = 0;
  P.compose_fn = [table, rank](Op p, std::span<const Op> qs) {
    std::vector<Permutation> taus;
    for (const auto& q : qs) {
      taus.push_back((*table)[q.arity][q.index]);
    }
    return rank(mu_sigma((*table)[p.arity][p.index], taus));
  };
  return P;
}

// ---------------------------------------------------------------------------
// Endomorphism operad.

// Labels of E_X(n): the outputs on all n-tuples in lexicographic order,
// concatenated when every carrier name is one character, comma separated
// otherwise.
inline std::string function_label(std::span<const std::size_t> outputs, std::span<const std::string> carrier) {
  const bool short_names =
      std::all_of(carrier.begin(), carrier.end(), [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    if (!short_names && i > 0) {
      out += ',';
    }
    out += carrier[outputs[i]];
  }
  return out;
}

inline constexpr std::size_t kMaxLevelSize = std::size_t{1} << 16;

// E_X(n) = all maps X^n -> X.  A map is stored as the base-|X| number whose
// digits, most significant first, are its outputs on the tuples in
// lexicographic order.  mu(f; g_1..g_n) = f o (g_1 x ... x g_n); the action is
// (f . g)(xs) = f(act(pi(g), xs)).
template <class E>
FiniteGOperad<E> endomorphism_operad(const std::vector<std::string>& carrier, const ActionOperad<E>& G,
                                     std::size_t max_arity) {
  const std::size_t q = carrier.size();
  if (q == 0) {
    throw SizeOverflow("the endomorphism operad of the empty set has no unit");
  }
  std::vector<std::size_t> tuples(max_arity + 1);
  std::vector<std::size_t> level_size(max_arity + 1);
  for (std::size_t n = 0; n <= max_arity; ++n) {
    tuples[n] = checked_power(q, n, kMaxLevelSize);
    level_size[n] = checked_power(q, tuples[n], kMaxLevelSize);
  }
  // outputs(n, f)[t] = f applied to the t-th tuple.
  auto outputs = [q, tuples](std::size_t n, std::size_t f) { return tuple_unrank(f, q, tuples[n]); };
  auto encode = [q](const std::vector<std::size_t>& outs) { return tuple_rank(outs, q); };

  FiniteGOperad<E> P;
  P.collection.name = "End(" + std::to_string(q) + ")";
  P.collection.group = G;
  for (std::size_t n = 0; n <= max_arity; ++n) {
    P.collection.levels.emplace_back();
    auto& level = P.collection.levels.back();
    level.reserve(level_size[n]);
    for (std::size_t f = 0; f < level_size[n]; ++f) {
      level.push_back(function_label(outputs(n, f), carrier));
    }
  }
  P.collection.act = [=](std::size_t n, std::size_t f, const E& g) {
    const auto outs = outputs(n, f);
    const Permutation p = G.project(g);
    std::vector<std::size_t> acted(tuples[n]);
    for (std::size_t t = 0; t < tuples[n]; ++t) {
      const auto xs = tuple_unrank(t, q, n);
      acted[t] = outs[tuple_rank(act_on_list(p, xs), q)];
    }
    return encode(acted);
  };
  std::vector<std::size_t> identity(q);
  std::iota(identity.begin(), identity.end(), std::size_t{0});
  P.unit = encode(identity);
  P.compose_fn = [=](Op f, std::span<const Op> gs) {
    std::size_t total = 0;
    for (const auto& g : gs) {
      total += g.arity;
    }
    const auto fo = outputs(f.arity, f.index);
    std::vector<std::vector<std::size_t>> go;
    for (const auto& g : gs) {
      go.push_back(outputs(g.arity, g.index));
    }
    std::vector<std::size_t> result(tuples[total]);
    for (std::size_t t = 0; t < tuples[total]; ++t) {
      const auto xs = tuple_unrank(t, q, total);
      std::vector<std::size_t> inner;
      std::size_t at = 0;
      for (std::size_t i = 0; i < gs.size(); ++i) {
        const std::span<const std::size_t> block(xs.data() + at, gs[i].arity);
        inner.push_back(go[i][tuple_rank(block, q)]);
        at += gs[i].arity;
      }
      result[t] = fo[tuple_rank(inner, q)];
    }
    return encode(result);
  };
  return P;
}

// ---------------------------------------------------------------------------
// Change of groups: a map f: G -> G' turns a G'-operad into a G-operad with
// the same sets and composition, G acting through f.

template <class S, class D>
FiniteGOperad<S> change_groups(const ActionOperadMap<S, D>& f, const FiniteGOperad<D>& P) {
  FiniteGOperad<S> out;
  out.collection.name = P.name() + " over " + f.source.name;
  out.collection.group = f.source;
  out.collection.levels = P.collection.levels;
  auto act = P.collection.act;
  auto apply = f.apply;
  out.collection.act = [act, apply](std::size_t n, std::size_t x, const S& g) { return act(n, x, apply(g)); };
  out.unit = P.unit;
  out.compose_fn = P.compose_fn;
  return out;
}

// ---------------------------------------------------------------------------
// Algebras.

struct AlgebraStructure {
  std::vector<std::string> carrier;
  // alpha(p; xs) as an index into carrier.
  std::function<std::size_t(Op p, std::span<const std::size_t> xs)> apply;
};

// An algebra given by one output table per label: tables[n][p][rank(xs)].
inline AlgebraStructure algebra_from_tables(std::vector<std::string> carrier,
                                            std::vector<std::vector<std::vector<std::size_t>>> tables) {
  const std::size_t q = carrier.size();
  auto shared = std::make_shared<std::vector<std::vector<std::vector<std::size_t>>>>(std::move(tables));
  return {std::move(carrier), [q, shared](Op p, std::span<const std::size_t> xs) {
            return (*shared).at(p.arity).at(p.index).at(tuple_rank(xs, q));
          }};
}

// Unit, associativity and equivariance of alpha, exhaustively over the carrier
// for composites of arity <= bound.
template <class E>
Report check_algebra(const FiniteGOperad<E>& P, const AlgebraStructure& A, std::size_t bound,
                     const Sampler<E>& sampler) {
  Report report("algebra laws: " + P.name());
  bound = std::min(bound, P.max_arity());
  const auto& X = P.collection;
  const auto& G = P.group();
  const std::size_t q = A.carrier.size();
  auto show = [&](std::span<const std::size_t> xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      out += (i ? "," : "") + A.carrier[xs[i]];
    }
    return out;
  };
  for (std::size_t x = 0; x < q; ++x) {
    const std::vector<std::size_t> one{x};
    report.check("algebra.unit", A.apply(P.unit_op(), one) == x, [&] { return "x=" + A.carrier[x]; });
  }
  for (std::size_t n = 0; n <= bound; ++n) {
    for (const auto& ks : bounded_signatures(n, bound, bound)) {
      const std::size_t K = std::accumulate(ks.begin(), ks.end(), std::size_t{0});
      std::mt19937_64 rng(1);
      for_each_composable<E>(X, n, ks, std::size_t{1} << 20, rng, [&](Op p, const std::vector<Op>& qs) {
        const Op composite = P.compose(p, qs);
        for_each_tuple(q, K, [&](const std::vector<std::size_t>& xs) {
          std::vector<std::size_t> inner;
          std::size_t at = 0;
          for (std::size_t i = 0; i < n; ++i) {
            inner.push_back(A.apply(qs[i], std::span<const std::size_t>(xs.data() + at, ks[i])));
            at += ks[i];
          }
          report.check("algebra.associativity", A.apply(composite, xs) == A.apply(p, inner), [&] {
            return "p=" + X.label(p) + " qs=" + format_ops<E>(X, qs) + " xs=" + show(xs);
          });
        });
      });
    }
    for (std::size_t p = 0; p < X.size(n); ++p) {
      for (const auto& g : sampler(n)) {
        const Permutation pg = G.project(g);
        for_each_tuple(q, n, [&](const std::vector<std::size_t>& xs) {
          const auto lhs = A.apply(X.apply({n, p}, g), xs);
          const auto rhs = A.apply({n, p}, act_on_list(pg, xs));
          report.check("algebra.equivariance", lhs == rhs, [&] {
            return "p=" + X.levels[n][p] + " g=" + G.format(g) + " xs=" + show(xs);
          });
        });
      }
    }
  }
  return report;
}

template <class E>
Report check_algebra(const FiniteGOperad<E>& P, const AlgebraStructure& A, std::size_t bound) {
  return check_algebra(P, A, bound, exhaustive_sampler(P.group()));
}

inline constexpr std::size_t kMaxCandidates = std::size_t{1} << 22;

// Visits every assignment choice[label] in [0, options(label)) for the labels
// of levels 0..bound, in lexicographic order.
template <class E>
void for_each_assignment(const FiniteGCollection<E>& P, std::size_t bound,
                         const std::function<std::size_t(std::size_t n)>& options,
                         const std::function<void(const std::vector<std::vector<std::size_t>>&)>& visit) {
  std::size_t total = 1;
  std::vector<Op> slots;
  for (std::size_t n = 0; n <= bound; ++n) {
    for (std::size_t p = 0; p < P.size(n); ++p) {
      slots.push_back({n, p});
      const std::size_t k = options(n);
      if (k == 0) {
        return;
      }
      if (total > kMaxCandidates / k) {
        throw SizeOverflow("more than " + std::to_string(kMaxCandidates) + " candidate structures");
      }
      total *= k;
    }
  }
  std::vector<std::vector<std::size_t>> choice(bound + 1);
  for (std::size_t n = 0; n <= bound; ++n) {
    choice[n].assign(P.size(n), 0);
  }
  for (;;) {
    visit(choice);
    std::size_t s = slots.size();
    while (s > 0) {
      const Op slot = slots[s - 1];
      if (++choice[slot.arity][slot.index] < options(slot.arity)) {
        break;
      }
      choice[slot.arity][slot.index] = 0;
      --s;
    }
    if (s == 0) {
      return;
    }
  }
}

// Calls visit(tables) for every algebra structure on a carrier of the given
// size, truncated at `bound`: tables[n][p][rank(xs)] = alpha(p; xs).
template <class E>
void for_each_algebra_structure(const FiniteGOperad<E>& P, std::size_t carrier_size, std::size_t bound,
                                const std::function<void(const std::vector<std::vector<std::vector<std::size_t>>>&)>&
                                    visit) {
  bound = std::min(bound, P.max_arity());
  std::vector<std::string> carrier;
  for (std::size_t x = 0; x < carrier_size; ++x) {
    carrier.push_back(std::to_string(x));
  }
  std::vector<std::size_t> tuples(bound + 1);
  for (std::size_t n = 0; n <= bound; ++n) {
    tuples[n] = checked_power(carrier_size, n, kMaxLevelSize);
  }
  const auto sampler = exhaustive_sampler(P.group());
  for_each_assignment<E>(
      P.collection, bound, [&](std::size_t n) { return checked_power(carrier_size, tuples[n], kMaxCandidates); },
      [&](const std::vector<std::vector<std::size_t>>& choice) {
        std::vector<std::vector<std::vector<std::size_t>>> tables(bound + 1);
        for (std::size_t n = 0; n <= bound; ++n) {
          for (auto code : choice[n]) {
            tables[n].push_back(tuple_unrank(code, carrier_size, tuples[n]));
          }
        }
        if (check_algebra(P, algebra_from_tables(carrier, tables), bound, sampler).all_passed()) {
          visit(tables);
        }
      });
}

template <class E>
std::size_t count_algebra_structures(const FiniteGOperad<E>& P, std::size_t carrier_size, std::size_t bound) {
  std::size_t count = 0;
  for_each_algebra_structure(P, carrier_size, bound, [&](const auto&) { ++count; });
  return count;
}

// Number of G-operad maps P -> E_X (truncated at `bound`): unit-preserving,
// composition-preserving and equivariant label maps.
template <class E>
std::size_t count_operad_maps_to_endomorphism(const FiniteGOperad<E>& P, std::size_t carrier_size,
                                              std::size_t bound) {
  bound = std::min(bound, P.max_arity());
  std::vector<std::string> carrier;
  for (std::size_t x = 0; x < carrier_size; ++x) {
    carrier.push_back(std::to_string(x));
  }
  const auto End = endomorphism_operad(carrier, P.group(), bound);
  const auto& X = P.collection;
  const auto& G = P.group();
  std::vector<std::vector<E>> elements(bound + 1);
  for (std::size_t n = 0; n <= bound; ++n) {
    elements[n] = G.elements(n);
  }
  std::size_t count = 0;
  for_each_assignment<E>(
      X, bound, [&](std::size_t n) { return End.collection.size(n); },
      [&](const std::vector<std::vector<std::size_t>>& f) {
        auto image = [&](Op p) { return Op{p.arity, f[p.arity][p.index]}; };
        if (image(P.unit_op()) != End.unit_op()) {
          return;
        }
        for (std::size_t n = 0; n <= bound; ++n) {
          for (std::size_t p = 0; p < X.size(n); ++p) {
            for (const auto& g : elements[n]) {
              if (image(X.apply({n, p}, g)) != End.collection.apply(image({n, p}), g)) {
                return;
              }
            }
          }
        }
        for (std::size_t n = 0; n <= bound; ++n) {
          for (const auto& ks : bounded_signatures(n, bound, bound)) {
            bool ok = true;
            std::mt19937_64 rng(1);
            for_each_composable<E>(X, n, ks, std::size_t{1} << 20, rng, [&](Op p, const std::vector<Op>& qs) {
              if (!ok) {
                return;
              }
              std::vector<Op> fqs;
              for (const auto& q : qs) {
                fqs.push_back(image(q));
              }
              ok = image(P.compose(p, qs)) == End.compose(image(p), fqs);
            });
            if (!ok) {
              return;
            }
          }
        }
        ++count;
      });
  return count;
}

}  // namespace aoperad
