#pragma once

// Action operads: a family of groups G(n) that is itself an operad, with a
// projection to the symmetric groups that is both a group homomorphism and an
// operad map, subject to the compatibility law
//
//   mu(g; f_1..f_n) * mu(g'; f'_1..f'_n)
//       == mu(g g'; f_{pi(g')(1)} f'_1, ..., f_{pi(g')(n)} f'_n).
//
// An ActionOperad is a record of pure functions over an arity-tagged element
// type.  Shipped instances: trivial (T), symmetric (Sigma) and braid (Br).

#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "aoperad/braid.hpp"
#include "aoperad/error.hpp"
#include "aoperad/perm.hpp"
#include "aoperad/report.hpp"

namespace aoperad {

// The only element of T(n).
struct TrivialElement {
  std::size_t arity = 0;
  friend bool operator==(const TrivialElement&, const TrivialElement&) = default;
  friend auto operator<=>(const TrivialElement&, const TrivialElement&) = default;
};

template <class E>
struct ActionOperad {
  std::string name;
  std::function<E(std::size_t)> identity;
  std::function<E()> operad_unit;
  std::function<E(const E&, const E&)> multiply;
  std::function<E(const E&)> invert;
  std::function<bool(const E&, const E&)> equal;
  std::function<Permutation(const E&)> project;
  std::function<E(const E&, std::span<const E>)> compose;
  std::function<std::size_t(const E&)> arity;
  std::function<std::string(const E&)> format;
  // Sorted list of G(n); left empty for infinite groups.
  std::function<std::vector<E>(std::size_t)> enumerate;

  bool finite() const { return static_cast<bool>(enumerate); }

  std::vector<E> elements(std::size_t n) const {
    if (!finite()) {
      throw UnsupportedGroup("the groups of '" + name + "' cannot be enumerated");
    }
    return enumerate(n);
  }

  E compose_list(const E& g, const std::vector<E>& fs) const { return compose(g, std::span<const E>(fs)); }
};

inline ActionOperad<TrivialElement> trivial_action_operad() {
  ActionOperad<TrivialElement> g;
  g.name = "trivial";
  g.identity = [](std::size_t n) { return TrivialElement{n}; };
  g.operad_unit = [] { return TrivialElement{1}; };
  g.multiply = [](const TrivialElement& a, const TrivialElement& b) {
    if (a.arity != b.arity) {
      throw ArityError("cannot multiply elements of T(" + std::to_string(a.arity) + ") and T(" +
                       std::to_string(b.arity) + ")");
    }
    return a;
  };
  g.invert = [](const TrivialElement& a) { return a; };
  g.equal = [](const TrivialElement& a, const TrivialElement& b) { return a == b; };
  g.project = [](const TrivialElement& a) { return Permutation::identity(a.arity); };
  g.compose = [](const TrivialElement& a, std::span<const TrivialElement> fs) {
    if (fs.size() != a.arity) {
      throw ArityError("operadic composition in T: " + std::to_string(fs.size()) + " inputs for arity " +
                       std::to_string(a.arity));
    }
    std::size_t total = 0;
    for (const auto& f : fs) {
      total += f.arity;
    }
    return TrivialElement{total};
  };
  g.arity = [](const TrivialElement& a) { return a.arity; };
  g.format = [](const TrivialElement& a) { return "e" + std::to_string(a.arity); };
  g.enumerate = [](std::size_t n) { return std::vector<TrivialElement>{TrivialElement{n}}; };
  return g;
}

inline ActionOperad<Permutation> symmetric_action_operad() {
  ActionOperad<Permutation> g;
  g.name = "symmetric";
  g.identity = [](std::size_t n) { return Permutation::identity(n); };
  g.operad_unit = [] { return Permutation::identity(1); };
  g.multiply = [](const Permutation& a, const Permutation& b) { return compose(a, b); };
  g.invert = [](const Permutation& a) { return inverse(a); };
  g.equal = [](const Permutation& a, const Permutation& b) { return a == b; };
  g.project = [](const Permutation& a) { return a; };
  g.compose = [](const Permutation& a, std::span<const Permutation> fs) { return mu_sigma(a, fs); };
  g.arity = [](const Permutation& a) { return a.size(); };
  g.format = [](const Permutation& a) { return "[" + format_permutation(a) + "]"; };
  g.enumerate = [](std::size_t n) { return all_permutations(n); };
  return g;
}

inline ActionOperad<BraidWord> braid_action_operad() {
  ActionOperad<BraidWord> g;
  g.name = "braid";
  g.identity = [](std::size_t n) { return BraidWord::identity(n); };
  g.operad_unit = [] { return BraidWord::identity(1); };
  g.multiply = [](const BraidWord& a, const BraidWord& b) { return a * b; };
  g.invert = [](const BraidWord& a) { return inverse(a); };
  g.equal = [](const BraidWord& a, const BraidWord& b) { return equal(a, b); };
  g.project = [](const BraidWord& a) { return underlying_permutation(a); };
  g.compose = [](const BraidWord& a, std::span<const BraidWord> fs) { return mu_br(a, fs); };
  g.arity = [](const BraidWord& a) { return a.strands(); };
  g.format = [](const BraidWord& a) { return "<" + std::to_string(a.strands()) + ": " + format_word(a) + ">"; };
  return g;
}

// Sample elements of G(n), for a given n.
template <class E>
using Sampler = std::function<std::vector<E>(std::size_t)>;

template <class E>
Sampler<E> exhaustive_sampler(const ActionOperad<E>& g) {
  return [g](std::size_t n) { return g.elements(n); };
}

namespace detail {

// Portable draws from mt19937_64 (whose output sequence is fixed by the
// standard, unlike the distributions).
inline std::size_t draw(std::mt19937_64& rng, std::size_t bound) { return bound == 0 ? 0 : rng() % bound; }

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace detail

inline BraidWord random_braid(std::mt19937_64& rng, std::size_t strands, std::size_t length) {
  std::vector<int> letters;
  if (strands >= 2) {
    for (std::size_t k = 0; k < length; ++k) {
      const int i = static_cast<int>(1 + detail::draw(rng, strands - 1));
      letters.push_back(detail::draw(rng, 2) == 0 ? i : -i);
    }
  }
  return BraidWord(strands, std::move(letters));
}

// The identity plus `count - 1` random words of length 1..max_length, seeded
// per arity so the samples do not depend on the order of queries.
inline Sampler<BraidWord> random_braid_sampler(std::uint64_t seed, std::size_t count, std::size_t max_length) {
  return [=](std::size_t n) {
    std::vector<BraidWord> out{BraidWord::identity(n)};
    if (n < 2) {
      return out;
    }
    std::mt19937_64 rng(detail::mix_seed(seed, n));
    for (std::size_t k = 1; k < count; ++k) {
      out.push_back(random_braid(rng, n, 1 + detail::draw(rng, max_length)));
    }
    return out;
  };
}

struct CheckBudget {
  std::size_t max_arity = 3;   // largest arity of a single element
  std::size_t max_total = 4;   // largest arity of a composite
  std::size_t max_cases = 4000;  // per law and shape; larger products are sampled
  std::uint64_t seed = 1;
};

// Calls visit(indices) for every index tuple of the product of `sizes`, or for
// `cap` random tuples when the product is larger than `cap`.
inline void for_each_choice(std::span<const std::size_t> sizes, std::size_t cap, std::mt19937_64& rng,
                            const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::size_t product = 1;
  for (auto s : sizes) {
    if (s == 0) {
      return;
    }
    if (product > cap / s + 1) {
      product = cap + 1;
    } else {
      product *= s;
    }
  }
  std::vector<std::size_t> idx(sizes.size(), 0);
  if (product <= cap) {
    for (;;) {
      visit(idx);
      std::size_t k = 0;
      while (k < idx.size()) {
        if (++idx[k] < sizes[k]) {
          break;
        }
        idx[k] = 0;
        ++k;
      }
      if (k == idx.size()) {
        return;
      }
    }
  }
  for (std::size_t c = 0; c < cap; ++c) {
    for (std::size_t k = 0; k < sizes.size(); ++k) {
      idx[k] = detail::draw(rng, sizes[k]);
    }
    visit(idx);
  }
}

namespace detail {

template <class E>
std::string format_list(const ActionOperad<E>& g, std::span<const E> xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out += (i ? ", " : "") + g.format(xs[i]);
  }
  return out + ")";
}

// Runs `body`; an ArityError inside counts as a failed case.
template <class Body>
void guarded(Report& report, const std::string& law, Body&& body) {
  try {
    body();
  } catch (const ArityError& e) {
    report.check(law, false, [&] { return std::string("arity error: ") + e.what(); });
  }
}

}  // namespace detail

// Element-level check of the strict monoidal structure +(g, h) := mu(e_2; g, h)
// for summand arities a, b <= max_arity with a + b <= max_total.
template <class E>
void check_monoidal_sum(const ActionOperad<E>& G, const Sampler<E>& sampler, const CheckBudget& budget,
                        Report& report) {
  std::mt19937_64 rng(budget.seed ^ 0x5eedULL);
  std::vector<std::vector<E>> samples(budget.max_arity + 1);
  for (std::size_t n = 0; n <= budget.max_arity; ++n) {
    samples[n] = sampler(n);
  }
  auto fmt = [&](const E& x) { return G.format(x); };
  const E e2 = G.identity(2);
  auto plus = [&](const E& a, const E& b) { return G.compose_list(e2, {a, b}); };
  for (std::size_t a = 0; a <= budget.max_arity; ++a) {
    for (std::size_t b = 0; a + b <= budget.max_total && b <= budget.max_arity; ++b) {
      report.check("monoidal.plus_identity", G.equal(plus(G.identity(a), G.identity(b)), G.identity(a + b)),
                   [&] { return "a=" + std::to_string(a) + " b=" + std::to_string(b); });
      std::vector<std::size_t> four{samples[a].size(), samples[b].size(), samples[a].size(), samples[b].size()};
      for_each_choice(four, budget.max_cases, rng, [&](const std::vector<std::size_t>& ix) {
        const E &g = samples[a][ix[0]], &h = samples[b][ix[1]], &g2 = samples[a][ix[2]], &h2 = samples[b][ix[3]];
        report.check("monoidal.plus_multiplicative",
                     G.equal(G.multiply(plus(g, h), plus(g2, h2)), plus(G.multiply(g, g2), G.multiply(h, h2))),
                     [&] { return "g=" + fmt(g) + " h=" + fmt(h) + " g'=" + fmt(g2) + " h'=" + fmt(h2); });
      });
      for (std::size_t c = 0; a + b + c <= budget.max_total && c <= budget.max_arity; ++c) {
        std::vector<std::size_t> three{samples[a].size(), samples[b].size(), samples[c].size()};
        for_each_choice(three, budget.max_cases, rng, [&](const std::vector<std::size_t>& ix) {
          const E &f = samples[a][ix[0]], &g = samples[b][ix[1]], &h = samples[c][ix[2]];
          report.check("monoidal.plus_associative", G.equal(plus(plus(f, g), h), plus(f, plus(g, h))),
                       [&] { return "f=" + fmt(f) + " g=" + fmt(g) + " h=" + fmt(h); });
        });
      }
    }
  }
}

// Samples every law of an action operad, plus the consequences that hold in
// any action operad: e_1 is the operadic unit, mu(e_n; e_{i_1}..e_{i_n}) is
// e_I, G(1) is abelian, and +(g, h) := mu(e_2; g, h) is a strictly
// associative homomorphism.  Surjectivity of the projection is not required.
template <class E>
Report check_axioms(const ActionOperad<E>& G, const Sampler<E>& sampler, const CheckBudget& budget = {}) {
  Report report("action operad axioms: " + G.name);
  std::mt19937_64 rng(budget.seed);
  const std::size_t top = std::max(budget.max_arity, budget.max_total);
  std::vector<std::vector<E>> samples(top + 1);
  for (std::size_t n = 0; n <= top; ++n) {
    samples[n] = sampler(n);
  }
  auto fmt = [&](const E& x) { return G.format(x); };
  const E id = G.operad_unit();

  for (std::size_t n = 0; n <= budget.max_arity; ++n) {
    const auto& S = samples[n];
    const E e = G.identity(n);
    detail::guarded(report, "group.identity", [&] {
      for (const auto& g : S) {
        report.check("group.identity", G.equal(G.multiply(e, g), g) && G.equal(G.multiply(g, e), g),
                     [&] { return "g=" + fmt(g); });
      }
    });
    detail::guarded(report, "group.inverse", [&] {
      for (const auto& g : S) {
        const E gi = G.invert(g);
        report.check("group.inverse", G.equal(G.multiply(g, gi), e) && G.equal(G.multiply(gi, g), e),
                     [&] { return "g=" + fmt(g); });
      }
    });
    std::vector<std::size_t> three(3, S.size());
    for_each_choice(three, budget.max_cases, rng, [&](const std::vector<std::size_t>& ix) {
      detail::guarded(report, "group.associativity", [&] {
        const E &a = S[ix[0]], &b = S[ix[1]], &c = S[ix[2]];
        report.check("group.associativity",
                     G.equal(G.multiply(G.multiply(a, b), c), G.multiply(a, G.multiply(b, c))),
                     [&] { return "a=" + fmt(a) + " b=" + fmt(b) + " c=" + fmt(c); });
      });
    });
    report.check("project.identity", G.project(e).is_identity(), [&] { return "n=" + std::to_string(n); });
    std::vector<std::size_t> two(2, S.size());
    for_each_choice(two, budget.max_cases, rng, [&](const std::vector<std::size_t>& ix) {
      detail::guarded(report, "project.homomorphism", [&] {
        const E &a = S[ix[0]], &b = S[ix[1]];
        report.check("project.homomorphism",
                     G.project(G.multiply(a, b)) == compose(G.project(a), G.project(b)),
                     [&] { return "a=" + fmt(a) + " b=" + fmt(b); });
      });
    });
    detail::guarded(report, "operad.unit", [&] {
      for (const auto& g : S) {
        const std::vector<E> ids(n, id);
        report.check("operad.unit",
                     G.equal(G.compose_list(id, {g}), g) && G.equal(G.compose_list(g, ids), g),
                     [&] { return "g=" + fmt(g); });
      }
    });
  }

  // Operadic associativity and the operad-map property of the projection.
  for (std::size_t n = 0; n <= budget.max_arity; ++n) {
    for (const auto& ks : bounded_signatures(n, budget.max_arity, budget.max_total)) {
      std::vector<std::size_t> sizes{samples[n].size()};
      for (auto k : ks) {
        sizes.push_back(samples[k].size());
      }
      for_each_choice(sizes, budget.max_cases, rng, [&](const std::vector<std::size_t>& ix) {
        const E& g = samples[n][ix[0]];
        std::vector<E> fs;
        for (std::size_t i = 0; i < n; ++i) {
          fs.push_back(samples[ks[i]][ix[i + 1]]);
        }
        detail::guarded(report, "project.operad_map", [&] {
          std::vector<Permutation> pf;
          for (const auto& f : fs) {
            pf.push_back(G.project(f));
          }
          report.check("project.operad_map", G.project(G.compose_list(g, fs)) == mu_sigma(G.project(g), pf),
                       [&] { return "g=" + fmt(g) + " fs=" + detail::format_list<E>(G, fs); });
        });
      });
      const std::size_t total_k = std::accumulate(ks.begin(), ks.end(), std::size_t{0});
      for (const auto& ls : bounded_signatures(total_k, budget.max_arity, budget.max_total)) {
        std::vector<std::size_t> shape{samples[n].size()};
        for (auto k : ks) {
          shape.push_back(samples[k].size());
        }
        for (auto l : ls) {
          shape.push_back(samples[l].size());
        }
        for_each_choice(shape, budget.max_cases, rng, [&](const std::vector<std::size_t>& ix) {
          detail::guarded(report, "operad.associativity", [&] {
            const E& g = samples[n][ix[0]];
            std::vector<E> fs, hs;
            for (std::size_t i = 0; i < n; ++i) {
              fs.push_back(samples[ks[i]][ix[1 + i]]);
            }
            for (std::size_t j = 0; j < ls.size(); ++j) {
              hs.push_back(samples[ls[j]][ix[1 + n + j]]);
            }
            const E lhs = G.compose_list(G.compose_list(g, fs), hs);
            std::vector<E> inner;
            std::size_t at = 0;
            for (std::size_t i = 0; i < n; ++i) {
              std::vector<E> block(hs.begin() + static_cast<long>(at),
                                   hs.begin() + static_cast<long>(at + ks[i]));
              inner.push_back(G.compose_list(fs[i], block));
              at += ks[i];
            }
            const E rhs = G.compose_list(g, inner);
            report.check("operad.associativity", G.equal(lhs, rhs), [&] {
              return "g=" + fmt(g) + " fs=" + detail::format_list<E>(G, fs) +
                     " hs=" + detail::format_list<E>(G, hs);
            });
          });
        });
      }
    }
  }

  // Compatibility of group multiplication with operadic composition.
  for (std::size_t n = 0; n <= budget.max_arity; ++n) {
    const auto& S = samples[n];
    for (const auto& ks : bounded_signatures(n, budget.max_arity, budget.max_total)) {
      std::vector<std::size_t> pair_sizes{S.size(), S.size()};
      for_each_choice(pair_sizes, budget.max_cases, rng, [&](const std::vector<std::size_t>& gp) {
        const E& g = S[gp[0]];
        const E& g2 = S[gp[1]];
        detail::guarded(report, "compatibility", [&] {
          const Permutation p2 = G.project(g2);
          const Permutation p2inv = inverse(p2);
          // f_i in G(k_{pi(g')^{-1}(i)}), f'_i in G(k_i).
          std::vector<std::size_t> sizes;
          for (std::size_t i = 1; i <= n; ++i) {
            sizes.push_back(samples[ks[p2inv(i) - 1]].size());
          }
          for (std::size_t i = 0; i < n; ++i) {
            sizes.push_back(samples[ks[i]].size());
          }
          const std::size_t cap = std::max<std::size_t>(1, budget.max_cases / std::max<std::size_t>(1, S.size() * S.size()));
          for_each_choice(sizes, cap, rng, [&](const std::vector<std::size_t>& ix) {
            detail::guarded(report, "compatibility", [&] {
              std::vector<E> fs, fps;
              for (std::size_t i = 1; i <= n; ++i) {
                fs.push_back(samples[ks[p2inv(i) - 1]][ix[i - 1]]);
              }
              for (std::size_t i = 0; i < n; ++i) {
                fps.push_back(samples[ks[i]][ix[n + i]]);
              }
              const E lhs = G.multiply(G.compose_list(g, fs), G.compose_list(g2, fps));
              std::vector<E> combined;
              for (std::size_t i = 1; i <= n; ++i) {
                combined.push_back(G.multiply(fs[p2(i) - 1], fps[i - 1]));
              }
              const E rhs = G.compose_list(G.multiply(g, g2), combined);
              report.check("compatibility", G.equal(lhs, rhs), [&] {
                return "g=" + fmt(g) + " g'=" + fmt(g2) + " fs=" + detail::format_list<E>(G, fs) +
                       " f's=" + detail::format_list<E>(G, fps);
              });
            });
          });
        });
      });
    }
  }

  // Consequences of the axioms.
  report.check("calclem.unit_is_identity", G.equal(G.identity(1), id),
               [&] { return "e_1=" + fmt(G.identity(1)) + " id=" + fmt(id); });
  for (std::size_t n = 0; n <= budget.max_arity; ++n) {
    for (const auto& is : bounded_signatures(n, budget.max_arity, n * budget.max_arity)) {
      detail::guarded(report, "calclem.identity_composite", [&] {
        std::vector<E> es;
        std::size_t total = 0;
        for (auto i : is) {
          es.push_back(G.identity(i));
          total += i;
        }
        report.check("calclem.identity_composite", G.equal(G.compose_list(G.identity(n), es), G.identity(total)),
                     [&] { return "e_" + std::to_string(n) + " over " + detail::format_list<E>(G, es); });
      });
    }
  }
  {
    const auto& S1 = samples[1];
    std::vector<std::size_t> two(2, S1.size());
    for_each_choice(two, budget.max_cases, rng, [&](const std::vector<std::size_t>& ix) {
      const E &a = S1[ix[0]], &b = S1[ix[1]];
      report.check("calclem.g1_abelian", G.equal(G.multiply(a, b), G.multiply(b, a)),
                   [&] { return "a=" + fmt(a) + " b=" + fmt(b); });
    });
  }

  check_monoidal_sum(G, sampler, budget, report);
  return report;
}

// A per-arity map between action operads.
template <class S, class D>
struct ActionOperadMap {
  std::string name;
  ActionOperad<S> source;
  ActionOperad<D> target;
  std::function<D(const S&)> apply;
};

// The unique map out of the initial action operad T.
template <class D>
ActionOperadMap<TrivialElement, D> map_from_trivial(const ActionOperad<D>& target) {
  return {"T -> " + target.name, trivial_action_operad(), target,
          [target](const TrivialElement& t) { return target.identity(t.arity); }};
}

// The projection G -> Sigma.
template <class S>
ActionOperadMap<S, Permutation> projection_map(const ActionOperad<S>& source) {
  return {source.name + " -> symmetric", source, symmetric_action_operad(),
          [source](const S& g) { return source.project(g); }};
}

template <class E>
ActionOperadMap<E, E> identity_map(const ActionOperad<E>& g) {
  return {g.name + " -> " + g.name, g, g, [](const E& x) { return x; }};
}

// Checks that `f` is a homomorphism in each arity, an operad map, and lies
// over Sigma (pi' o f == pi).
template <class S, class D>
Report check_map(const ActionOperadMap<S, D>& f, const Sampler<S>& sampler, const CheckBudget& budget = {}) {
  Report report("map of action operads: " + f.name);
  std::mt19937_64 rng(budget.seed);
  const auto& src = f.source;
  const auto& dst = f.target;
  std::vector<std::vector<S>> samples(budget.max_total + 1);
  for (std::size_t n = 0; n <= budget.max_total; ++n) {
    samples[n] = sampler(n);
  }
  report.check("map.operad_unit", dst.equal(f.apply(src.operad_unit()), dst.operad_unit()),
               [&] { return dst.format(f.apply(src.operad_unit())); });
  for (std::size_t n = 0; n <= budget.max_arity; ++n) {
    const auto& Sn = samples[n];
    report.check("map.identity", dst.equal(f.apply(src.identity(n)), dst.identity(n)),
                 [&] { return "n=" + std::to_string(n); });
    std::vector<std::size_t> two(2, Sn.size());
    for_each_choice(two, budget.max_cases, rng, [&](const std::vector<std::size_t>& ix) {
      const S &a = Sn[ix[0]], &b = Sn[ix[1]];
      report.check("map.homomorphism",
                   dst.equal(f.apply(src.multiply(a, b)), dst.multiply(f.apply(a), f.apply(b))),
                   [&] { return "a=" + src.format(a) + " b=" + src.format(b); });
    });
    for (const auto& g : Sn) {
      report.check("map.over_sigma", dst.project(f.apply(g)) == src.project(g),
                   [&] { return "g=" + src.format(g); });
    }
    for (const auto& ks : bounded_signatures(n, budget.max_arity, budget.max_total)) {
      std::vector<std::size_t> sizes{Sn.size()};
      for (auto k : ks) {
        sizes.push_back(samples[k].size());
      }
      for_each_choice(sizes, budget.max_cases, rng, [&](const std::vector<std::size_t>& ix) {
        const S& g = Sn[ix[0]];
        std::vector<S> hs;
        std::vector<D> fhs;
        for (std::size_t i = 0; i < n; ++i) {
          hs.push_back(samples[ks[i]][ix[i + 1]]);
          fhs.push_back(f.apply(hs.back()));
        }
        report.check("map.operad_map",
                     dst.equal(f.apply(src.compose_list(g, hs)), dst.compose_list(f.apply(g), fhs)),
                     [&] { return "g=" + src.format(g) + " hs=" + detail::format_list<S>(src, hs); });
      });
    }
  }
  return report;
}

}  // namespace aoperad
