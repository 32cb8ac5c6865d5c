#pragma once

// The composition product X o Y of G-collections, computed level by level as
// a quotient of
//
//   coprod_{k_1 + ... + k_r = n} X(r) x Y(k_1) x ... x Y(k_r) x G(n)
//
// by the relations
//
//   (x.h; y_1..y_r; g)             ~ (x; act(pi(h), y); mu(h; e_{k_1}..e_{k_r}) g)
//   (x; y_1..y_r; mu(e; g_1..g_r) g) ~ (x; y_1.g_1, ..., y_r.g_r; g)
//
// closed with union-find.  Each class is named by its least tuple.  G(n) acts
// on the last coordinate.  Only finite action operads are supported.
//
// Levels of the product above `bound` are not computed and count as empty, so
// an iterated product (X o Y) o Z is exact when Z(0) is empty.

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "aoperad/action_operad.hpp"
#include "aoperad/error.hpp"
#include "aoperad/g_operad.hpp"

namespace aoperad {

template <class E>
struct ProductTuple {
  std::size_t x = 0;    // index in X(r), r = ys.size()
  std::vector<Op> ys;   // ys[i] in Y(k_i)
  E g{};                // in G(n), n = sum of k_i
  friend bool operator==(const ProductTuple&, const ProductTuple&) = default;
  friend auto operator<=>(const ProductTuple& a, const ProductTuple& b) {
    if (auto c = a.ys.size() <=> b.ys.size(); c != 0) {
      return c;
    }
    if (auto c = a.x <=> b.x; c != 0) {
      return c;
    }
    if (auto c = a.ys <=> b.ys; c != 0) {
      return c;
    }
    return a.g <=> b.g;
  }
};

template <class E>
struct CollectionProduct {
  FiniteGCollection<E> collection;
  // representatives[n][c] is the least tuple of class c of level n.
  std::vector<std::vector<ProductTuple<E>>> representatives;
  // class_index[n] maps every tuple of level n to its class.
  std::vector<std::map<ProductTuple<E>, std::size_t>> class_index;

  std::size_t class_of(std::size_t n, const ProductTuple<E>& t) const { return class_index.at(n).at(t); }
};

inline constexpr std::size_t kMaxProductBound = 5;

namespace detail {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  // The smaller root survives, so a root is the least member of its class.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[std::max(a, b)] = std::min(a, b);
    }
  }
};

// All tuples of G(k_1) x ... x G(k_r).
template <class E>
std::vector<std::vector<E>> element_tuples(const ActionOperad<E>& G, std::span<const std::size_t> ks) {
  std::vector<std::vector<E>> out{{}};
  for (auto k : ks) {
    const auto level = G.elements(k);
    std::vector<std::vector<E>> next;
    for (const auto& prefix : out) {
      for (const auto& g : level) {
        auto v = prefix;
        v.push_back(g);
        next.push_back(std::move(v));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace detail

// Inputs are written "y", or "y/k" when the label y occurs in more than one
// level of Y.
template <class E>
std::string format_product_tuple(const FiniteGCollection<E>& X, const FiniteGCollection<E>& Y,
                                 const ProductTuple<E>& t) {
  auto levels_with = [&](const std::string& label) {
    std::size_t count = 0;
    for (const auto& level : Y.levels) {
      count += std::find(level.begin(), level.end(), label) != level.end() ? 1 : 0;
    }
    return count;
  };
  std::string out = "(" + X.levels[t.ys.size()][t.x] + ";";
  for (std::size_t i = 0; i < t.ys.size(); ++i) {
    const auto label = Y.label(t.ys[i]);
    out += (i ? "," : " ") + label + (levels_with(label) > 1 ? "/" + std::to_string(t.ys[i].arity) : "");
  }
  return out + "; " + X.group.format(t.g) + ")";
}

template <class E>
CollectionProduct<E> compose_collections(const FiniteGCollection<E>& X, const FiniteGCollection<E>& Y,
                                         std::size_t bound) {
  if (bound > kMaxProductBound) {
    throw ArityOverflow("composition product bound " + std::to_string(bound) + " exceeds " +
                        std::to_string(kMaxProductBound));
  }
  const auto& G = X.group;
  if (!G.finite()) {
    throw UnsupportedGroup("the composition product needs a finite action operad, not '" + G.name + "'");
  }
  CollectionProduct<E> out;
  out.collection.name = X.name + " o " + Y.name;
  out.collection.group = G;
  out.collection.levels.resize(bound + 1);
  out.representatives.resize(bound + 1);
  out.class_index.resize(bound + 1);

  for (std::size_t n = 0; n <= bound; ++n) {
    const auto gn = G.elements(n);
    // Enumerate tuples in increasing order.
    std::map<ProductTuple<E>, std::size_t> ids;
    for (std::size_t r = 0; r <= X.max_arity(); ++r) {
      if (X.size(r) == 0) {
        continue;
      }
      for (const auto& ks : bounded_signatures(r, n, n)) {
        if (std::accumulate(ks.begin(), ks.end(), std::size_t{0}) != n) {
          continue;
        }
        std::vector<std::size_t> sizes{X.size(r)};
        for (auto k : ks) {
          sizes.push_back(Y.size(k));
        }
        sizes.push_back(gn.size());
        std::mt19937_64 unused(0);
        for_each_choice(sizes, std::numeric_limits<std::size_t>::max() / 2, unused,
                        [&](const std::vector<std::size_t>& ix) {
                          ProductTuple<E> t;
                          t.x = ix[0];
                          for (std::size_t i = 0; i < r; ++i) {
                            t.ys.push_back({ks[i], ix[1 + i]});
                          }
                          t.g = gn[ix[1 + r]];
                          ids.emplace(std::move(t), 0);
                        });
      }
    }
    std::vector<const ProductTuple<E>*> nodes;
    nodes.reserve(ids.size());
    for (auto& [t, id] : ids) {
      id = nodes.size();
      nodes.push_back(&t);
    }
    detail::UnionFind uf(nodes.size());
    for (std::size_t a = 0; a < nodes.size(); ++a) {
      const auto& t = *nodes[a];
      const std::size_t r = t.ys.size();
      std::vector<std::size_t> ks;
      std::vector<E> es;
      for (const auto& y : t.ys) {
        ks.push_back(y.arity);
        es.push_back(G.identity(y.arity));
      }
      // First relation, read with (x; y; g) as the right-hand side's data.
      for (const auto& h : G.elements(r)) {
        ProductTuple<E> lhs{X.act(r, t.x, h), t.ys, t.g};
        ProductTuple<E> rhs{t.x, act_on_list(G.project(h), t.ys), G.multiply(G.compose_list(h, es), t.g)};
        uf.unite(ids.at(lhs), ids.at(rhs));
      }
      // Second relation.
      for (const auto& gs : detail::element_tuples(G, ks)) {
        ProductTuple<E> lhs{t.x, t.ys, G.multiply(G.compose_list(G.identity(r), gs), t.g)};
        ProductTuple<E> rhs{t.x, {}, t.g};
        for (std::size_t i = 0; i < r; ++i) {
          rhs.ys.push_back(Y.apply(t.ys[i], gs[i]));
        }
        uf.unite(ids.at(lhs), ids.at(rhs));
      }
    }
    std::map<std::size_t, std::size_t> class_of_root;
    for (std::size_t a = 0; a < nodes.size(); ++a) {
      const std::size_t root = uf.find(a);
      if (root == a) {
        class_of_root[a] = out.representatives[n].size();
        out.representatives[n].push_back(*nodes[a]);
        out.collection.levels[n].push_back(format_product_tuple(X, Y, *nodes[a]));
      }
    }
    for (auto& [t, id] : ids) {
      id = class_of_root.at(uf.find(id));
    }
    out.class_index[n] = std::move(ids);
  }

  auto reps = std::make_shared<std::vector<std::vector<ProductTuple<E>>>>(out.representatives);
  auto index = std::make_shared<std::vector<std::map<ProductTuple<E>, std::size_t>>>(out.class_index);
  out.collection.act = [reps, index, G](std::size_t n, std::size_t c, const E& h) {
    auto t = (*reps)[n][c];
    t.g = G.multiply(t.g, h);
    return (*index)[n].at(t);
  };
  return out;
}

// The unit collection: I(1) = G(1) acted on by right multiplication, every
// other level empty.
template <class E>
FiniteGCollection<E> unit_collection(const ActionOperad<E>& G, std::size_t max_arity) {
  FiniteGCollection<E> I;
  I.name = "I";
  I.group = G;
  I.levels.resize(std::max<std::size_t>(max_arity, 1) + 1);
  auto g1 = std::make_shared<std::vector<E>>(G.elements(1));
  for (const auto& g : *g1) {
    I.levels[1].push_back(G.format(g));
  }
  I.act = [g1, G](std::size_t, std::size_t x, const E& h) {
    const E product = G.multiply((*g1)[x], h);
    for (std::size_t k = 0; k < g1->size(); ++k) {
      if (G.equal((*g1)[k], product)) {
        return k;
      }
    }
    throw ArityError("G(1) is not closed under multiplication");
  };
  return I;
}

}  // namespace aoperad
