#pragma once

// The free-algebra monad of a finite G-operad, truncated at an arity bound:
//   P(X) = coproduct over n <= bound of P(n) x_{G(n)} X^n.
// A class [p; x_1..x_n] identifies (p . g; xs) with (p; act(pi(g), xs)); it is
// stored as the least pair (op, args) of its orbit.  Carriers are index sets
// [0, size), so P(P(X)) is a free algebra whose carrier is the class list of
// P(X).

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aoperad/action_operad.hpp"
#include "aoperad/error.hpp"
#include "aoperad/g_operad.hpp"
#include "aoperad/perm.hpp"
#include "aoperad/report.hpp"

namespace aoperad {

struct FreeClass {
  Op op;
  std::vector<std::size_t> args;
  friend bool operator==(const FreeClass&, const FreeClass&) = default;
  friend auto operator<=>(const FreeClass&, const FreeClass&) = default;
};

// Canonical classes in ascending order, with their positions.
struct FreeAlgebra {
  std::size_t carrier_size = 0;
  std::vector<FreeClass> classes;
  std::map<FreeClass, std::size_t> index;

  std::size_t size() const { return classes.size(); }
  const FreeClass& operator[](std::size_t i) const { return classes.at(i); }
  bool contains(const FreeClass& c) const { return index.contains(c); }

  std::size_t at(const FreeClass& c) const {
    const auto it = index.find(c);
    if (it == index.end()) {
      throw Error("class is not in the enumerated free algebra");
    }
    return it->second;
  }

  std::size_t count(std::size_t arity) const {
    return static_cast<std::size_t>(
        std::count_if(classes.begin(), classes.end(), [&](const FreeClass& c) { return c.op.arity == arity; }));
  }
};

// Decides whether an argument prefix may be extended.  Must be monotone in
// the prefix and invariant under permuting it.
using Admissible = std::function<bool(std::span<const std::size_t> prefix)>;

template <class E>
class FreeMonad {
 public:
  FreeMonad(FiniteGOperad<E> P, std::size_t bound) : P_(std::move(P)), bound_(std::min(bound, P_.max_arity())) {
    if (!P_.group().finite()) {
      throw UnsupportedGroup("the free algebra monad needs a finite group; " + P_.group().name + " is infinite");
    }
    for (std::size_t n = 0; n <= bound_; ++n) {
      elements_.push_back(P_.group().elements(n));
      inverse_pi_.emplace_back();
      for (const auto& g : elements_.back()) {
        inverse_pi_.back().push_back(inverse(P_.group().project(g)));
      }
    }
  }

  const FiniteGOperad<E>& operad() const { return P_; }
  std::size_t bound() const { return bound_; }

  // Least element of the orbit {(p . g, act(pi(g)^-1, xs))}.
  FreeClass normalize(Op p, const std::vector<std::size_t>& xs) const {
    if (xs.size() != p.arity) {
      throw ArityError("class of an operation of arity " + std::to_string(p.arity) + " with " +
                       std::to_string(xs.size()) + " arguments");
    }
    if (p.arity > bound_) {
      throw ArityOverflow("arity " + std::to_string(p.arity) + " exceeds the bound " + std::to_string(bound_));
    }
    FreeClass best{p, xs};
    const auto& gs = elements_[p.arity];
    for (std::size_t k = 0; k < gs.size(); ++k) {
      FreeClass c{P_.collection.apply(p, gs[k]), act_on_list(inverse_pi_[p.arity][k], xs)};
      if (c < best) {
        best = std::move(c);
      }
    }
    return best;
  }

  FreeAlgebra classes(std::size_t carrier_size, const Admissible& admissible = {}) const {
    FreeAlgebra out;
    out.carrier_size = carrier_size;
    std::vector<std::size_t> xs;
    for (std::size_t n = 0; n <= bound_; ++n) {
      for (std::size_t p = 0; p < P_.collection.size(n); ++p) {
        xs.clear();
        collect({n, p}, carrier_size, admissible, xs, out);
      }
    }
    std::sort(out.classes.begin(), out.classes.end());
    for (std::size_t i = 0; i < out.classes.size(); ++i) {
      out.index.emplace(out.classes[i], i);
    }
    return out;
  }

  FreeClass eta(std::size_t x) const { return normalize(P_.unit_op(), {x}); }

  // mu([q; c_1..c_n]) = [mu(q; p_1..p_n); xs_1 ... xs_n], where outer.args
  // index the classes c_i = [p_i; xs_i] of `inner`.
  FreeClass mu(const FreeClass& outer, const FreeAlgebra& inner) const {
    std::vector<Op> ps;
    std::vector<std::size_t> xs;
    std::size_t total = 0;
    for (auto a : outer.args) {
      const auto& c = inner[a];
      ps.push_back(c.op);
      xs.insert(xs.end(), c.args.begin(), c.args.end());
      total += c.op.arity;
    }
    if (total > bound_) {
      throw ArityOverflow("multiplication reaches arity " + std::to_string(total) + " beyond the bound " +
                          std::to_string(bound_));
    }
    return normalize(P_.compose(outer.op, ps), xs);
  }

  // P(f) for f: [0, size) -> [0, size').
  FreeClass fmap(std::span<const std::size_t> f, const FreeClass& c) const {
    std::vector<std::size_t> ys;
    for (auto x : c.args) {
      ys.push_back(f[x]);
    }
    return normalize(c.op, ys);
  }

 private:
  void collect(Op p, std::size_t carrier_size, const Admissible& admissible, std::vector<std::size_t>& xs,
               FreeAlgebra& out) const {
    if (xs.size() == p.arity) {
      if (normalize(p, xs) == FreeClass{p, xs}) {
        out.classes.push_back({p, xs});
      }
      return;
    }
    for (std::size_t x = 0; x < carrier_size; ++x) {
      xs.push_back(x);
      if (!admissible || admissible(xs)) {
        collect(p, carrier_size, admissible, xs, out);
      }
      xs.pop_back();
    }
  }

  FiniteGOperad<E> P_;
  std::size_t bound_;
  std::vector<std::vector<E>> elements_;
  std::vector<std::vector<Permutation>> inverse_pi_;
};

// "[p; x1,...,xn]", or "[p;]" in arity 0.
template <class E>
std::string format_class(const FiniteGOperad<E>& P, const FreeClass& c, std::span<const std::string> carrier) {
  std::string out = "[" + P.collection.label(c.op) + ";";
  for (std::size_t i = 0; i < c.args.size(); ++i) {
    out += (i ? "," : " ") + carrier[c.args[i]];
  }
  return out + "]";
}

template <class E>
FreeAlgebra free_algebra(const FiniteGOperad<E>& P, std::size_t carrier_size, std::size_t bound) {
  return FreeMonad<E>(P, bound).classes(carrier_size);
}

// ---------------------------------------------------------------------------
// Monad laws.

namespace detail {

// Admissible prefixes of P(P(X)) whose flattening stays within the bound.
inline Admissible flat_within(const FreeAlgebra& inner, std::size_t bound) {
  return [&inner, bound](std::span<const std::size_t> prefix) {
    std::size_t total = 0;
    for (auto a : prefix) {
      total += inner[a].op.arity;
    }
    return total <= bound;
  };
}

inline std::string show_args(std::span<const std::size_t> xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out += (i ? "," : "") + std::to_string(xs[i]);
  }
  return out;
}

}  // namespace detail

// Unit and associativity laws of the truncated monad on a carrier of the given
// size, exhaustively over every element whose multiplications stay within the
// bound; the arity-one count |P(1)/G(1)| * |X|; and the correspondence between
// operad algebras and monad algebras on the carrier at bound min(bound, 2).
template <class E>
Report check_monad_laws(const FiniteGOperad<E>& P, std::size_t carrier_size, std::size_t bound) {
  const FreeMonad<E> T(P, bound);
  bound = T.bound();
  Report report("monad laws: " + P.name() + ", |X| = " + std::to_string(carrier_size) + ", bound " +
                std::to_string(bound));
  const auto PX = T.classes(carrier_size);
  auto show = [&](const FreeClass& c) {
    std::string args = detail::show_args(c.args);
    return "[" + P.collection.label(c.op) + "; " + args + "]";
  };

  // P(P(X)) restricted to elements with mu defined.
  const auto PPX = T.classes(PX.size(), detail::flat_within(PX, bound));

  std::vector<std::size_t> eta(carrier_size);
  for (std::size_t x = 0; bound >= 1 && x < carrier_size; ++x) {
    eta[x] = PX.at(T.eta(x));
  }
  for (std::size_t i = 0; bound >= 1 && i < PX.size(); ++i) {
    const auto& c = PX[i];
    const FreeClass left = T.mu(T.eta(i), PX);
    report.check("monad.left_unit", left == c, [&] { return show(c) + " -> " + show(left); });
    const FreeClass right = T.mu(T.fmap(eta, c), PX);
    report.check("monad.right_unit", right == c, [&] { return show(c) + " -> " + show(right); });
  }

  // P(P(P(X))): both the outer and the flattened arities within the bound.
  std::vector<std::size_t> flat(PPX.size());
  std::vector<std::size_t> mu_PX(PPX.size());
  for (std::size_t i = 0; i < PPX.size(); ++i) {
    flat[i] = T.mu(PPX[i], PX).op.arity;
    mu_PX[i] = PX.at(T.mu(PPX[i], PX));
  }
  const auto PPPX = T.classes(PPX.size(), [&](std::span<const std::size_t> prefix) {
    std::size_t outer = 0;
    std::size_t total = 0;
    for (auto a : prefix) {
      outer += PPX[a].op.arity;
      total += flat[a];
    }
    return outer <= bound && total <= bound;
  });
  // mu_{P(X)} lands in P(P(X)) over the carrier PX; PPX holds every such class
  // because its flattening is within the bound.
  for (const auto& c : PPPX.classes) {
    const FreeClass via_fmap = T.mu(T.fmap(mu_PX, c), PX);
    std::vector<Op> ps;
    std::vector<std::size_t> inner;
    for (auto a : c.args) {
      ps.push_back(PPX[a].op);
      inner.insert(inner.end(), PPX[a].args.begin(), PPX[a].args.end());
    }
    const FreeClass outer = T.normalize(P.compose(c.op, ps), inner);
    const FreeClass via_mu = T.mu(outer, PX);
    report.check("monad.associativity", via_fmap == via_mu, [&] {
      std::string nest = "[" + P.collection.label(c.op) + "; ";
      for (std::size_t i = 0; i < c.args.size(); ++i) {
        const auto& d = PPX[c.args[i]];
        nest += (i ? ", " : "") + std::string("[") + P.collection.label(d.op) + "; ";
        for (std::size_t j = 0; j < d.args.size(); ++j) {
          nest += (j ? ", " : "") + show(PX[d.args[j]]);
        }
        nest += "]";
      }
      return nest + "]: " + show(via_fmap) + " != " + show(via_mu);
    });
  }

  // P(1) x_{G(1)} X has |P(1)/G(1)| * |X| classes.
  if (bound >= 1) {
    const auto orbits = T.classes(1).count(1);
    const auto arity_one = PX.count(1);
    report.check("monad.arity_one_product", arity_one == orbits * carrier_size, [&] {
      return std::to_string(arity_one) + " classes, expected " + std::to_string(orbits) + " * " +
             std::to_string(carrier_size);
    });
  }

  // Algebras correspond to monad algebras h: P(X) -> X.
  const std::size_t small = std::min<std::size_t>(bound, 2);
  const FreeMonad<E> S(P, small);
  const auto QX = S.classes(carrier_size);
  const auto QQX = S.classes(QX.size(), detail::flat_within(QX, small));
  auto monad_algebra = [&](const std::vector<std::size_t>& h) {
    for (std::size_t x = 0; x < carrier_size; ++x) {
      if (h[QX.at(S.eta(x))] != x) {
        return false;
      }
    }
    for (const auto& c : QQX.classes) {
      const FreeClass pushed = S.fmap(h, c);
      if (h[QX.at(S.mu(c, QX))] != h[QX.at(pushed)]) {
        return false;
      }
    }
    return true;
  };
  std::vector<std::vector<std::size_t>> from_algebras;
  for_each_algebra_structure(P, carrier_size, small, [&](const std::vector<std::vector<std::vector<std::size_t>>>& t) {
    std::vector<std::size_t> h(QX.size());
    bool constant = true;
    for (std::size_t n = 0; n <= small; ++n) {
      for (std::size_t p = 0; p < P.collection.size(n); ++p) {
        for_each_tuple(carrier_size, n, [&](const std::vector<std::size_t>& xs) {
          const auto at = QX.at(S.normalize({n, p}, xs));
          const auto& rep = QX[at];
          h[at] = t[rep.op.arity][rep.op.index][tuple_rank(rep.args, carrier_size)];
          constant = constant && t[n][p][tuple_rank(xs, carrier_size)] == h[at];
        });
      }
    }
    report.check("monad.algebra_to_monad_algebra", constant && monad_algebra(h),
                 [&] { return "algebra with h = (" + detail::show_args(h) + ")"; });
    from_algebras.push_back(std::move(h));
  });
  std::sort(from_algebras.begin(), from_algebras.end());
  std::size_t monad_algebras = 0;
  for_each_tuple(carrier_size, QX.size(), [&](const std::vector<std::size_t>& h) {
    if (!monad_algebra(h)) {
      return;
    }
    ++monad_algebras;
    const bool induced = std::binary_search(from_algebras.begin(), from_algebras.end(), h);
    report.check("monad.monad_algebra_to_algebra", induced,
                 [&] { return "monad algebra h = (" + detail::show_args(h) + ") comes from no algebra"; });
  });
  report.check("monad.algebra_count", monad_algebras == from_algebras.size(), [&] {
    return std::to_string(from_algebras.size()) + " algebras, " + std::to_string(monad_algebras) +
           " monad algebras";
  });
  report.note("algebras on " + std::to_string(carrier_size) + " elements at bound " + std::to_string(small) + ": " +
              std::to_string(from_algebras.size()));
  return report;
}

// ---------------------------------------------------------------------------
// The 2-cartesian criterion.

struct CartesianWitness {
  std::size_t arity = 0;
  std::string label;  // p with p . g = p
  std::string element;  // g, with pi(g) != e
};

struct CartesianResult {
  bool holds = true;
  std::optional<CartesianWitness> witness;
  Op op;               // set when !holds
  Permutation moved;   // pi(g) when !holds
};

// True iff every stabilizer lies in ker pi for arities <= bound; otherwise the
// first (n, p, g) in enumeration order.
template <class E>
CartesianResult cartesian_condition(const FiniteGOperad<E>& P, std::size_t bound) {
  const auto& G = P.group();
  if (!G.finite()) {
    throw UnsupportedGroup("the cartesian criterion needs a finite group; " + G.name + " is infinite");
  }
  bound = std::min(bound, P.max_arity());
  for (std::size_t n = 0; n <= bound; ++n) {
    const auto gs = G.elements(n);
    for (std::size_t p = 0; p < P.collection.size(n); ++p) {
      for (const auto& g : gs) {
        const Permutation pg = G.project(g);
        if (P.collection.act(n, p, g) == p && !pg.is_identity()) {
          return {false, CartesianWitness{n, P.collection.levels[n][p], G.format(g)}, Op{n, p}, pg};
        }
      }
    }
  }
  return {};
}

template <class E>
CartesianResult cartesian_condition(const FiniteGOperad<E>& P) {
  return cartesian_condition(P, P.max_arity());
}

inline const std::vector<std::string>& pullback_corner_labels() {
  static const std::vector<std::string> labels{"(x,y)", "(x,y')", "(x',y)", "(x',y')"};
  return labels;
}

// Applies the truncated monad to the square
//   {(x,y),(x,y'),(x',y),(x',y')} -> {x,x'}, {y,y'} -> {z}
// and checks that P of the 4-set maps bijectively onto the pullback of the
// other three corners.  When a stabilizer escapes ker pi, also exhibits the
// two distinct classes with equal projections built from the witness.
template <class E>
Report pullback_witness_test(const FiniteGOperad<E>& P, std::size_t bound = 3) {
  const FreeMonad<E> T(P, bound);
  bound = T.bound();
  Report report("pullback square: " + P.name() + ", bound " + std::to_string(bound));
  const auto& names = pullback_corner_labels();
  const std::vector<std::string> xs{"x", "x'"}, ys{"y", "y'"}, zs{"z"};
  const std::vector<std::size_t> to_x{0, 0, 1, 1}, to_y{0, 1, 0, 1}, to_z{0, 0};

  const auto P4 = T.classes(4);
  const auto PX = T.classes(2);
  const auto PY = T.classes(2);
  const auto P1 = T.classes(1);

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> image;
  for (std::size_t i = 0; i < P4.size(); ++i) {
    const auto a = PX.at(T.fmap(to_x, P4[i]));
    const auto b = PY.at(T.fmap(to_y, P4[i]));
    const auto [it, fresh] = image.emplace(std::pair{a, b}, i);
    report.check("pullback.injective", fresh, [&] {
      return format_class(P, P4[it->second], std::span<const std::string>(names)) + " and " +
             format_class(P, P4[i], std::span<const std::string>(names)) + " both map to " +
             format_class(P, PX[a], std::span<const std::string>(xs)) + ", " +
             format_class(P, PY[b], std::span<const std::string>(ys));
    });
  }
  for (std::size_t a = 0; a < PX.size(); ++a) {
    for (std::size_t b = 0; b < PY.size(); ++b) {
      if (T.fmap(to_z, PX[a]) != T.fmap(to_z, PY[b])) {
        continue;
      }
      report.check("pullback.surjective", image.contains({a, b}), [&] {
        return format_class(P, PX[a], std::span<const std::string>(xs)) + ", " +
               format_class(P, PY[b], std::span<const std::string>(ys)) + " has no preimage";
      });
    }
  }
  report.note("classes: " + std::to_string(P4.size()) + " over the 4-set, " + std::to_string(image.size()) +
              " distinct images");

  const auto cart = cartesian_condition(P, bound);
  if (!cart.holds) {
    // p . g = p and pi(g) moves i to j.
    const std::size_t n = cart.op.arity;
    const auto image = cart.moved.zero_based();
    std::size_t i = 0;
    while (image[i] == i) {
      ++i;
    }
    const std::size_t j = image[i];
    std::vector<std::size_t> first(n, 0), second(n, 0);
    first[i] = 2;   // (x',y)
    first[j] = 1;   // (x,y')
    second[j] = 3;  // (x',y')
    const FreeClass a = T.normalize(cart.op, first);
    const FreeClass b = T.normalize(cart.op, second);
    const bool collide = a != b && T.fmap(to_x, a) == T.fmap(to_x, b) && T.fmap(to_y, a) == T.fmap(to_y, b);
    report.check("pullback.stabilizer_pair", collide, [&] { return "the classes built from the stabilizer differ"; });
    report.note("stabilizer pair: " + format_class(P, FreeClass{cart.op, first}, std::span<const std::string>(names)) +
                " and " + format_class(P, FreeClass{cart.op, second}, std::span<const std::string>(names)) +
                " have equal projections");
  }
  return report;
}

inline bool pullback_holds(const Report& r) {
  return r.passed("pullback.injective") && r.passed("pullback.surjective");
}

}  // namespace aoperad
