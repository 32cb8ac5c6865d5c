#pragma once

// Group-level hypotheses for pseudo-commutative structures on the monad of a
// contractible G-operad.  A family t(m, n) in G(mn) must satisfy
//   pi(t(m, n)) = tau(m, n),   t(1, n) = e_n = t(n, 1),
// and two interchange equations:
//   first:   mu(e_l; t(m_1,n)..t(m_l,n)) . mu(t(l,n); [e_m_1..e_m_l] x n) = t(n,M)
//   second:  mu(t(m,l); e_n_1 x l, .., e_n_m x l) . mu(e_m; t(n_1,l)..t(n_m,l)) = t(N,l)
// with M = sum m_i and N = sum n_i.  Which index of each t is which depends on
// the composition conventions, so an Orientation records, per equation,
// whether the inner family, the composed t and the right side have their
// indices exchanged; resolve_orientation fixes it against t = tau in Sigma.
// The 2-cell data of the structure are not represented: in a contractible
// operad they reduce to these equations.

#include <array>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "aoperad/action_operad.hpp"
#include "aoperad/braid.hpp"
#include "aoperad/error.hpp"
#include "aoperad/perm.hpp"
#include "aoperad/report.hpp"

namespace aoperad {

// Exchange flags for (inner family, composed t, right side).
using SwapPattern = std::array<bool, 3>;

struct Orientation {
  SwapPattern first{};
  SwapPattern second{};
  friend bool operator==(const Orientation&, const Orientation&) = default;
};

template <class E>
struct TFamily {
  std::string name;
  std::function<E(std::size_t m, std::size_t n)> t;
  Orientation orientation;
  // Minimality certificate for braid families (sign-definite, and as many
  // letters as inversions); empty when not applicable.
  std::function<bool(const E&)> minimal;
};

namespace detail {

inline std::string t_text(bool swap, const std::string& a, const std::string& b) {
  return swap ? "t(" + b + "," + a + ")" : "t(" + a + "," + b + ")";
}

}  // namespace detail

// The equations an orientation stands for, one per line.
inline std::string describe(const Orientation& o) {
  using detail::t_text;
  return "first:  mu(e_l; " + t_text(o.first[0], "m_i", "n") + ") . mu(" + t_text(o.first[1], "l", "n") +
         "; e_m_1..e_m_l repeated n times) = " + t_text(o.first[2], "n", "M") + "\n" +
         "second: mu(" + t_text(o.second[1], "m", "l") + "; e_n_1 x l, .., e_n_m x l) . mu(e_m; " +
         t_text(o.second[0], "n_i", "l") + ") = " + t_text(o.second[2], "N", "l");
}

// Both sides of the first equation for (l, ms, n) under a swap pattern.
template <class E>
std::pair<E, E> first_sides(const ActionOperad<E>& G, const std::function<E(std::size_t, std::size_t)>& t,
                            const SwapPattern& s, std::size_t l, const std::vector<std::size_t>& ms, std::size_t n) {
  auto tt = [&](bool swap, std::size_t a, std::size_t b) { return swap ? t(b, a) : t(a, b); };
  if (ms.size() != l) {
    throw ArityError("interchange: " + std::to_string(ms.size()) + " values m_i for l = " + std::to_string(l));
  }
  const std::size_t M = std::accumulate(ms.begin(), ms.end(), std::size_t{0});
  std::vector<E> inner;
  for (auto m : ms) {
    inner.push_back(tt(s[0], m, n));
  }
  std::vector<E> units;
  for (std::size_t r = 0; r < n; ++r) {
    for (auto m : ms) {
      units.push_back(G.identity(m));
    }
  }
  const E lhs = G.multiply(G.compose_list(G.identity(l), inner), G.compose_list(tt(s[1], l, n), units));
  return {lhs, tt(s[2], n, M)};
}

// Both sides of the second equation for (l, m, ns).
template <class E>
std::pair<E, E> second_sides(const ActionOperad<E>& G, const std::function<E(std::size_t, std::size_t)>& t,
                             const SwapPattern& s, std::size_t l, std::size_t m, const std::vector<std::size_t>& ns) {
  auto tt = [&](bool swap, std::size_t a, std::size_t b) { return swap ? t(b, a) : t(a, b); };
  if (ns.size() != m) {
    throw ArityError("interchange: " + std::to_string(ns.size()) + " values n_i for m = " + std::to_string(m));
  }
  const std::size_t N = std::accumulate(ns.begin(), ns.end(), std::size_t{0});
  std::vector<E> units;
  for (auto k : ns) {
    for (std::size_t r = 0; r < l; ++r) {
      units.push_back(G.identity(k));
    }
  }
  std::vector<E> inner;
  for (auto k : ns) {
    inner.push_back(tt(s[0], k, l));
  }
  const E lhs = G.multiply(G.compose_list(tt(s[1], m, l), units), G.compose_list(G.identity(m), inner));
  return {lhs, tt(s[2], N, l)};
}

// Visits (l, ms, n) with every index in [1, bound].
inline void for_each_interchange_index(
    std::size_t bound, const std::function<void(std::size_t, const std::vector<std::size_t>&, std::size_t)>& visit) {
  for (std::size_t l = 1; l <= bound; ++l) {
    for_each_tuple(bound, l, [&](const std::vector<std::size_t>& raw) {
      std::vector<std::size_t> ms(raw);
      for (auto& m : ms) {
        ++m;
      }
      for (std::size_t n = 1; n <= bound; ++n) {
        visit(l, ms, n);
      }
    });
  }
}

template <class E>
bool verify_interchange(const ActionOperad<E>& G, const TFamily<E>& t, std::size_t l,
                        const std::vector<std::size_t>& ms, std::size_t n) {
  const auto [lhs, rhs] = first_sides(G, t.t, t.orientation.first, l, ms, n);
  return G.equal(lhs, rhs);
}

template <class E>
bool verify_interchange_dual(const ActionOperad<E>& G, const TFamily<E>& t, std::size_t l, std::size_t m,
                             const std::vector<std::size_t>& ns) {
  const auto [lhs, rhs] = second_sides(G, t.t, t.orientation.second, l, m, ns);
  return G.equal(lhs, rhs);
}

// Swap patterns under which each equation holds with t = tau for every index
// in [1, bound], in the order (inner, composed, right) as binary 000..111.
struct OrientationSearch {
  std::size_t bound = 0;
  std::vector<SwapPattern> first;
  std::vector<SwapPattern> second;
};

inline OrientationSearch search_orientations(std::size_t bound) {
  const auto G = symmetric_action_operad();
  const std::function<Permutation(std::size_t, std::size_t)> t = [](std::size_t m, std::size_t n) {
    return tau(m, n);
  };
  OrientationSearch out{bound, {}, {}};
  for (unsigned code = 0; code < 8; ++code) {
    const SwapPattern s{(code & 4) != 0, (code & 2) != 0, (code & 1) != 0};
    bool first = true;
    bool second = true;
    for_each_interchange_index(bound, [&](std::size_t l, const std::vector<std::size_t>& ms, std::size_t n) {
      if (first) {
        const auto [a, b] = first_sides(G, t, s, l, ms, n);
        first = a == b;
      }
      if (second) {
        // The second equation reads (l, m, ns) = (n, l, ms).
        const auto [a, b] = second_sides(G, t, s, n, l, ms);
        second = a == b;
      }
    });
    if (first) {
      out.first.push_back(s);
    }
    if (second) {
      out.second.push_back(s);
    }
  }
  return out;
}

// The unique orientation under which tau satisfies both equations for every
// index <= bound, confirmed at bound + 1.  Throws Error when no pattern or
// more than one survives, or when the survivor does not persist.
inline Orientation resolve_orientation(std::size_t bound = 3) {
  const auto found = search_orientations(bound);
  if (found.first.size() != 1 || found.second.size() != 1) {
    throw Error("orientation search at bound " + std::to_string(bound) + " left " +
                std::to_string(found.first.size()) + " and " + std::to_string(found.second.size()) +
                " candidates for the two equations; expected exactly one each");
  }
  const Orientation o{found.first.front(), found.second.front()};
  const auto wider = search_orientations(bound + 1);
  auto has = [](const std::vector<SwapPattern>& v, const SwapPattern& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
  };
  if (!has(wider.first, o.first) || !has(wider.second, o.second)) {
    throw Error("the orientation found at bound " + std::to_string(bound) + " fails at bound " +
                std::to_string(bound + 1));
  }
  return o;
}

// resolve_orientation(3), computed once.
inline const Orientation& resolved_orientation() {
  static const Orientation o = resolve_orientation(3);
  return o;
}

// ---------------------------------------------------------------------------
// Families.

inline TFamily<Permutation> tau_family() {
  return {"tau", [](std::size_t m, std::size_t n) { return tau(m, n); }, resolved_orientation(), {}};
}

inline TFamily<BraidWord> positive_family() {
  return {"t_positive", [](std::size_t m, std::size_t n) { return t_positive(m, n); }, resolved_orientation(),
          [](const BraidWord& w) { return is_minimal_positive(w); }};
}

inline TFamily<BraidWord> negative_family() {
  return {"t_negative", [](std::size_t m, std::size_t n) { return t_negative(m, n); }, resolved_orientation(),
          [](const BraidWord& w) { return is_minimal_negative(w); }};
}

// ---------------------------------------------------------------------------
// Checks.

template <class E>
bool verify_unit_family(const ActionOperad<E>& G, const TFamily<E>& t, std::size_t bound) {
  for (std::size_t n = 1; n <= bound; ++n) {
    const E e = G.identity(n);
    if (!G.equal(t.t(1, n), e) || !G.equal(t.t(n, 1), e)) {
      return false;
    }
  }
  return true;
}

struct SymmetryResult {
  bool holds = true;
  std::size_t m = 0;  // first failing pair when !holds
  std::size_t n = 0;
  std::string product;  // t(m,n) t(n,m), formatted
};

// Checks t(m,n) t(n,m) = e for 1 <= m, n <= bound, m outer.
template <class E>
SymmetryResult verify_symmetry(const ActionOperad<E>& G, const TFamily<E>& t, std::size_t bound) {
  for (std::size_t m = 1; m <= bound; ++m) {
    for (std::size_t n = 1; n <= bound; ++n) {
      const E product = G.multiply(t.t(m, n), t.t(n, m));
      if (!G.equal(product, G.identity(m * n))) {
        return {false, m, n, G.format(product)};
      }
    }
  }
  return {};
}

// pi condition and unit family up to max(bound, 5) and max(bound, 6), both
// interchange equations for indices <= bound, and minimality of every t and
// every left side when the family certifies it.
template <class E>
Report check_family(const ActionOperad<E>& G, const TFamily<E>& t, std::size_t bound) {
  Report report(t.name + " in " + G.name + ", indices <= " + std::to_string(bound));
  auto show_list = [](const std::vector<std::size_t>& xs) {
    std::string out = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      out += (i ? "," : "") + std::to_string(xs[i]);
    }
    return out + ")";
  };
  const std::size_t pi_bound = std::max<std::size_t>(bound, 5);
  for (std::size_t m = 1; m <= pi_bound; ++m) {
    for (std::size_t n = 1; n <= pi_bound; ++n) {
      const E g = t.t(m, n);
      report.check("pi_condition", G.project(g) == tau(m, n), [&] {
        return "m=" + std::to_string(m) + " n=" + std::to_string(n) + ": pi(t) = [" +
               format_permutation(G.project(g)) + "]";
      });
      if (t.minimal && m <= bound && n <= bound) {
        report.check("minimal.t", t.minimal(g),
                     [&] { return "t(" + std::to_string(m) + "," + std::to_string(n) + ") = " + G.format(g); });
      }
    }
  }
  const std::size_t unit_bound = std::max<std::size_t>(bound, 6);
  for (std::size_t n = 1; n <= unit_bound; ++n) {
    const E e = G.identity(n);
    report.check("unit_family", G.equal(t.t(1, n), e) && G.equal(t.t(n, 1), e),
                 [&] { return "n=" + std::to_string(n); });
  }
  for_each_interchange_index(bound, [&](std::size_t l, const std::vector<std::size_t>& ms, std::size_t n) {
    {
      const auto [lhs, rhs] = first_sides(G, t.t, t.orientation.first, l, ms, n);
      report.check("interchange.first", G.equal(lhs, rhs), [&] {
        return "l=" + std::to_string(l) + " m=" + show_list(ms) + " n=" + std::to_string(n) + ": " + G.format(lhs) +
               " != " + G.format(rhs);
      });
      if (t.minimal) {
        report.check("minimal.first_lhs", t.minimal(lhs), [&] {
          return "l=" + std::to_string(l) + " m=" + show_list(ms) + " n=" + std::to_string(n) + ": " + G.format(lhs);
        });
      }
    }
    {
      // (l, m, ns) = (n, l, ms).
      const auto [lhs, rhs] = second_sides(G, t.t, t.orientation.second, n, l, ms);
      report.check("interchange.second", G.equal(lhs, rhs), [&] {
        return "l=" + std::to_string(n) + " m=" + std::to_string(l) + " n=" + show_list(ms) + ": " + G.format(lhs) +
               " != " + G.format(rhs);
      });
      if (t.minimal) {
        report.check("minimal.second_lhs", t.minimal(lhs), [&] {
          return "l=" + std::to_string(n) + " m=" + std::to_string(l) + " n=" + show_list(ms) + ": " + G.format(lhs);
        });
      }
    }
  });
  return report;
}

namespace detail {

inline std::string flags_text(const SwapPattern& s) {
  std::string out;
  for (bool b : s) {
    out += b ? "swap " : "keep ";
  }
  out.pop_back();
  return out;
}

inline void orientation_notes(Report& report, const Orientation& o) {
  report.note("orientation (inner, composed, right): first " + flags_text(o.first) + "; second " +
              flags_text(o.second));
  std::string text = describe(o);
  std::size_t at = 0;
  while (at <= text.size()) {
    const auto end = std::min(text.find('\n', at), text.size());
    report.note("  " + text.substr(at, end - at));
    at = end + 1;
  }
  report.note("lambda and the coherence 2-cells are not checked: in a contractible operad they reduce to the");
  report.note("group equations above");
}

}  // namespace detail

// Both braid families satisfy every hypothesis for indices <= bound, with the
// symmetry condition failing at m = n = 2 for each.
inline Report braid_theorem_report(std::size_t bound = 3) {
  const auto G = braid_action_operad();
  Report report("pseudo-commutativity: braid, bound " + std::to_string(bound));
  detail::orientation_notes(report, resolved_orientation());
  const BraidWord t22 = t_positive(2, 2);
  report.note("t_positive(2,2) = " + format_word(t22));
  report.check("t_positive(2,2) = s2", t22 == BraidWord(4, {2}), [&] { return format_word(t22); });
  const bool order_two = equal(t22 * t22, BraidWord::identity(4));
  report.check("t(2,2)^2 != e", !order_two, [] { return "t(2,2)^2 reduced to the identity"; });
  bool symmetric = false;
  for (const auto& family : {positive_family(), negative_family()}) {
    const auto r = check_family(G, family, bound);
    for (const auto& law : r.laws()) {
      report.add({family.name + " " + law.law, law.cases, law.passed, law.witness});
    }
    const auto s = verify_symmetry(G, family, std::max<std::size_t>(bound, 2));
    symmetric = symmetric || s.holds;
    report.check(family.name + " non-symmetry witness (2,2)", !s.holds && s.m == 2 && s.n == 2,
                 [&] { return s.holds ? "symmetry holds" : "first failure at (" + std::to_string(s.m) + "," +
                                                                  std::to_string(s.n) + ")"; });
    if (!s.holds) {
      report.note(family.name + ": t(" + std::to_string(s.m) + "," + std::to_string(s.n) + ") t(" +
                  std::to_string(s.n) + "," + std::to_string(s.m) + ") = " + s.product + " is not e");
    }
  }
  report.note(symmetric ? "SYMMETRY: HOLDS (unexpected)" : "SYMMETRY: FAILS (expected)");
  return report;
}

// t = tau satisfies every hypothesis for indices <= bound and is symmetric
// for m, n <= max(bound, 4).
inline Report symmetric_theorem_report(std::size_t bound = 3) {
  const auto G = symmetric_action_operad();
  Report report("pseudo-commutativity: symmetric, bound " + std::to_string(bound));
  detail::orientation_notes(report, resolved_orientation());
  const auto family = tau_family();
  const auto r = check_family(G, family, bound);
  for (const auto& law : r.laws()) {
    report.add({family.name + " " + law.law, law.cases, law.passed, law.witness});
  }
  const std::size_t sym_bound = std::max<std::size_t>(bound, 4);
  const auto s = verify_symmetry(G, family, sym_bound);
  report.check("tau symmetry", s.holds, [&] {
    return "t(" + std::to_string(s.m) + "," + std::to_string(s.n) + ") t(" + std::to_string(s.n) + "," +
           std::to_string(s.m) + ") = " + s.product;
  });
  report.note(s.holds ? "SYMMETRY: HOLDS" : "SYMMETRY: FAILS");
  return report;
}

}  // namespace aoperad
