#pragma once

// Permutations of {1,...,n} and the symmetric operad.
//
// Convention: the product of two permutations is function composition,
//
//     compose(p, q)(i) = p(q(i)),
//
// so q is applied first.  Drawn as a strand diagram read top to bottom, q is
// the upper layer.  This is the only order under which mu_sigma, built as
// block_lift(sigma) * block_sum(taus), satisfies operad associativity and the
// action operad compatibility law; the test suite checks both orders.
//
// Points are 1-based at every interface (operator(), parsing, formatting) and
// 0-based in storage.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "aoperad/error.hpp"

namespace aoperad {

class Permutation {
 public:
  // The empty permutation, the only element of Sigma_0.
  Permutation() = default;

  // From a 1-based one-line image.  Throws ParseError naming the first
  // duplicated or out-of-range value.
  explicit Permutation(std::span<const std::uint32_t> one_based) {
    image_.reserve(one_based.size());
    for (auto v : one_based) {
      if (v == 0) {
        throw ParseError("value 0 is not a point; points are numbered from 1");
      }
      image_.push_back(v - 1);
    }
    validate();
  }

  Permutation(std::initializer_list<std::uint32_t> one_based)
      : Permutation(std::span<const std::uint32_t>(one_based.begin(), one_based.size())) {}

  static Permutation from_zero_based(std::vector<std::uint32_t> image) {
    Permutation p;
    p.image_ = std::move(image);
    p.validate();
    return p;
  }

  static Permutation identity(std::size_t n) {
    Permutation p;
    p.image_.resize(n);
    std::iota(p.image_.begin(), p.image_.end(), 0U);
    return p;
  }

  // The adjacent transposition exchanging points i and i+1 (1-based).
  static Permutation adjacent(std::size_t n, std::size_t i) {
    if (i == 0 || i + 1 > n) {
      throw ArityError("adjacent transposition s" + std::to_string(i) + " does not exist in Sigma_" +
                       std::to_string(n));
    }
    auto p = identity(n);
    std::swap(p.image_[i - 1], p.image_[i]);
    return p;
  }

  std::size_t size() const noexcept { return image_.size(); }

  // Image of the 1-based point i.
  std::uint32_t operator()(std::size_t i) const { return image_.at(i - 1) + 1; }

  std::span<const std::uint32_t> zero_based() const noexcept { return image_; }

  std::vector<std::uint32_t> one_based() const {
    std::vector<std::uint32_t> out(image_.begin(), image_.end());
    for (auto& v : out) {
      ++v;
    }
    return out;
  }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < image_.size(); ++i) {
      if (image_[i] != i) {
        return false;
      }
    }
    return true;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  void validate() const {
    std::vector<bool> seen(image_.size(), false);
    for (auto v : image_) {
      if (v >= image_.size()) {
        throw ParseError("value " + std::to_string(v + 1) +
                         " is out of range for a permutation of " + std::to_string(image_.size()) +
                         " points");
      }
      if (seen[v]) {
        throw ParseError("value " + std::to_string(v + 1) + " appears more than once");
      }
      seen[v] = true;
    }
  }

  std::vector<std::uint32_t> image_;
};

inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw ArityError("cannot compose permutations of " + std::to_string(p.size()) + " and " +
                     std::to_string(q.size()) + " points");
  }
  std::vector<std::uint32_t> out(p.size());
  auto pi = p.zero_based();
  auto qi = q.zero_based();
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = pi[qi[i]];
  }
  return Permutation::from_zero_based(std::move(out));
}

inline Permutation inverse(const Permutation& p) {
  std::vector<std::uint32_t> out(p.size());
  auto pi = p.zero_based();
  for (std::uint32_t i = 0; i < out.size(); ++i) {
    out[pi[i]] = i;
  }
  return Permutation::from_zero_based(std::move(out));
}

// tau_1 (+) ... (+) tau_n: tau_i acts on the i-th consecutive block.
inline Permutation block_sum(std::span<const Permutation> taus) {
  std::vector<std::uint32_t> out;
  std::uint32_t offset = 0;
  for (const auto& t : taus) {
    for (auto v : t.zero_based()) {
      out.push_back(offset + v);
    }
    offset += static_cast<std::uint32_t>(t.size());
  }
  return Permutation::from_zero_based(std::move(out));
}

// sigma^+: the i-th block (of sizes[i] consecutive points) is moved, intact,
// to block position sigma(i).  Size-0 blocks contribute nothing.
inline Permutation block_lift(const Permutation& sigma, std::span<const std::size_t> sizes) {
  const std::size_t n = sigma.size();
  if (sizes.size() != n) {
    throw ArityError("block_lift: " + std::to_string(sizes.size()) + " block sizes given for a permutation of " +
                     std::to_string(n) + " points");
  }
  auto s = sigma.zero_based();
  std::vector<std::uint32_t> block_at(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    block_at[s[i]] = i;
  }
  // Offset of each block after the move.
  std::vector<std::uint32_t> target_offset(n);
  std::uint32_t acc = 0;
  for (std::size_t pos = 0; pos < n; ++pos) {
    target_offset[block_at[pos]] = acc;
    acc += static_cast<std::uint32_t>(sizes[block_at[pos]]);
  }
  std::vector<std::uint32_t> out;
  out.reserve(acc);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < sizes[i]; ++j) {
      out.push_back(target_offset[i] + j);
    }
  }
  return Permutation::from_zero_based(std::move(out));
}

// Operadic composition in Sigma: sigma^+ * (tau_1 (+) ... (+) tau_n).
inline Permutation mu_sigma(const Permutation& sigma, std::span<const Permutation> taus) {
  if (taus.size() != sigma.size()) {
    throw ArityError("mu_sigma: " + std::to_string(taus.size()) + " inputs for an operation of arity " +
                     std::to_string(sigma.size()));
  }
  std::vector<std::size_t> sizes;
  sizes.reserve(taus.size());
  for (const auto& t : taus) {
    sizes.push_back(t.size());
  }
  return compose(block_lift(sigma, sizes), block_sum(taus));
}

// tau_{m,n}: position of the i-th pair of the row-major order of an m x n grid
// within the column-major order.  tau(n, m) == inverse(tau(m, n)).
inline Permutation tau(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) {
    throw ArityError("tau(m, n) needs m, n >= 1");
  }
  std::vector<std::uint32_t> out(m * n);
  for (std::size_t i = 0; i < m * n; ++i) {
    out[i] = static_cast<std::uint32_t>((i % n) * m + i / n);
  }
  return Permutation::from_zero_based(std::move(out));
}

inline std::size_t inversions(const Permutation& p) {
  auto v = p.zero_based();
  std::size_t count = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] > v[j]) {
        ++count;
      }
    }
  }
  return count;
}

// Left action on tuples: result[i] = xs[p^{-1}(i)], i.e. the entry at
// position i moves to position p(i).
template <class T>
std::vector<T> act_on_list(const Permutation& p, std::span<const T> xs) {
  if (xs.size() != p.size()) {
    throw ArityError("act_on_list: list of length " + std::to_string(xs.size()) + " for a permutation of " +
                     std::to_string(p.size()) + " points");
  }
  auto v = p.zero_based();
  std::vector<T> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out[v[i]] = xs[i];
  }
  return out;
}

template <class T>
std::vector<T> act_on_list(const Permutation& p, const std::vector<T>& xs) {
  return act_on_list(p, std::span<const T>(xs));
}

// Text format: space-separated one-line image, e.g. "1 3 5 2 4 6".
inline std::string format_permutation(const Permutation& p) {
  std::string out;
  for (auto v : p.zero_based()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += std::to_string(v + 1);
  }
  return out;
}

inline Permutation parse_permutation(std::string_view text) {
  std::vector<std::uint32_t> values;
  std::istringstream in{std::string(text)};
  std::string token;
  std::size_t position = 0;
  while (in >> token) {
    ++position;
    std::size_t used = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || token.front() == '-' || token.front() == '+') {
      throw ParseError("token " + std::to_string(position) + " ('" + token + "') is not a positive integer");
    }
    if (value == 0) {
      throw ParseError("token " + std::to_string(position) + " is 0; points are numbered from 1");
    }
    values.push_back(static_cast<std::uint32_t>(value));
  }
  return Permutation(values);
}

// All of Sigma_n in lexicographic order of one-line images.
inline std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<std::uint32_t> v(n);
  std::iota(v.begin(), v.end(), 0U);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_zero_based(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// Every vector of `length` entries in [0, max_entry] with sum <= max_sum.
inline std::vector<std::vector<std::size_t>> bounded_signatures(std::size_t length, std::size_t max_entry,
                                                                std::size_t max_sum) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t remaining) {
    if (cur.size() == length) {
      out.push_back(cur);
      return;
    }
    for (std::size_t v = 0; v <= std::min(max_entry, remaining); ++v) {
      cur.push_back(v);
      rec(remaining - v);
      cur.pop_back();
    }
  };
  rec(max_sum);
  return out;
}

// All tuples in [0, base)^length in lexicographic order, as one flat visit.
inline void for_each_tuple(std::size_t base, std::size_t length,
                           const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> t(length, 0);
  if (length > 0 && base == 0) {
    return;
  }
  for (;;) {
    visit(t);
    std::size_t k = length;
    while (k > 0) {
      if (++t[k - 1] < base) {
        break;
      }
      t[k - 1] = 0;
      --k;
    }
    if (k == 0) {
      return;
    }
  }
}

// Rank of a tuple in the lexicographic order of [0, base)^length.
inline std::size_t tuple_rank(std::span<const std::size_t> xs, std::size_t base) {
  std::size_t r = 0;
  for (auto x : xs) {
    r = r * base + x;
  }
  return r;
}

inline std::vector<std::size_t> tuple_unrank(std::size_t rank, std::size_t base, std::size_t length) {
  std::vector<std::size_t> xs(length);
  for (std::size_t k = length; k > 0; --k) {
    xs[k - 1] = rank % base;
    rank /= base;
  }
  return xs;
}

inline std::size_t checked_power(std::size_t base, std::size_t exponent, std::size_t limit) {
  std::size_t out = 1;
  for (std::size_t k = 0; k < exponent; ++k) {
    if (base != 0 && out > limit / base) {
      throw SizeOverflow(std::to_string(base) + "^" + std::to_string(exponent) + " exceeds the size limit " +
                         std::to_string(limit));
    }
    out *= base;
  }
  return out;
}

}  // namespace aoperad
