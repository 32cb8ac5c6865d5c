#pragma once

// Braid groups Br_n as words in the Artin generators.
//
// A letter +i is sigma_i and -i is sigma_i^{-1}, 1 <= i < n.  Words multiply
// by concatenation and follow the same convention as Permutation: in the
// product u * v the factor v acts first, so
//
//     underlying_permutation(u * v) == compose(underlying_permutation(u),
//                                              underlying_permutation(v)).
//
// Equality is decided by Dehornoy handle reduction, with a shortcut for pairs
// of positive (or negative) words that are minimal.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "aoperad/error.hpp"
#include "aoperad/perm.hpp"

namespace aoperad {

class BraidWord {
 public:
  BraidWord() = default;

  explicit BraidWord(std::size_t strands, std::vector<int> letters = {})
      : strands_(strands), letters_(std::move(letters)) {
    for (std::size_t k = 0; k < letters_.size(); ++k) {
      const int g = letters_[k];
      if (g == 0) {
        throw ParseError("letter " + std::to_string(k + 1) + " is 0; generators are numbered from 1");
      }
      if (static_cast<std::size_t>(std::abs(g)) >= strands_) {
        throw ParseError("letter " + std::to_string(k + 1) + " (" + std::to_string(g) +
                         ") needs generator index < " + std::to_string(strands_));
      }
    }
  }

  static BraidWord identity(std::size_t strands) { return BraidWord(strands); }

  std::size_t strands() const noexcept { return strands_; }
  std::span<const int> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  // Verbatim equality of words, not of braids; use equal() for the group.
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
  friend auto operator<=>(const BraidWord&, const BraidWord&) = default;

 private:
  std::size_t strands_ = 0;
  std::vector<int> letters_;
};

inline BraidWord parse_word(std::string_view text, std::size_t strands) {
  std::vector<int> letters;
  std::istringstream in{std::string(text)};
  std::string token;
  std::size_t position = 0;
  while (in >> token) {
    ++position;
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) {
      throw ParseError("token " + std::to_string(position) + " ('" + token + "') is not an integer");
    }
    if (value == 0) {
      throw ParseError("token " + std::to_string(position) + " is 0; generators are numbered from 1");
    }
    if (static_cast<std::size_t>(std::labs(value)) >= strands) {
      throw ParseError("token " + std::to_string(position) + " (" + token + ") needs generator index < " +
                       std::to_string(strands));
    }
    letters.push_back(static_cast<int>(value));
  }
  return BraidWord(strands, std::move(letters));
}

inline std::string format_word(const BraidWord& w) {
  std::string out;
  for (int g : w.letters()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += std::to_string(g);
  }
  return out;
}

inline BraidWord operator*(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) {
    throw ArityError("cannot multiply braids on " + std::to_string(u.strands()) + " and " +
                     std::to_string(v.strands()) + " strands");
  }
  std::vector<int> out(u.letters().begin(), u.letters().end());
  out.insert(out.end(), v.letters().begin(), v.letters().end());
  return BraidWord(u.strands(), std::move(out));
}

inline BraidWord inverse(const BraidWord& w) {
  std::vector<int> out(w.letters().rbegin(), w.letters().rend());
  for (int& g : out) {
    g = -g;
  }
  return BraidWord(w.strands(), std::move(out));
}

// The image under the automorphism sigma_i -> sigma_i^{-1}.
inline BraidWord mirror(const BraidWord& w) {
  std::vector<int> out(w.letters().begin(), w.letters().end());
  for (int& g : out) {
    g = -g;
  }
  return BraidWord(w.strands(), std::move(out));
}

inline Permutation underlying_permutation(const BraidWord& w) {
  std::vector<std::uint32_t> image(w.strands());
  std::iota(image.begin(), image.end(), 0U);
  // image = s_{g1} o s_{g2} o ... ; right-multiplying by s_i swaps entries i, i+1.
  for (int g : w.letters()) {
    const auto i = static_cast<std::size_t>(std::abs(g));
    std::swap(image[i - 1], image[i]);
  }
  return Permutation::from_zero_based(std::move(image));
}

inline bool is_positive(const BraidWord& w) {
  return std::all_of(w.letters().begin(), w.letters().end(), [](int g) { return g > 0; });
}

inline bool is_negative(const BraidWord& w) {
  return std::all_of(w.letters().begin(), w.letters().end(), [](int g) { return g < 0; });
}

// For a positive word the number of crossings of each pair of strands is an
// invariant of the braid, so "no pair crosses twice" is the same as having
// exactly as many letters as the permutation has inversions.
inline bool is_minimal_positive(const BraidWord& w) {
  return is_positive(w) && w.length() == inversions(underlying_permutation(w));
}

inline bool is_minimal_negative(const BraidWord& w) { return is_minimal_positive(mirror(w)); }

// Removes adjacent g, -g pairs until none remain.
inline BraidWord free_reduce(const BraidWord& w) {
  std::vector<int> out;
  out.reserve(w.length());
  for (int g : w.letters()) {
    if (!out.empty() && out.back() == -g) {
      out.pop_back();
    } else {
      out.push_back(g);
    }
  }
  return BraidWord(w.strands(), std::move(out));
}

namespace detail {

// Position (k, j) of the sigma_i-handle that ends first, or {-1, -1}.
// A sigma_i-handle is sigma_i^e v sigma_i^{-e} where every letter of v has
// index > i.  The first one to close contains no nested handle, hence is
// permitted.
inline std::pair<long, long> first_handle(std::span<const int> word, std::size_t strands) {
  std::vector<long> last(strands + 1, -1);
  for (std::size_t j = 0; j < word.size(); ++j) {
    const auto i = static_cast<std::size_t>(std::abs(word[j]));
    const long k = last[i];
    if (k >= 0 && (word[static_cast<std::size_t>(k)] > 0) != (word[j] > 0)) {
      bool clear = true;
      for (std::size_t below = 1; below < i && clear; ++below) {
        clear = last[below] < k;
      }
      if (clear) {
        return {k, static_cast<long>(j)};
      }
    }
    last[i] = static_cast<long>(j);
  }
  return {-1, -1};
}

}  // namespace detail

// Dehornoy handle reduction.  The result contains no handle; it is empty iff
// the input represents the identity braid.
inline BraidWord handle_reduce(const BraidWord& w) {
  std::vector<int> word(w.letters().begin(), w.letters().end());
  std::vector<int> next;
  for (;;) {
    const auto [k, j] = detail::first_handle(word, w.strands());
    if (k < 0) {
      break;
    }
    const auto start = static_cast<std::size_t>(k);
    const auto stop = static_cast<std::size_t>(j);
    const int i = std::abs(word[start]);
    const int e = word[start] > 0 ? 1 : -1;
    next.clear();
    next.insert(next.end(), word.begin(), word.begin() + static_cast<long>(start));
    // sigma_i^e v sigma_i^{-e}  ->  v with sigma_{i+1}^d replaced by
    // sigma_{i+1}^{-e} sigma_i^d sigma_{i+1}^e.
    for (std::size_t p = start + 1; p < stop; ++p) {
      const int g = word[p];
      if (std::abs(g) == i + 1) {
        const int d = g > 0 ? 1 : -1;
        for (int letter : {-e * (i + 1), d * i, e * (i + 1)}) {
          if (!next.empty() && next.back() == -letter) {
            next.pop_back();
          } else {
            next.push_back(letter);
          }
        }
      } else {
        next.push_back(g);
      }
    }
    next.insert(next.end(), word.begin() + static_cast<long>(stop) + 1, word.end());
    word.swap(next);
  }
  return BraidWord(w.strands(), std::move(word));
}

inline bool is_trivial(const BraidWord& w) { return handle_reduce(w).empty(); }

// Equality in Br_n.  Different permutations decide inequality at once; two
// positive minimal words (or two negative minimal words) with the same
// permutation are the same permutation braid.  Everything else goes through
// handle reduction of u * v^{-1}.
inline bool equal(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) {
    throw ArityError("cannot compare braids on " + std::to_string(u.strands()) + " and " +
                     std::to_string(v.strands()) + " strands");
  }
  if (underlying_permutation(u) != underlying_permutation(v)) {
    return false;
  }
  if ((is_minimal_positive(u) && is_minimal_positive(v)) || (is_minimal_negative(u) && is_minimal_negative(v))) {
    return true;
  }
  return is_trivial(u * inverse(v));
}

// Disjoint union, the i-th braid to the left of the (i+1)-th.
inline BraidWord block_sum_braids(std::span<const BraidWord> braids) {
  std::size_t offset = 0;
  std::vector<int> out;
  for (const auto& b : braids) {
    for (int g : b.letters()) {
      out.push_back(g > 0 ? g + static_cast<int>(offset) : g - static_cast<int>(offset));
    }
    offset += b.strands();
  }
  return BraidWord(offset, std::move(out));
}

// The positive minimal braid of p, read off a straight insertion sort of its
// one-line image.  Its length is inversions(p).
inline BraidWord permutation_braid(const Permutation& p) {
  std::vector<std::uint32_t> image(p.zero_based().begin(), p.zero_based().end());
  std::vector<int> swaps;
  for (std::size_t j = 1; j < image.size(); ++j) {
    for (std::size_t k = j; k > 0 && image[k - 1] > image[k]; --k) {
      std::swap(image[k - 1], image[k]);
      swaps.push_back(static_cast<int>(k));
    }
  }
  // p o s_{r1} o ... o s_{rk} = e, so p = s_{rk} o ... o s_{r1}.
  std::reverse(swaps.begin(), swaps.end());
  return BraidWord(p.size(), std::move(swaps));
}

namespace detail {

// Positive cable of one crossing: a block of `a` strands crossing over a block
// of `b` strands, every pair crossing once.  Strands are offset by `offset`.
inline void append_block_crossing(std::vector<int>& out, std::size_t a, std::size_t b, std::size_t offset,
                                  bool positive) {
  if (a == 0 || b == 0) {
    return;
  }
  // The negative crossing with blocks (a, b) is the inverse of the positive
  // crossing with blocks (b, a).
  const std::size_t first = positive ? a : b;
  const std::size_t second = positive ? b : a;
  std::vector<std::uint32_t> image(first + second);
  for (std::size_t j = 0; j < first; ++j) {
    image[j] = static_cast<std::uint32_t>(second + j);
  }
  for (std::size_t j = 0; j < second; ++j) {
    image[first + j] = static_cast<std::uint32_t>(j);
  }
  auto word = permutation_braid(Permutation::from_zero_based(std::move(image)));
  if (!positive) {
    word = inverse(word);
  }
  for (int g : word.letters()) {
    out.push_back(g > 0 ? g + static_cast<int>(offset) : g - static_cast<int>(offset));
  }
}

}  // namespace detail

// g^+: the i-th strand of g replaced by sizes[i] parallel strands.  The cable
// sizes are attached where g starts acting (its last letter); each crossing
// between cables of sizes a and b becomes a*b crossings of the same sign.
inline BraidWord cable(const BraidWord& g, std::span<const std::size_t> sizes) {
  if (sizes.size() != g.strands()) {
    throw ArityError("cable: " + std::to_string(sizes.size()) + " cable sizes for a braid on " +
                     std::to_string(g.strands()) + " strands");
  }
  std::vector<std::size_t> current(sizes.begin(), sizes.end());
  std::vector<std::vector<int>> pieces;
  pieces.reserve(g.length());
  for (auto it = g.letters().rbegin(); it != g.letters().rend(); ++it) {
    const auto i = static_cast<std::size_t>(std::abs(*it));
    const std::size_t offset = std::accumulate(current.begin(), current.begin() + static_cast<long>(i - 1),
                                               std::size_t{0});
    std::vector<int> piece;
    detail::append_block_crossing(piece, current[i - 1], current[i], offset, *it > 0);
    pieces.push_back(std::move(piece));
    std::swap(current[i - 1], current[i]);
  }
  std::vector<int> out;
  for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) {
    out.insert(out.end(), it->begin(), it->end());
  }
  return BraidWord(std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}), std::move(out));
}

// Operadic composition in Br: g^+ * (f_1 (+) ... (+) f_n).
inline BraidWord mu_br(const BraidWord& g, std::span<const BraidWord> fs) {
  if (fs.size() != g.strands()) {
    throw ArityError("mu_br: " + std::to_string(fs.size()) + " inputs for a braid on " +
                     std::to_string(g.strands()) + " strands");
  }
  std::vector<std::size_t> sizes;
  sizes.reserve(fs.size());
  for (const auto& f : fs) {
    sizes.push_back(f.strands());
  }
  return cable(g, sizes) * block_sum_braids(fs);
}

// The positive braid t_{m,n} lifting tau(m, n).
inline BraidWord t_positive(std::size_t m, std::size_t n) { return permutation_braid(tau(m, n)); }

// The negative minimal braid lifting tau(m, n): the inverse of t_positive(n, m).
inline BraidWord t_negative(std::size_t m, std::size_t n) { return inverse(t_positive(n, m)); }

// One row per letter in the order the letters act, so the last letter is the
// top row.  Strands sit in even columns; the crossing pair is drawn "\ /" and
// the row is tagged with the generator.
inline std::string render_ascii(const BraidWord& w) {
  const std::size_t n = w.strands();
  const std::size_t width = n == 0 ? 0 : 2 * n - 1;
  auto plain = [&] {
    std::string row(width, ' ');
    for (std::size_t s = 0; s < n; ++s) {
      row[2 * s] = '|';
    }
    return row;
  };
  std::string out = plain() + "\n";
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    const int g = *it;
    const auto i = static_cast<std::size_t>(std::abs(g));
    std::string row = plain();
    row[2 * (i - 1)] = '\\';
    row[2 * i] = '/';
    row += "   ";
    row += g > 0 ? "s" + std::to_string(i) : "s" + std::to_string(i) + "^-1";
    out += row + "\n";
  }
  out += plain() + "\n";
  return out;
}

// Graph description for external tools: one node per crossing, one edge per
// strand segment between consecutive crossings, read in acting order.
inline std::string render_dot(const BraidWord& w) {
  const std::size_t n = w.strands();
  std::ostringstream out;
  out << "digraph braid {\n";
  for (std::size_t s = 0; s < n; ++s) {
    out << "  top" << s + 1 << " [shape=point];\n";
  }
  std::vector<std::string> at(n);
  for (std::size_t s = 0; s < n; ++s) {
    at[s] = "top" + std::to_string(s + 1);
  }
  for (std::size_t k = 0; k < w.length(); ++k) {
    const int g = w.letters()[w.length() - 1 - k];
    const auto i = static_cast<std::size_t>(std::abs(g));
    const std::string node = "c" + std::to_string(k + 1);
    out << "  " << node << " [label=\"s" << i << (g > 0 ? "" : "^-1") << "\"];\n";
    out << "  " << at[i - 1] << " -> " << node << ";\n";
    out << "  " << at[i] << " -> " << node << ";\n";
    at[i - 1] = node;
    at[i] = node;
  }
  for (std::size_t s = 0; s < n; ++s) {
    out << "  bottom" << s + 1 << " [shape=point];\n";
    out << "  " << at[s] << " -> bottom" << s + 1 << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace aoperad
