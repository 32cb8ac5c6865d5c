#pragma once

// Test-only helpers: cycle notation and independent oracles.

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "aoperad/braid.hpp"
#include "aoperad/perm.hpp"

namespace fixtures {

// Cycle notation on n points, e.g. cycles(4, "(12)(34)").  Inside a cycle,
// points are single digits unless separated by spaces.  The cycle (a b c)
// sends a to b, b to c and c to a.
inline aoperad::Permutation cycles(std::size_t n, std::string_view text) {
  std::vector<std::uint32_t> image(n);
  for (std::size_t i = 0; i < n; ++i) {
    image[i] = static_cast<std::uint32_t>(i);
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != '(') {
      ++pos;
      continue;
    }
    const auto close = text.find(')', pos);
    if (close == std::string_view::npos) {
      throw std::invalid_argument("unclosed cycle");
    }
    const auto body = text.substr(pos + 1, close - pos - 1);
    std::vector<std::uint32_t> points;
    const bool spaced = body.find(' ') != std::string_view::npos;
    std::uint32_t cur = 0;
    bool have = false;
    for (char c : body) {
      if (c == ' ') {
        if (have) {
          points.push_back(cur);
        }
        cur = 0;
        have = false;
      } else if (spaced) {
        cur = cur * 10 + static_cast<std::uint32_t>(c - '0');
        have = true;
      } else {
        points.push_back(static_cast<std::uint32_t>(c - '0'));
      }
    }
    if (have) {
      points.push_back(cur);
    }
    for (std::size_t k = 0; k < points.size(); ++k) {
      image[points[k] - 1] = points[(k + 1) % points.size()] - 1;
    }
    pos = close + 1;
  }
  return aoperad::Permutation::from_zero_based(std::move(image));
}

// Composition in either order: function composition (q first) or
// diagrammatic (p first).
inline aoperad::Permutation compose_in(bool function_order, const aoperad::Permutation& p,
                                       const aoperad::Permutation& q) {
  const auto& first = function_order ? q : p;
  const auto& second = function_order ? p : q;
  std::vector<std::uint32_t> out(p.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = second.zero_based()[first.zero_based()[i]];
  }
  return aoperad::Permutation::from_zero_based(std::move(out));
}

// Block move by physical relabelling: lay the blocks out as lists of point
// names, reorder the lists so block i lands at slot sigma(i), and read off
// where every point went.
inline aoperad::Permutation block_move(const aoperad::Permutation& sigma, const std::vector<std::size_t>& sizes) {
  std::vector<std::vector<std::uint32_t>> blocks;
  std::uint32_t next = 0;
  for (auto k : sizes) {
    blocks.emplace_back();
    for (std::size_t j = 0; j < k; ++j) {
      blocks.back().push_back(next++);
    }
  }
  std::vector<std::vector<std::uint32_t>> slots(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    slots[sigma(i + 1) - 1] = blocks[i];
  }
  std::vector<std::uint32_t> image(next);
  std::uint32_t at = 0;
  for (const auto& slot : slots) {
    for (auto point : slot) {
      image[point] = at++;
    }
  }
  return aoperad::Permutation::from_zero_based(std::move(image));
}

}  // namespace fixtures

namespace aoperad {

// Readable values in test failure messages.
inline void PrintTo(const Permutation& p, std::ostream* os) { *os << "[" << format_permutation(p) << "]"; }
inline void PrintTo(const BraidWord& w, std::ostream* os) { *os << "<" << w.strands() << ": " << format_word(w) << ">"; }

}  // namespace aoperad
