#pragma once

// Exact consistency test for A z = b with small integer entries. The fast
// path is fraction-free (Bareiss) elimination in int64 with overflow checks;
// on overflow it redoes the work over rationals.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "oneq/rational.hpp"

namespace oneq::detail {

/// Rows are [a_0 .. a_{k-1} | b].
using IntegerRows = std::vector<std::vector<std::int64_t>>;

inline std::optional<bool> consistent_bareiss(IntegerRows m) {
  if (m.empty()) return true;
  const std::size_t cols = m.front().size() - 1;
  std::size_t rank = 0;
  std::int64_t prev = 1;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    const std::int64_t pivot = m[rank][c];
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      const std::int64_t lead = m[i][c];
      for (std::size_t j = c + 1; j <= cols; ++j) {
        std::int64_t left = 0;
        std::int64_t right = 0;
        std::int64_t diff = 0;
        if (__builtin_mul_overflow(pivot, m[i][j], &left) ||
            __builtin_mul_overflow(lead, m[rank][j], &right) ||
            __builtin_sub_overflow(left, right, &diff)) {
          return std::nullopt;
        }
        m[i][j] = diff / prev;
      }
      m[i][c] = 0;
    }
    prev = pivot;
    ++rank;
  }
  for (std::size_t i = rank; i < m.size(); ++i) {
    if (m[i][cols] != 0) return false;
  }
  return true;
}

inline bool consistent_rational(const IntegerRows& input) {
  if (input.empty()) return true;
  std::vector<std::vector<Rational>> m;
  m.reserve(input.size());
  for (const auto& row : input) m.emplace_back(row.begin(), row.end());
  const std::size_t cols = m.front().size() - 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const Rational factor = m[i][c] / m[rank][c];
      for (std::size_t j = c; j <= cols; ++j) m[i][j] -= factor * m[rank][j];
    }
    ++rank;
  }
  for (std::size_t i = rank; i < m.size(); ++i) {
    if (m[i][cols] != 0) return false;
  }
  return true;
}

inline bool consistent(const IntegerRows& m) {
  if (auto fast = consistent_bareiss(m)) return *fast;
  return consistent_rational(m);
}

}  // namespace oneq::detail
