#pragma once

// Dense rational simplex tableau with Bland's rule. Internal to the
// feasibility solver.

#include <cstddef>
#include <functional>
#include <vector>

#include "oneq/rational.hpp"

namespace oneq::detail {

using Row = std::vector<Rational>;

struct Tableau {
  std::vector<Row> a;               // rows x columns, B^-1 A
  Row b;                            // B^-1 rhs, kept >= 0
  std::vector<std::size_t> basis;   // basic column of each row

  void pivot(std::size_t row, std::size_t column) {
    const Rational scale = a[row][column];
    for (auto& v : a[row]) v /= scale;
    b[row] /= scale;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row) continue;
      const Rational factor = a[r][column];
      if (factor == 0) continue;
      for (std::size_t j = 0; j < a[r].size(); ++j) a[r][j] -= factor * a[row][j];
      b[r] -= factor * b[row];
    }
    basis[row] = column;
  }

  Rational objective(const Row& cost) const {
    Rational z = 0;
    for (std::size_t r = 0; r < basis.size(); ++r) z += cost[basis[r]] * b[r];
    return z;
  }

  /// Minimizes cost . x over columns marked `allowed`. Entering column is the
  /// lowest-index improving one; ties in the ratio test go to the lowest basic
  /// column index. Returns false if unbounded.
  bool minimize(const Row& cost, const std::vector<bool>& allowed,
                const std::function<void(std::size_t, std::size_t)>& on_pivot) {
    const std::size_t columns = cost.size();
    std::vector<bool> is_basic(columns, false);
    for (;;) {
      std::fill(is_basic.begin(), is_basic.end(), false);
      for (auto j : basis) is_basic[j] = true;

      std::size_t enter = columns;
      for (std::size_t j = 0; j < columns && enter == columns; ++j) {
        if (!allowed[j] || is_basic[j]) continue;
        Rational reduced = cost[j];
        for (std::size_t r = 0; r < a.size(); ++r) reduced -= cost[basis[r]] * a[r][j];
        if (reduced < 0) enter = j;
      }
      if (enter == columns) return true;

      std::size_t leave = a.size();
      Rational best_ratio;
      for (std::size_t r = 0; r < a.size(); ++r) {
        if (a[r][enter] <= 0) continue;
        Rational ratio = b[r] / a[r][enter];
        if (leave == a.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis[r] < basis[leave])) {
          leave = r;
          best_ratio = std::move(ratio);
        }
      }
      if (leave == a.size()) return false;
      if (on_pivot) on_pivot(enter, leave);
      pivot(leave, enter);
    }
  }
};

}  // namespace oneq::detail
