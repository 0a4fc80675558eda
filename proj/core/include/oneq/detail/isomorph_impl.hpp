#pragma once

#include <algorithm>
#include <numeric>
#include <string>

#include "oneq/errors.hpp"

namespace oneq {

template <typename Visitor>
void for_each_isomorph(const PartialBooleanFunction& f, Visitor visit,
                       const CanonicalOptions& options) {
  const int n = f.arity();
  if (n > options.max_arity) {
    throw BudgetExceeded("isomorphism enumeration limited to n <= " +
                         std::to_string(options.max_arity) + ", got n = " +
                         std::to_string(n));
  }
  Isomorphism g;
  g.permutation.resize(static_cast<std::size_t>(n));
  std::iota(g.permutation.begin(), g.permutation.end(), 0);
  const std::uint64_t masks = std::uint64_t{1} << n;
  do {
    for (std::uint64_t m = 0; m < masks; ++m) {
      g.negation_mask = m;
      for (int flip = 0; flip < (options.output_negation ? 2 : 1); ++flip) {
        g.flip_output = flip != 0;
        if (!visit(static_cast<const Isomorphism&>(g), apply(g, f))) return;
      }
    }
  } while (std::next_permutation(g.permutation.begin(), g.permutation.end()));
}

}  // namespace oneq
