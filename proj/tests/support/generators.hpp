#pragma once

// Random inputs and independent reference computations shared by the unit
// and acceptance suites.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "oneq/boolfn.hpp"
#include "oneq/feasibility.hpp"
#include "oneq/rational.hpp"
#include "oneq/witness.hpp"

namespace oneq::testing {

using Rng = std::mt19937_64;

inline PartialBooleanFunction random_partial(Rng& rng, int n, double density = 0.6) {
  std::bernoulli_distribution defined(density);
  std::bernoulli_distribution coin(0.5);
  std::vector<PartialBooleanFunction::Entry> entries;
  const std::uint64_t size = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < size; ++x) {
    if (defined(rng)) entries.emplace_back(BitString(n, x), coin(rng));
  }
  if (entries.empty()) {
    entries.emplace_back(BitString(n, std::uniform_int_distribution<std::uint64_t>(0, size - 1)(rng)),
                         coin(rng));
  }
  return PartialBooleanFunction(n, std::move(entries));
}

/// Weights k_i / K with small integers k_i, some forced to zero.
inline WeightCertificate random_weights(Rng& rng, int n) {
  std::uniform_int_distribution<int> small(0, 4);
  std::vector<int> k(static_cast<std::size_t>(n) + 1);
  int total = 0;
  while (total == 0) {
    for (auto& v : k) v = small(rng) == 0 ? 0 : small(rng);
    total = std::accumulate(k.begin(), k.end(), 0);
  }
  std::vector<Rational> w;
  for (int v : k) w.emplace_back(v, total);
  return WeightCertificate(std::move(w));
}

/// A function that is one-query by construction: a few random 1-inputs and
/// a random subset of the points orthogonal to all of them under `c`.
inline PartialBooleanFunction random_orthogonal(Rng& rng, int n, const WeightCertificate& c) {
  const std::uint64_t size = std::uint64_t{1} << n;
  std::uniform_int_distribution<std::uint64_t> point(0, size - 1);
  std::uniform_int_distribution<int> count(1, 3);
  std::bernoulli_distribution keep(0.7);
  std::vector<BitString> ones;
  for (int k = count(rng); k > 0; --k) ones.emplace_back(n, point(rng));
  std::vector<PartialBooleanFunction::Entry> entries;
  for (const auto& x : ones) entries.emplace_back(x, true);
  for (std::uint64_t y = 0; y < size; ++y) {
    const BitString by(n, y);
    if (std::find(ones.begin(), ones.end(), by) != ones.end()) continue;
    const bool orthogonal = std::all_of(ones.begin(), ones.end(), [&](const BitString& x) {
      return weighted_inner(c, x, by) == 0;
    });
    if (orthogonal && keep(rng)) entries.emplace_back(by, false);
  }
  return PartialBooleanFunction(n, std::move(entries));
}

inline Isomorphism random_isomorphism(Rng& rng, int n) {
  Isomorphism g = Isomorphism::identity(n);
  std::shuffle(g.permutation.begin(), g.permutation.end(), rng);
  g.negation_mask = std::uniform_int_distribution<std::uint64_t>(0, (std::uint64_t{1} << n) - 1)(rng);
  g.flip_output = std::bernoulli_distribution(0.5)(rng);
  return g;
}

/// Roughly half feasible, half arbitrary.
inline PartialBooleanFunction random_mixed(Rng& rng, int n) {
  if (std::bernoulli_distribution(0.5)(rng)) return random_partial(rng, n);
  return random_orthogonal(rng, n, random_weights(rng, n));
}

/// Canonical form by plain orbit enumeration, without pruning.
inline std::vector<std::uint8_t> brute_force_canonical_table(const PartialBooleanFunction& f,
                                                             bool output_negation = true) {
  std::vector<std::uint8_t> best = table_of(f);
  for_each_isomorph(
      f,
      [&](const Isomorphism&, const PartialBooleanFunction& image) {
        best = std::min(best, table_of(image));
        return true;
      },
      {.output_negation = output_negation});
  return best;
}

/// Degree of the unique multilinear polynomial of a total function, from its
/// Moebius transform.
inline int moebius_degree(int n, const std::vector<int>& truth) {
  std::vector<long> coeff(truth.begin(), truth.end());
  const std::size_t size = coeff.size();
  // Subset-sum inversion over bit positions in the integer index.
  for (int b = 0; b < n; ++b) {
    for (std::size_t t = 0; t < size; ++t) {
      if (t & (std::size_t{1} << b)) coeff[t] -= coeff[t ^ (std::size_t{1} << b)];
    }
  }
  int degree = 0;
  for (std::size_t t = 0; t < size; ++t) {
    if (coeff[t] != 0) degree = std::max(degree, static_cast<int>(std::popcount(t)));
  }
  return degree;
}

}  // namespace oneq::testing
