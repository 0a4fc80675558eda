#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "oneq/boolfn.hpp"
#include "oneq/errors.hpp"

namespace oneq {

namespace {

constexpr std::uint8_t kUndefined = 0;

std::uint8_t symbol(bool v) { return v ? 2 : 1; }

// Maps each integer x to the position obtained by moving variable i (0-based)
// to perm[i].
std::uint64_t permute_bits(std::uint64_t x, int n, std::span<const int> perm) {
  std::uint64_t y = 0;
  for (int i = 0; i < n; ++i) {
    if ((x >> (n - 1 - i)) & 1u) y |= std::uint64_t{1} << (n - 1 - perm[static_cast<std::size_t>(i)]);
  }
  return y;
}

}  // namespace

Isomorphism Isomorphism::identity(int n) {
  Isomorphism g;
  g.permutation.resize(static_cast<std::size_t>(n));
  std::iota(g.permutation.begin(), g.permutation.end(), 0);
  return g;
}

BitString Isomorphism::apply(const BitString& x) const {
  const int n = x.size();
  if (static_cast<int>(permutation.size()) != n) {
    throw DimensionError("isomorphism acts on " + std::to_string(permutation.size()) +
                         " variables, input has " + std::to_string(n));
  }
  return BitString(n, permute_bits(x.value() ^ negation_mask, n, permutation));
}

PartialBooleanFunction apply(const Isomorphism& g, const PartialBooleanFunction& f) {
  std::vector<PartialBooleanFunction::Entry> image;
  image.reserve(f.domain_size());
  for (const auto& [x, v] : f.entries()) image.emplace_back(g.apply(x), v != g.flip_output);
  return PartialBooleanFunction(f.arity(), std::move(image));
}

std::vector<std::uint8_t> table_of(const PartialBooleanFunction& f) {
  if (f.arity() > 24) throw BudgetExceeded("dense table limited to n <= 24");
  std::vector<std::uint8_t> table(std::size_t{1} << f.arity(), kUndefined);
  for (const auto& [x, v] : f.entries()) table[x.value()] = symbol(v);
  return table;
}

PartialBooleanFunction from_table(int n, std::span<const std::uint8_t> table) {
  if (table.size() != (std::size_t{1} << n)) throw DimensionError("table size is not 2^n");
  std::vector<PartialBooleanFunction::Entry> entries;
  for (std::size_t x = 0; x < table.size(); ++x) {
    if (table[x] != kUndefined) entries.emplace_back(BitString(n, x), table[x] == 2);
  }
  return PartialBooleanFunction(n, std::move(entries));
}

PartialBooleanFunction canonical_form(const PartialBooleanFunction& f,
                                      const CanonicalOptions& options) {
  const int n = f.arity();
  if (n > options.max_arity) {
    throw BudgetExceeded("canonical_form limited to n <= " + std::to_string(options.max_arity) +
                         ", got n = " + std::to_string(n));
  }
  const auto table = table_of(f);
  const std::size_t size = table.size();

  // The image table at y is table[preimage(y) ^ mask] (optionally flipped),
  // where preimage undoes the permutation. Compare candidates against the best
  // table found so far and stop at the first differing cell.
  std::vector<std::uint8_t> best(table);
  std::vector<std::uint8_t> candidate(size);
  std::vector<std::uint64_t> preimage(size);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::vector<int> inverse(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);

  do {
    for (int i = 0; i < n; ++i) inverse[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
    for (std::uint64_t y = 0; y < size; ++y) preimage[y] = permute_bits(y, n, inverse);

    for (std::uint64_t mask = 0; mask < size; ++mask) {
      for (int flip = 0; flip < (options.output_negation ? 2 : 1); ++flip) {
        bool better = false;
        std::size_t y = 0;
        for (; y < size; ++y) {
          std::uint8_t s = table[preimage[y] ^ mask];
          if (flip && s != kUndefined) s = static_cast<std::uint8_t>(3 - s);
          candidate[y] = s;
          if (!better) {
            if (s > best[y]) break;
            if (s < best[y]) better = true;
          }
        }
        if (better) best.swap(candidate);
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  return from_table(n, best);
}

}  // namespace oneq
