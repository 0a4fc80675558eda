#pragma once

// Partial Boolean functions over {0,1}^n and the pieces of notation the rest
// of the library is phrased in: bit strings with the implicit blank bit
// x_0 = 0, their +/-1 sign vectors, differing index sets, and canonical forms
// under the isomorphism group (variable permutation x input negation x
// output negation).

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oneq {

/// An n-bit input x_1..x_n. Stored as an integer whose most significant of
/// the n bits is x_1, so integer order equals bit-string order. Index 0 is
/// not stored and always reads as 0.
class BitString {
 public:
  static constexpr int kMaxBits = 63;

  BitString() = default;
  BitString(int n, std::uint64_t value);

  /// Parses a string of '0'/'1' characters, x_1 leftmost.
  static BitString parse(std::string_view text);

  int size() const noexcept { return n_; }
  std::uint64_t value() const noexcept { return value_; }

  /// Bit x_i for i in 0..n; bit(0) is always false.
  bool bit(int i) const;

  std::string to_string() const;

  friend auto operator<=>(const BitString&, const BitString&) = default;

 private:
  int n_ = 0;
  std::uint64_t value_ = 0;
};

std::ostream& operator<<(std::ostream& os, const BitString& x);

/// x'_i = (-1)^{x_i} for i = 0..n; signs[0] is always +1.
struct SignVector {
  std::vector<int> signs;

  int dimension() const noexcept { return static_cast<int>(signs.size()); }
  int operator[](int i) const { return signs[static_cast<std::size_t>(i)]; }

  friend bool operator==(const SignVector&, const SignVector&) = default;
};

SignVector sign_vector(const BitString& x);

/// Sorted set of variable indices drawn from 1..n.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(int n, std::span<const int> members);

  static IndexSet from_mask(int n, std::uint64_t mask);

  int arity() const noexcept { return n_; }
  bool empty() const noexcept { return mask_ == 0; }
  int size() const noexcept;
  bool contains(int i) const noexcept;
  std::vector<int> members() const;

  /// Bit (n - i) set iff i is a member; same layout as BitString.
  std::uint64_t mask() const noexcept { return mask_; }

  std::string to_string() const;  // "{2,4}"

  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

 private:
  int n_ = 0;
  std::uint64_t mask_ = 0;
};

IndexSet differing_set(const BitString& x, const BitString& y);
int hamming_weight(const BitString& x) noexcept;

/// A 0/1-valued function on a non-empty domain D of n-bit strings.
/// Entries are kept sorted by bit string.
class PartialBooleanFunction {
 public:
  using Entry = std::pair<BitString, bool>;

  /// Throws std::invalid_argument on an empty domain, mismatched lengths or a
  /// point listed with both values. Repeated identical entries collapse.
  PartialBooleanFunction(int n, std::vector<Entry> entries);

  int arity() const noexcept { return n_; }
  std::size_t domain_size() const noexcept { return entries_.size(); }
  std::span<const Entry> entries() const noexcept { return entries_; }

  std::optional<bool> value(const BitString& x) const;
  bool contains(const BitString& x) const { return value(x).has_value(); }

  /// Domain points mapped to `v`, in bit-string order.
  std::vector<BitString> inputs_with(bool v) const;

  bool is_constant() const noexcept;

  friend bool operator==(const PartialBooleanFunction&,
                         const PartialBooleanFunction&) = default;

 private:
  int n_;
  std::vector<Entry> entries_;
};

/// Reads the function file format: optional `n=<int>` header, `#` comments,
/// data lines `<bits> <0|1>`. Blank lines are ignored. Throws ParseError.
PartialBooleanFunction parse_function(std::string_view text);
PartialBooleanFunction parse_function(std::istream& in);

/// Header line then data lines in bit-string order.
std::string serialize(const PartialBooleanFunction& f);

PartialBooleanFunction complement(const PartialBooleanFunction& f);

/// Keeps only the domain points for which `keep` is true. The result must
/// still have a non-empty domain.
template <typename Pred>
PartialBooleanFunction restrict_to(const PartialBooleanFunction& f, Pred keep) {
  std::vector<PartialBooleanFunction::Entry> kept;
  for (const auto& e : f.entries()) {
    if (keep(e.first)) kept.push_back(e);
  }
  return PartialBooleanFunction(f.arity(), std::move(kept));
}

// ---------------------------------------------------------------------------
// Isomorphism group

/// Group element acting as  x  ->  pi(x xor mask),  value -> value xor flip.
/// `permutation[i]` is the 0-based destination position of variable i+1.
struct Isomorphism {
  std::vector<int> permutation;
  std::uint64_t negation_mask = 0;  // BitString layout
  bool flip_output = false;

  static Isomorphism identity(int n);

  BitString apply(const BitString& x) const;
};

PartialBooleanFunction apply(const Isomorphism& g, const PartialBooleanFunction& f);

struct CanonicalOptions {
  bool output_negation = true;
  int max_arity = 6;
};

/// Least orbit representative under the 3-valued table order
/// (undefined < 0 < 1) over {0,1}^n in bit-string order. Throws
/// BudgetExceeded when n > options.max_arity.
PartialBooleanFunction canonical_form(const PartialBooleanFunction& f,
                                      const CanonicalOptions& options = {});

/// Calls `visit(g, image)` for every group element (n! * 2^n * 2, or half
/// that without output negation). Stops early when `visit` returns false.
/// Throws BudgetExceeded when n > max_arity.
template <typename Visitor>
void for_each_isomorph(const PartialBooleanFunction& f, Visitor visit,
                       const CanonicalOptions& options = {});

/// Dense 3-valued table over {0,1}^n: 0 undefined, 1 value 0, 2 value 1.
std::vector<std::uint8_t> table_of(const PartialBooleanFunction& f);
PartialBooleanFunction from_table(int n, std::span<const std::uint8_t> table);

}  // namespace oneq

#include "oneq/detail/isomorph_impl.hpp"
