#pragma once

// Decides whether a partial Boolean function admits weights c_0..c_n >= 0,
// sum 1, such that every pair of inputs with different values differs on a
// set of indices carrying weight exactly 1/2. All arithmetic is exact.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "oneq/boolfn.hpp"
#include "oneq/rational.hpp"

namespace oneq {

/// Non-negative rational weights c_0..c_n summing to exactly 1.
class WeightCertificate {
 public:
  /// Throws std::invalid_argument unless there are >= 2 weights, all
  /// non-negative, summing to 1.
  explicit WeightCertificate(std::vector<Rational> weights);

  /// Weights c_0 = 0, c_i = 1/n.
  static WeightCertificate uniform(int n);
  /// Weights c_0 = 1, all others 0.
  static WeightCertificate point_mass(int n);

  int arity() const noexcept { return static_cast<int>(weights_.size()) - 1; }
  const Rational& operator[](int i) const { return weights_.at(static_cast<std::size_t>(i)); }
  std::span<const Rational> weights() const noexcept { return weights_; }

  /// Indices carrying positive weight.
  std::vector<int> support() const;

  friend bool operator==(const WeightCertificate&, const WeightCertificate&) = default;

 private:
  std::vector<Rational> weights_;
};

/// `n=<int>` then `c<i>=<p>/<q>` for i = 0..n.
std::string serialize(const WeightCertificate& c);
/// Throws ParseError.
WeightCertificate parse_certificate(std::string_view text);

/// One equation  sum_{i in set} c_i = 1/2, with the first domain pair (in
/// bit-string order, first < second) that produced it.
struct Constraint {
  IndexSet set;
  BitString first;
  BitString second;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

struct ConstraintSystem {
  int n = 0;
  /// Deduplicated, sorted by index set.
  std::vector<Constraint> constraints;
  /// Set when some distinguishing pair has an empty differing set. A
  /// PartialBooleanFunction cannot produce this, but systems assembled by hand
  /// can.
  bool empty_set_contradiction = false;

  friend bool operator==(const ConstraintSystem&, const ConstraintSystem&) = default;
};

ConstraintSystem build_constraints(const PartialBooleanFunction& f);

/// Multipliers y over the rows of the system: one per constraint in order,
/// then one for the normalization row sum_i c_i = 1. The combination
/// a = sum_r y_r * row_r has every a_i <= 0 while sum_r y_r * rhs_r > 0, which
/// no non-negative c can satisfy.
struct FarkasCertificate {
  std::vector<Rational> multipliers;
};

/// True iff `y` is a valid infeasibility proof for `cs`.
bool verify_farkas(const ConstraintSystem& cs, const FarkasCertificate& y);

struct Infeasibility {
  /// Human-readable elimination / pivot log ending in the contradiction.
  std::vector<std::string> trace;
  FarkasCertificate farkas;
  /// The combination cancels every coefficient (0 = nonzero), found by
  /// equality elimination alone.
  bool pure_equality = false;
};

class FeasibilityOutcome {
 public:
  explicit FeasibilityOutcome(WeightCertificate c) : value_(std::move(c)) {}
  explicit FeasibilityOutcome(Infeasibility why) : value_(std::move(why)) {}

  bool feasible() const noexcept { return std::holds_alternative<WeightCertificate>(value_); }
  const WeightCertificate& certificate() const { return std::get<WeightCertificate>(value_); }
  const Infeasibility& infeasibility() const { return std::get<Infeasibility>(value_); }

 private:
  std::variant<WeightCertificate, Infeasibility> value_;
};

/// Gaussian elimination on the equalities first (redundant rows dropped,
/// inconsistent rows reported), then phase-one simplex with Bland's rule on
/// the independent remainder. Returns a vertex of the feasible polytope.
FeasibilityOutcome solve_feasibility(const ConstraintSystem& cs);

/// Maximum of c_index over all certificates, or nullopt if none exists.
std::optional<Rational> max_weight(const ConstraintSystem& cs, int index);

/// Indices that carry positive weight in at least one certificate.
std::vector<int> support_union(const ConstraintSystem& cs);

/// Rechecks a certificate against every distinguishing pair of f directly,
/// without going through build_constraints. Throws DimensionError when the
/// arities differ.
bool verify_certificate(const PartialBooleanFunction& f, const WeightCertificate& c);

}  // namespace oneq
