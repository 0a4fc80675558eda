#pragma once

// Turns a weight certificate into the measurement that decides f. The vectors
// |x_D> = sqrt(D)|x'> are never formed exactly; every exact quantity goes
// through inner products <x_D|y_D> = sum_i c_i x'_i y'_i, which are rational.
// The projector onto span{|x_D> : f(x) = 1} is then represented by a basis of
// 1-inputs and the inverse of their Gram matrix, so that
//
//   g(x) = <x_D|P|x_D> = k(x)^T G^-1 k(x),   k(x)_a = <x_D|basis_a_D>.
//
// A double-precision projector is built separately for the simulator.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "oneq/boolfn.hpp"
#include "oneq/feasibility.hpp"
#include "oneq/rational.hpp"

namespace oneq {

using RationalMatrix = std::vector<std::vector<Rational>>;
using ProjectorMatrix = Eigen::MatrixXd;

/// A pair with different values whose vectors are not orthogonal.
class OrthogonalityError : public std::invalid_argument {
 public:
  OrthogonalityError(const BitString& x, const BitString& y, const Rational& inner)
      : std::invalid_argument("<x_D|y_D> = " + to_fraction(inner) + " for " + x.to_string() +
                              " vs " + y.to_string()),
        x_(x),
        y_(y) {}

  const BitString& x() const noexcept { return x_; }
  const BitString& y() const noexcept { return y_; }

 private:
  BitString x_;
  BitString y_;
};

struct WitnessOptions {
  /// Span the 0-inputs instead; g then equals 1 - f on the domain.
  bool use_zero_inputs = false;
  /// Scan candidates in descending bit-string order.
  bool reverse_scan = false;
  /// Throw OrthogonalityError when the certificate fails check_orthogonality.
  /// With false, the projector onto the 1-input span is built regardless
  /// (used to show what a bad certificate does in simulation).
  bool require_orthogonality = true;
};

class GramWitness {
 public:
  GramWitness(WeightCertificate certificate, std::vector<BitString> basis, RationalMatrix gram,
              RationalMatrix gram_inverse, Rational determinant, bool zero_side);

  const WeightCertificate& certificate() const noexcept { return certificate_; }
  int arity() const noexcept { return certificate_.arity(); }
  std::span<const BitString> basis() const noexcept { return basis_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  const RationalMatrix& gram() const noexcept { return gram_; }
  const RationalMatrix& gram_inverse() const noexcept { return gram_inverse_; }
  /// det G over the selected basis (1 for the empty basis).
  const Rational& determinant() const noexcept { return determinant_; }
  bool spans_zero_inputs() const noexcept { return zero_side_; }

 private:
  WeightCertificate certificate_;
  std::vector<BitString> basis_;
  RationalMatrix gram_;
  RationalMatrix gram_inverse_;
  Rational determinant_;
  bool zero_side_;
};

/// sum_{i=0}^{n} c_i x'_i y'_i.
Rational weighted_inner(const WeightCertificate& c, const BitString& x, const BitString& y);

/// True iff weighted_inner vanishes on every pair with different values.
bool check_orthogonality(const PartialBooleanFunction& f, const WeightCertificate& c);

/// Greedy exact basis selection over f^-1(1) (bit-string order) using the
/// bordered Gram determinant det G' = det G * (1 - k^T G^-1 k), with the
/// inverse maintained by block updates. An all-zero side yields the empty
/// witness, for which g is identically 0.
GramWitness build_gram_witness(const PartialBooleanFunction& f, const WeightCertificate& c,
                               const WitnessOptions& options = {});

/// Exact <x_D|P|x_D>.
Rational evaluate_g(const GramWitness& w, const BitString& x);

/// sum_a |v_a><v_a| with v orthonormalized from sqrt(c_i) x'_i by modified
/// Gram-Schmidt. Throws std::logic_error if a basis vector collapses
/// numerically, which exact rank selection should rule out.
ProjectorMatrix build_projector_float(const GramWitness& w);

/// Modified Gram-Schmidt on the columns of `vectors`; throws
/// std::runtime_error when a column's residual norm drops below `tolerance`.
Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& vectors, double tolerance = 1e-9);

/// Diagnostic text: basis, Gram matrix and inverse as rational grids, and the
/// float projector with 12 significant digits.
std::string dump_witness(const GramWitness& w, const ProjectorMatrix& projector);

}  // namespace oneq
