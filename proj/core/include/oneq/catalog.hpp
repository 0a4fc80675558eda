#pragma once

// Named one-query families with their weight certificates and the raw witness
// strings w_i whose images sqrt(D) w_i span the accepting subspace.

#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "oneq/boolfn.hpp"
#include "oneq/feasibility.hpp"
#include "oneq/rational.hpp"

namespace oneq {

struct CatalogEntry {
  std::string name;
  PartialBooleanFunction function;
  WeightCertificate certificate;
  /// n-bit 0/1 vectors. As vectors over indices 0..n they carry w_0 = 1; the
  /// blank index only matters when c_0 > 0 (f2, f3).
  std::vector<BitString> raw_witnesses;
  std::vector<std::string> notes;
};

/// Deutsch-Jozsa: 1 on |x| in {0, n}, 0 on |x| = n/2. n even.
CatalogEntry make_f1(int n);
/// 1 on x = 0^n, 0 on |x| = c, for ceil(n/2) <= c <= n.
CatalogEntry make_f2(int n, int c);
/// Quasi-symmetric: with xhat = sum_i c_i x_i, 1 where xhat in {0, 1} and 0
/// where xhat = 1/2. `weights` are c_0..c_n.
CatalogEntry make_f3(std::vector<Rational> weights);
/// The fixed 4-bit asymmetric function.
CatalogEntry make_f4();
/// The 4n-bit block function; 0-set = points meeting the three weight
/// conditions, minus the 1-set.
CatalogEntry make_f5(int n);

/// Which function the witness span reproduces on the domain.
enum class WitnessReading { function, complement };

struct OrthonormalWitnesses {
  Eigen::MatrixXd vectors;  // one orthonormal column per raw witness
  WitnessReading represents = WitnessReading::function;
  double max_deviation = 0.0;  // against the represented function
};

/// sqrt(D) w_i followed by modified Gram-Schmidt; then checks
/// sum_i <v_i|x_D>^2 against f and 1 - f within 1e-9 on the domain. Throws
/// std::runtime_error if the witnesses are dependent or match neither.
OrthonormalWitnesses orthonormalized_witnesses(const CatalogEntry& e);

/// sum_i <v_i|x_D>^2 for orthonormal columns v.
double witness_sum_of_squares(const Eigen::MatrixXd& vectors, const WeightCertificate& c,
                              const BitString& x);

/// Exact sum_i <w_i|D|x'>^2 over the raw, non-orthonormalized witnesses.
Rational raw_sum_of_squares(const CatalogEntry& e, const BitString& x);

}  // namespace oneq
