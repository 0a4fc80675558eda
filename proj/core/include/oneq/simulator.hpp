#pragma once

// Double-precision run of the one-query algorithm: prepare sum_i sqrt(c_i)|i>,
// apply the phase oracle once, measure {P, I - P}. All amplitudes are real.

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "oneq/boolfn.hpp"
#include "oneq/feasibility.hpp"
#include "oneq/witness.hpp"

namespace oneq {

using StateVector = Eigen::VectorXd;

inline constexpr double kDefaultTolerance = 1e-9;

StateVector initial_state(const WeightCertificate& c);

/// Multiplies amplitude i by (-1)^{x_i}; amplitude 0 is never touched.
StateVector apply_phase_oracle(const StateVector& s, const BitString& x);

/// The oracle O_x for one input, counting how often it is applied.
class PhaseOracle {
 public:
  explicit PhaseOracle(BitString x) : x_(std::move(x)) {}

  StateVector operator()(const StateVector& s) {
    ++calls_;
    return apply_phase_oracle(s, x_);
  }

  std::size_t calls() const noexcept { return calls_; }

 private:
  BitString x_;
  std::size_t calls_ = 0;
};

/// s^T P s, clamped into [0, 1] when within 1e-12 outside it. Throws
/// std::domain_error beyond that, since P cannot then be a projector.
double measure_projector(const StateVector& s, const ProjectorMatrix& projector);

struct SimulationRecord {
  BitString x;
  double p_accept = 0.0;
  bool expected = false;
  bool pass = false;
};

struct SimulationReport {
  std::vector<SimulationRecord> records;  // bit-string order
  double max_deviation = 0.0;
  double tolerance = kDefaultTolerance;
  std::size_t oracle_calls = 0;

  bool all_pass() const noexcept;
  std::size_t failures() const noexcept;
};

/// Runs every domain input through prepare / query / measure.
SimulationReport run_algorithm1(const PartialBooleanFunction& f, const WeightCertificate& c,
                                const ProjectorMatrix& projector,
                                double tolerance = kDefaultTolerance);

/// Columns x, expected, p_accept (12 digits), pass.
std::string format_table(const SimulationReport& report);
/// `x=<bits> p=<decimal> f=<0|1> ok=<0|1>` per record.
std::string format_lines(const SimulationReport& report);

}  // namespace oneq
