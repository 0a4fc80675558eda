#include "oneq/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "oneq/errors.hpp"

namespace oneq {

namespace {

constexpr double kClamp = 1e-12;

}  // namespace

StateVector initial_state(const WeightCertificate& c) {
  StateVector s(c.arity() + 1);
  for (int i = 0; i <= c.arity(); ++i) s(i) = std::sqrt(to_double(c[i]));
  return s;
}

StateVector apply_phase_oracle(const StateVector& s, const BitString& x) {
  if (s.size() != x.size() + 1) {
    throw DimensionError("phase oracle: state has dimension " + std::to_string(s.size()) +
                         ", input has n = " + std::to_string(x.size()));
  }
  StateVector out = s;
  for (int i = 1; i <= x.size(); ++i) {
    if (x.bit(i)) out(i) = -out(i);
  }
  return out;
}

double measure_projector(const StateVector& s, const ProjectorMatrix& projector) {
  if (projector.rows() != s.size() || projector.cols() != s.size()) {
    throw DimensionError("measure_projector: dimension mismatch");
  }
  const double p = s.dot(projector * s);
  if (p < -kClamp || p > 1.0 + kClamp) {
    std::ostringstream msg;
    msg << "acceptance probability " << std::setprecision(17) << p
        << " outside [0,1]: not a projector";
    throw std::domain_error(msg.str());
  }
  return std::clamp(p, 0.0, 1.0);
}

bool SimulationReport::all_pass() const noexcept { return failures() == 0; }

std::size_t SimulationReport::failures() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const auto& r) { return !r.pass; }));
}

SimulationReport run_algorithm1(const PartialBooleanFunction& f, const WeightCertificate& c,
                                const ProjectorMatrix& projector, double tolerance) {
  if (f.arity() != c.arity() || projector.rows() != f.arity() + 1) {
    throw DimensionError("run_algorithm1: function, certificate and projector disagree on n");
  }
  SimulationReport report;
  report.tolerance = tolerance;
  const StateVector start = initial_state(c);
  for (const auto& [x, fx] : f.entries()) {
    PhaseOracle oracle(x);
    const StateVector queried = oracle(start);
    SimulationRecord rec;
    rec.x = x;
    rec.expected = fx;
    rec.p_accept = measure_projector(queried, projector);
    const double deviation = std::abs(rec.p_accept - (fx ? 1.0 : 0.0));
    rec.pass = deviation <= tolerance;
    report.max_deviation = std::max(report.max_deviation, deviation);
    report.oracle_calls += oracle.calls();
    report.records.push_back(rec);
  }
  return report;
}

std::string format_table(const SimulationReport& report) {
  std::ostringstream out;
  const int width = report.records.empty() ? 1 : std::max(1, report.records.front().x.size());
  out << std::left << std::setw(width) << "x" << "  expected  " << std::setw(16) << "p_accept"
      << "  pass\n";
  out << std::fixed << std::setprecision(12);
  for (const auto& r : report.records) {
    out << std::setw(width) << r.x.to_string() << "  " << std::setw(8) << (r.expected ? 1 : 0)
        << "  " << std::setw(16) << r.p_accept << "  " << (r.pass ? "yes" : "NO") << '\n';
  }
  out << std::scientific << std::setprecision(3) << "max_deviation=" << report.max_deviation
      << " tolerance=" << report.tolerance << " failures=" << report.failures() << '\n';
  return out.str();
}

std::string format_lines(const SimulationReport& report) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(12);
  for (const auto& r : report.records) {
    out << "x=" << r.x << " p=" << r.p_accept << " f=" << (r.expected ? 1 : 0)
        << " ok=" << (r.pass ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace oneq
