#include "oneq/witness.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "oneq/errors.hpp"

namespace oneq {

GramWitness::GramWitness(WeightCertificate certificate, std::vector<BitString> basis,
                         RationalMatrix gram, RationalMatrix gram_inverse, Rational determinant,
                         bool zero_side)
    : certificate_(std::move(certificate)),
      basis_(std::move(basis)),
      gram_(std::move(gram)),
      gram_inverse_(std::move(gram_inverse)),
      determinant_(std::move(determinant)),
      zero_side_(zero_side) {}

Rational weighted_inner(const WeightCertificate& c, const BitString& x, const BitString& y) {
  if (x.size() != c.arity() || y.size() != c.arity()) {
    throw DimensionError("weighted_inner: certificate has n = " + std::to_string(c.arity()) +
                         ", inputs have " + std::to_string(x.size()) + " and " +
                         std::to_string(y.size()));
  }
  Rational sum = c[0];
  for (int i = 1; i <= c.arity(); ++i) {
    if (x.bit(i) == y.bit(i)) {
      sum += c[i];
    } else {
      sum -= c[i];
    }
  }
  return sum;
}

namespace {

std::optional<std::pair<std::pair<BitString, BitString>, Rational>> first_violation(
    const PartialBooleanFunction& f, const WeightCertificate& c) {
  const auto ones = f.inputs_with(true);
  const auto zeros = f.inputs_with(false);
  for (const auto& x : ones) {
    for (const auto& y : zeros) {
      Rational inner = weighted_inner(c, x, y);
      if (inner != 0) return std::make_pair(std::make_pair(x, y), std::move(inner));
    }
  }
  return std::nullopt;
}

}  // namespace

bool check_orthogonality(const PartialBooleanFunction& f, const WeightCertificate& c) {
  if (f.arity() != c.arity()) throw DimensionError("check_orthogonality: arity mismatch");
  return !first_violation(f, c).has_value();
}

GramWitness build_gram_witness(const PartialBooleanFunction& f, const WeightCertificate& c,
                               const WitnessOptions& options) {
  if (f.arity() != c.arity()) throw DimensionError("build_gram_witness: arity mismatch");
  if (options.require_orthogonality) {
    if (auto bad = first_violation(f, c)) {
      throw OrthogonalityError(bad->first.first, bad->first.second, bad->second);
    }
  }

  auto candidates = f.inputs_with(!options.use_zero_inputs);
  if (options.reverse_scan) std::reverse(candidates.begin(), candidates.end());

  const std::size_t max_rank = static_cast<std::size_t>(c.arity()) + 1;
  std::vector<BitString> basis;
  RationalMatrix gram;
  RationalMatrix inverse;
  Rational det = 1;

  for (const auto& x : candidates) {
    if (basis.size() == max_rank) break;
    const std::size_t k = basis.size();
    std::vector<Rational> border(k);
    for (std::size_t a = 0; a < k; ++a) border[a] = weighted_inner(c, x, basis[a]);

    // u = G^-1 k,  schur = <x|x> - k^T u = 1 - k^T u.
    std::vector<Rational> u(k, Rational(0));
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) u[a] += inverse[a][b] * border[b];
    }
    Rational schur = 1;
    for (std::size_t a = 0; a < k; ++a) schur -= border[a] * u[a];
    if (schur == 0) continue;  // bordered determinant vanishes: dependent

    RationalMatrix next(k + 1, std::vector<Rational>(k + 1));
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) next[a][b] = inverse[a][b] + u[a] * u[b] / schur;
      next[a][k] = -u[a] / schur;
      next[k][a] = next[a][k];
    }
    next[k][k] = 1 / schur;
    inverse = std::move(next);

    for (std::size_t a = 0; a < k; ++a) gram[a].push_back(border[a]);
    border.push_back(Rational(1));
    gram.push_back(std::move(border));
    det *= schur;
    basis.push_back(x);
  }

  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      Rational v = 0;
      for (std::size_t m = 0; m < basis.size(); ++m) v += inverse[a][m] * gram[m][b];
      if (v != (a == b ? 1 : 0)) throw std::logic_error("Gram inverse is not exact");
    }
  }
  return GramWitness(c, std::move(basis), std::move(gram), std::move(inverse), std::move(det),
                     options.use_zero_inputs);
}

Rational evaluate_g(const GramWitness& w, const BitString& x) {
  if (x.size() != w.arity()) throw DimensionError("evaluate_g: arity mismatch");
  const std::size_t k = w.rank();
  std::vector<Rational> border(k);
  for (std::size_t a = 0; a < k; ++a) border[a] = weighted_inner(w.certificate(), x, w.basis()[a]);
  Rational g = 0;
  for (std::size_t a = 0; a < k; ++a) {
    if (border[a] == 0) continue;
    Rational row = 0;
    for (std::size_t b = 0; b < k; ++b) row += w.gram_inverse()[a][b] * border[b];
    g += border[a] * row;
  }
  return g;
}

Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& vectors, double tolerance) {
  Eigen::MatrixXd q = vectors;
  for (Eigen::Index a = 0; a < q.cols(); ++a) {
    for (Eigen::Index b = 0; b < a; ++b) q.col(a) -= q.col(b).dot(q.col(a)) * q.col(b);
    const double norm = q.col(a).norm();
    if (norm < tolerance) {
      throw std::runtime_error("vector " + std::to_string(a) +
                               " is numerically dependent on its predecessors");
    }
    q.col(a) /= norm;
  }
  return q;
}

ProjectorMatrix build_projector_float(const GramWitness& w) {
  const Eigen::Index dim = w.arity() + 1;
  Eigen::MatrixXd vectors(dim, static_cast<Eigen::Index>(w.rank()));
  for (Eigen::Index a = 0; a < vectors.cols(); ++a) {
    const auto signs = sign_vector(w.basis()[static_cast<std::size_t>(a)]);
    for (Eigen::Index i = 0; i < dim; ++i) {
      vectors(i, a) = std::sqrt(to_double(w.certificate()[static_cast<int>(i)])) * signs[static_cast<int>(i)];
    }
  }
  Eigen::MatrixXd q;
  try {
    q = orthonormalize(vectors);
  } catch (const std::runtime_error& e) {
    throw std::logic_error(std::string("projector basis: ") + e.what());
  }
  ProjectorMatrix p = ProjectorMatrix::Zero(dim, dim);
  for (Eigen::Index a = 0; a < q.cols(); ++a) p += q.col(a) * q.col(a).transpose();
  return p;
}

std::string dump_witness(const GramWitness& w, const ProjectorMatrix& projector) {
  std::ostringstream out;
  out << "n=" << w.arity() << '\n';
  out << "side=" << (w.spans_zero_inputs() ? "zeros" : "ones") << '\n';
  out << "rank=" << w.rank() << '\n';
  out << "det=" << to_fraction(w.determinant()) << '\n';
  out << "[basis]\n";
  for (const auto& x : w.basis()) out << x << '\n';
  const auto grid = [&](const char* title, const RationalMatrix& m) {
    out << '[' << title << "]\n";
    for (const auto& row : m) {
      for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << to_fraction(row[j]);
      out << '\n';
    }
  };
  grid("gram", w.gram());
  grid("gram_inverse", w.gram_inverse());
  out << "[projector]\n" << std::setprecision(12);
  for (Eigen::Index i = 0; i < projector.rows(); ++i) {
    for (Eigen::Index j = 0; j < projector.cols(); ++j) {
      // Print exact zeros without a sign so dumps are stable.
      const double v = projector(i, j) == 0.0 ? 0.0 : projector(i, j);
      out << (j ? " " : "") << v;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace oneq
