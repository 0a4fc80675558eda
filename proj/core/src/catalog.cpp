#include "oneq/catalog.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "oneq/errors.hpp"
#include "oneq/witness.hpp"

namespace oneq {

namespace {

constexpr int kMaxEnumeratedBits = 20;

void check_enumerable(int bits, const char* what) {
  if (bits > kMaxEnumeratedBits) {
    throw BudgetExceeded(std::string(what) + ": enumeration limited to " +
                         std::to_string(kMaxEnumeratedBits) + " bits");
  }
}

// x_1..x_k = block pattern repeated, e.g. ones(n) zeros(n) ...
BitString blocks(int n, std::initializer_list<bool> pattern) {
  std::string s;
  for (bool b : pattern) s.append(static_cast<std::size_t>(n), b ? '1' : '0');
  return BitString::parse(s);
}

BitString all_ones(int n) { return BitString(n, (std::uint64_t{1} << n) - 1); }

CatalogEntry finish(std::string name, PartialBooleanFunction f, WeightCertificate c,
                    std::vector<BitString> witnesses, std::vector<std::string> notes) {
  if (!verify_certificate(f, c) || !check_orthogonality(f, c)) {
    throw std::logic_error(name + ": catalog certificate does not verify");
  }
  return CatalogEntry{std::move(name), std::move(f), std::move(c), std::move(witnesses),
                      std::move(notes)};
}

}  // namespace

CatalogEntry make_f1(int n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("f1 needs an even n >= 2");
  check_enumerable(n, "f1");
  std::vector<PartialBooleanFunction::Entry> entries;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    const int w = std::popcount(v);
    if (w == 0 || w == n) entries.emplace_back(BitString(n, v), true);
    if (2 * w == n) entries.emplace_back(BitString(n, v), false);
  }
  return finish("f1(n=" + std::to_string(n) + ")", PartialBooleanFunction(n, std::move(entries)),
                WeightCertificate::uniform(n), {all_ones(n)}, {});
}

CatalogEntry make_f2(int n, int c) {
  if (n < 1 || c < (n + 1) / 2 || c > n) {
    throw std::invalid_argument("f2 needs ceil(n/2) <= c <= n, got n = " + std::to_string(n) +
                                ", c = " + std::to_string(c));
  }
  check_enumerable(n, "f2");
  std::vector<PartialBooleanFunction::Entry> entries{{BitString(n, 0), true}};
  for (std::uint64_t v = 1; v < (std::uint64_t{1} << n); ++v) {
    if (std::popcount(v) == c) entries.emplace_back(BitString(n, v), false);
  }
  std::vector<Rational> w(static_cast<std::size_t>(n) + 1, Rational(1, 2 * c));
  w[0] = Rational(2 * c - n, 2 * c);
  std::vector<std::string> notes;
  if (w[0] > 0) notes.push_back("raw witness uses w_0 = 1 on the blank index (c_0 > 0)");
  return finish("f2(n=" + std::to_string(n) + ",c=" + std::to_string(c) + ")",
                PartialBooleanFunction(n, std::move(entries)), WeightCertificate(std::move(w)),
                {all_ones(n)}, std::move(notes));
}

CatalogEntry make_f3(std::vector<Rational> weights) {
  WeightCertificate cert(std::move(weights));  // validates sum and sign
  const int n = cert.arity();
  check_enumerable(n, "f3");
  const Rational half(1, 2);
  std::vector<PartialBooleanFunction::Entry> entries;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    const BitString x(n, v);
    Rational xhat = 0;
    for (int i = 1; i <= n; ++i) {
      if (x.bit(i)) xhat += cert[i];
    }
    if (xhat == 0 || xhat == 1) entries.emplace_back(x, true);
    if (xhat == half) entries.emplace_back(x, false);
  }
  // 0^n always has xhat = 0, so the domain is never empty.
  PartialBooleanFunction f(n, std::move(entries));
  std::vector<std::string> notes;
  if (cert[0] > 0) notes.push_back("raw witness uses w_0 = 1 on the blank index (c_0 > 0)");
  if (f.is_constant()) notes.push_back("degenerate: constant (no point has xhat = 1/2)");
  std::string name = "f3(c=";
  for (int i = 0; i <= n; ++i) name += (i ? "," : "") + to_fraction(cert[i]);
  name += ")";
  return finish(std::move(name), std::move(f), std::move(cert), {all_ones(n)}, std::move(notes));
}

CatalogEntry make_f4() {
  std::vector<PartialBooleanFunction::Entry> entries;
  for (const char* s : {"0000", "0011", "1100", "1111"}) entries.emplace_back(BitString::parse(s), false);
  for (const char* s : {"0101", "0110", "1001", "1010"}) entries.emplace_back(BitString::parse(s), true);
  return finish("f4", PartialBooleanFunction(4, std::move(entries)),
                WeightCertificate({0, 0, 0, Rational(1, 2), Rational(1, 2)}),
                {BitString::parse("0011")},
                {"listed witness w_1 = 0011 reproduces 1 - f4 (it spans the 0-inputs); "
                 "the accepting projector is derived from f^-1(1) instead"});
}

CatalogEntry make_f5(int n) {
  if (n < 1) throw std::invalid_argument("f5 needs n >= 1");
  if (n > 4) throw BudgetExceeded("f5 limited to n <= 4 (domain grows as sum_a C(n,a)^4)");
  const int bits = 4 * n;
  std::vector<BitString> one_set = {
      blocks(n, {0, 0, 0, 0}), blocks(n, {1, 1, 1, 1}), blocks(n, {0, 0, 1, 1}),
      blocks(n, {1, 1, 0, 0}), blocks(n, {0, 1, 0, 1}), blocks(n, {1, 0, 1, 0}),
  };
  std::vector<PartialBooleanFunction::Entry> entries;
  for (const auto& x : one_set) entries.emplace_back(x, true);

  // Zero-set conditions over blocks A B C E of n bits each:
  // |x| = 2n, |A| + |B| = n, |A| + |C| = n.
  const auto block_weight = [&](const BitString& x, int block) {
    int w = 0;
    for (int i = block * n + 1; i <= (block + 1) * n; ++i) w += x.bit(i) ? 1 : 0;
    return w;
  };
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << bits); ++v) {
    if (std::popcount(v) != 2 * n) continue;
    const BitString x(bits, v);
    const int a = block_weight(x, 0);
    if (a + block_weight(x, 1) != n || a + block_weight(x, 2) != n) continue;
    if (std::find(one_set.begin(), one_set.end(), x) != one_set.end()) continue;
    entries.emplace_back(x, false);
  }
  std::vector<Rational> w(static_cast<std::size_t>(bits) + 1, Rational(1, bits));
  w[0] = 0;
  return finish("f5(n=" + std::to_string(n) + ")", PartialBooleanFunction(bits, std::move(entries)),
                WeightCertificate(std::move(w)),
                {blocks(n, {1, 1, 1, 1}), blocks(n, {1, 1, 0, 0}), blocks(n, {1, 0, 1, 0})},
                {"raw witnesses are not orthonormal under sqrt(D); orthonormalize before use"});
}

double witness_sum_of_squares(const Eigen::MatrixXd& vectors, const WeightCertificate& c,
                              const BitString& x) {
  const auto signs = sign_vector(x);
  Eigen::VectorXd xd(c.arity() + 1);
  for (int i = 0; i <= c.arity(); ++i) xd(i) = std::sqrt(to_double(c[i])) * signs[i];
  return (vectors.transpose() * xd).squaredNorm();
}

OrthonormalWitnesses orthonormalized_witnesses(const CatalogEntry& e) {
  const auto& c = e.certificate;
  const int dim = c.arity() + 1;
  Eigen::MatrixXd raw(dim, static_cast<Eigen::Index>(e.raw_witnesses.size()));
  for (Eigen::Index a = 0; a < raw.cols(); ++a) {
    const auto& w = e.raw_witnesses[static_cast<std::size_t>(a)];
    for (int i = 0; i < dim; ++i) {
      const bool on = i == 0 || w.bit(i);
      raw(i, a) = on ? std::sqrt(to_double(c[i])) : 0.0;
    }
  }
  OrthonormalWitnesses out;
  out.vectors = orthonormalize(raw);

  double dev_f = 0.0;
  double dev_complement = 0.0;
  for (const auto& [x, fx] : e.function.entries()) {
    const double s = witness_sum_of_squares(out.vectors, c, x);
    dev_f = std::max(dev_f, std::abs(s - (fx ? 1.0 : 0.0)));
    dev_complement = std::max(dev_complement, std::abs(s - (fx ? 0.0 : 1.0)));
  }
  constexpr double kTol = 1e-9;
  if (dev_f <= kTol) {
    out.represents = WitnessReading::function;
    out.max_deviation = dev_f;
  } else if (dev_complement <= kTol) {
    out.represents = WitnessReading::complement;
    out.max_deviation = dev_complement;
  } else {
    throw std::runtime_error(e.name + ": witnesses reproduce neither f nor 1 - f");
  }
  return out;
}

Rational raw_sum_of_squares(const CatalogEntry& e, const BitString& x) {
  const auto& c = e.certificate;
  if (x.size() != c.arity()) throw DimensionError("raw_sum_of_squares: arity mismatch");
  const auto signs = sign_vector(x);
  Rational total = 0;
  for (const auto& w : e.raw_witnesses) {
    Rational inner = c[0];  // w_0 = 1, x'_0 = +1
    for (int i = 1; i <= c.arity(); ++i) {
      if (w.bit(i)) inner += c[i] * signs[i];
    }
    total += inner * inner;
  }
  return total;
}

}  // namespace oneq
