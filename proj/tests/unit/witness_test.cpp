#include <gtest/gtest.h>

#include "generators.hpp"
#include "oneq/catalog.hpp"
#include "oneq/witness.hpp"

namespace oneq {
namespace {

BitString bits(const char* s) { return BitString::parse(s); }

TEST(WeightedInner, Examples) {
  const auto u4 = WeightCertificate::uniform(4);
  EXPECT_EQ(weighted_inner(u4, bits("1111"), bits("0011")), 0);
  EXPECT_EQ(weighted_inner(u4, bits("0101"), bits("0101")), 1);
  EXPECT_EQ(weighted_inner(u4, bits("0000"), bits("1111")), -1);
  const WeightCertificate c({Rational(1, 2), Rational(1, 4), Rational(1, 4)});
  EXPECT_EQ(weighted_inner(c, bits("00"), bits("11")), 0);
  EXPECT_EQ(weighted_inner(c, bits("00"), bits("10")), Rational(1, 2));
}

TEST(WeightedInner, MatchesDifferingSetFormula) {
  testing::Rng rng(23);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + i % 8;
    const auto c = testing::random_weights(rng, n);
    std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << n) - 1);
    const BitString x(n, pick(rng));
    const BitString y(n, pick(rng));
    Rational s = 0;
    for (int idx : differing_set(x, y).members()) s += c[idx];
    EXPECT_EQ(weighted_inner(c, x, y), 1 - 2 * s);
  }
}

TEST(CheckOrthogonality, Examples) {
  EXPECT_TRUE(check_orthogonality(make_f1(4).function, WeightCertificate::uniform(4)));
  const auto and2 = parse_function("00 0\n01 0\n10 0\n11 1");
  EXPECT_FALSE(check_orthogonality(and2, WeightCertificate::uniform(2)));
  EXPECT_THROW(build_gram_witness(and2, WeightCertificate::uniform(2)), OrthogonalityError);
}

TEST(GramWitness, F5SmallestHasIdentityGram) {
  const auto e = make_f5(1);
  const auto w = build_gram_witness(e.function, e.certificate);
  ASSERT_EQ(w.rank(), 3u);
  EXPECT_EQ(w.basis()[0], bits("0000"));
  EXPECT_EQ(w.basis()[1], bits("0011"));
  EXPECT_EQ(w.basis()[2], bits("0101"));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(w.gram()[i][j], i == j ? 1 : 0);
  }
  EXPECT_EQ(w.determinant(), 1);
}

TEST(GramWitness, F1HasRankOne) {
  const auto e = make_f1(4);
  const auto w = build_gram_witness(e.function, e.certificate);
  EXPECT_EQ(w.rank(), 1u);
  EXPECT_EQ(evaluate_g(w, bits("1111")), 1);
  EXPECT_EQ(evaluate_g(w, bits("0000")), 1);
  EXPECT_EQ(evaluate_g(w, bits("0110")), 0);
}

TEST(GramWitness, EmptyOneSet) {
  const auto f = parse_function("01 0\n10 0");
  const auto w = build_gram_witness(f, WeightCertificate::uniform(2));
  EXPECT_EQ(w.rank(), 0u);
  EXPECT_EQ(evaluate_g(w, bits("01")), 0);
  const auto p = build_projector_float(w);
  EXPECT_EQ(p.rows(), 3);
  EXPECT_DOUBLE_EQ(p.norm(), 0.0);
}

TEST(GramWitness, ZeroSideRepresentsComplement) {
  const auto e = make_f4();
  const auto w = build_gram_witness(e.function, e.certificate, {.use_zero_inputs = true});
  EXPECT_TRUE(w.spans_zero_inputs());
  for (const auto& [x, v] : e.function.entries()) EXPECT_EQ(evaluate_g(w, x), v ? 0 : 1);
}

TEST(GramWitness, ReproducesFOnRandomFeasible) {
  testing::Rng rng(29);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + i % 6;
    const auto c = testing::random_weights(rng, n);
    const auto f = testing::random_orthogonal(rng, n, c);
    for (bool reverse : {false, true}) {
      const auto w = build_gram_witness(f, c, {.reverse_scan = reverse});
      // Exact inverse.
      for (std::size_t r = 0; r < w.rank(); ++r) {
        for (std::size_t s = 0; s < w.rank(); ++s) {
          Rational acc = 0;
          for (std::size_t k = 0; k < w.rank(); ++k) acc += w.gram_inverse()[r][k] * w.gram()[k][s];
          EXPECT_EQ(acc, r == s ? 1 : 0);
        }
      }
      for (const auto& [x, v] : f.entries()) EXPECT_EQ(evaluate_g(w, x), v ? 1 : 0);
    }
  }
}

TEST(Projector, F1Entries) {
  const auto e = make_f1(4);
  const auto p = build_projector_float(build_gram_witness(e.function, e.certificate));
  ASSERT_EQ(p.rows(), 5);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      const double expected = (i == 0 || j == 0) ? 0.0 : 0.25;
      EXPECT_NEAR(p(i, j), expected, 1e-12);
    }
  }
}

TEST(Projector, F5TraceIsRank) {
  const auto e = make_f5(2);
  const auto p = build_projector_float(build_gram_witness(e.function, e.certificate));
  EXPECT_NEAR(p.trace(), 3.0, 1e-9);
  EXPECT_LE((p * p - p).cwiseAbs().maxCoeff(), 1e-9);
  EXPECT_LE((p - p.transpose()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Orthonormalize, Basics) {
  Eigen::MatrixXd v(3, 2);
  v << 1, 1, 0, 1, 0, 0;
  const auto q = orthonormalize(v);
  EXPECT_LE((q.transpose() * q - Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-12);
  Eigen::MatrixXd dependent(2, 2);
  dependent << 1, 2, 1, 2;
  EXPECT_THROW(orthonormalize(dependent), std::runtime_error);
}

TEST(DumpWitness, Sections) {
  const auto e = make_f1(2);
  const auto w = build_gram_witness(e.function, e.certificate);
  const auto text = dump_witness(w, build_projector_float(w));
  for (const char* key : {"n=2", "rank=1", "[basis]", "[gram]", "[gram_inverse]", "[projector]"}) {
    EXPECT_NE(text.find(key), std::string::npos) << key;
  }
}

}  // namespace
}  // namespace oneq
