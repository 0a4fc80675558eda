#include <gtest/gtest.h>

#include <algorithm>

#include "generators.hpp"
#include "oneq/catalog.hpp"
#include "oneq/errors.hpp"
#include "oneq/feasibility.hpp"

namespace oneq {
namespace {

std::vector<std::string> sets_of(const ConstraintSystem& cs) {
  std::vector<std::string> out;
  for (const auto& c : cs.constraints) out.push_back(c.set.to_string());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Independent check of the constraint row for a single pair.
bool pair_satisfied(const WeightCertificate& c, const BitString& x, const BitString& y) {
  Rational s = 0;
  for (int i = 1; i <= c.arity(); ++i) {
    if (x.bit(i) != y.bit(i)) s += c[i];
  }
  return s == Rational(1, 2);
}

TEST(WeightCertificate, Validation) {
  EXPECT_THROW(WeightCertificate({Rational(1)}), std::invalid_argument);
  EXPECT_THROW(WeightCertificate({Rational(1, 2), Rational(1, 3)}), std::invalid_argument);
  EXPECT_THROW(WeightCertificate({Rational(3, 2), Rational(-1, 2)}), std::invalid_argument);
  EXPECT_NO_THROW(WeightCertificate({Rational(1, 3), Rational(2, 3)}));
}

TEST(WeightCertificate, UniformAndPointMass) {
  const auto u = WeightCertificate::uniform(4);
  EXPECT_EQ(u[0], 0);
  for (int i = 1; i <= 4; ++i) EXPECT_EQ(u[i], Rational(1, 4));
  const auto p = WeightCertificate::point_mass(3);
  EXPECT_EQ(p[0], 1);
  EXPECT_EQ(p.support(), std::vector<int>{0});
  EXPECT_EQ(u.support(), (std::vector<int>{1, 2, 3, 4}));
}

TEST(WeightCertificate, SerializeRoundTrip) {
  const WeightCertificate c({Rational(1, 6), Rational(0), Rational(5, 6)});
  const auto text = serialize(c);
  EXPECT_EQ(text, "n=2\nc0=1/6\nc1=0/1\nc2=5/6\n");
  EXPECT_EQ(parse_certificate(text), c);
  testing::Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const auto w = testing::random_weights(rng, 1 + i % 6);
    EXPECT_EQ(parse_certificate(serialize(w)), w);
  }
}

TEST(WeightCertificate, ParseErrors) {
  EXPECT_THROW(parse_certificate("c0=1\n"), ParseError);
  EXPECT_THROW(parse_certificate("n=1\nc0=1/2\n"), ParseError);
  EXPECT_THROW(parse_certificate("n=1\nc0=1/2\nc1=x\n"), ParseError);
  EXPECT_THROW(parse_certificate("n=1\nc0=1/2\nc1=1/3\n"), ParseError);
}

TEST(BuildConstraints, Examples) {
  EXPECT_EQ(sets_of(build_constraints(make_f1(2).function)), (std::vector<std::string>{"{1}", "{2}"}));
  const auto and2 = parse_function("00 0\n01 0\n10 0\n11 1");
  EXPECT_EQ(sets_of(build_constraints(and2)), (std::vector<std::string>{"{1,2}", "{1}", "{2}"}));
  const auto constant = parse_function("00 1\n11 1");
  EXPECT_TRUE(build_constraints(constant).constraints.empty());
}

TEST(BuildConstraints, InvariantUnderComplement) {
  testing::Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    const auto f = testing::random_partial(rng, 1 + i % 5);
    EXPECT_EQ(build_constraints(f), build_constraints(complement(f)));
  }
}

TEST(SolveFeasibility, F1SmallestCase) {
  const auto out = solve_feasibility(build_constraints(make_f1(2).function));
  ASSERT_TRUE(out.feasible());
  EXPECT_EQ(out.certificate(), WeightCertificate({0, Rational(1, 2), Rational(1, 2)}));
}

TEST(SolveFeasibility, AndIsPureEqualityContradiction) {
  const auto and2 = parse_function("00 0\n01 0\n10 0\n11 1");
  const auto cs = build_constraints(and2);
  const auto out = solve_feasibility(cs);
  ASSERT_FALSE(out.feasible());
  EXPECT_TRUE(out.infeasibility().pure_equality);
  EXPECT_FALSE(out.infeasibility().trace.empty());
  EXPECT_TRUE(verify_farkas(cs, out.infeasibility().farkas));
}

TEST(SolveFeasibility, EmptySystemGivesPointMass) {
  const auto out = solve_feasibility(build_constraints(parse_function("000 1\n101 1")));
  ASSERT_TRUE(out.feasible());
  EXPECT_EQ(out.certificate(), WeightCertificate::point_mass(3));
}

TEST(SolveFeasibility, SignConstraintsNeedSimplex) {
  // {1}, {2} and {1,2,3} force c3 = -1/2; the equalities alone are consistent.
  const auto f = parse_function("000 1\n100 0\n010 0\n111 0");
  const auto cs = build_constraints(f);
  const auto out = solve_feasibility(cs);
  ASSERT_FALSE(out.feasible());
  EXPECT_FALSE(out.infeasibility().pure_equality);
  EXPECT_TRUE(verify_farkas(cs, out.infeasibility().farkas));
}

TEST(SolveFeasibility, SoundOnRandomFunctions) {
  testing::Rng rng(17);
  int feasible = 0;
  for (int i = 0; i < 400; ++i) {
    const auto f = testing::random_mixed(rng, 1 + i % 6);
    const auto cs = build_constraints(f);
    const auto out = solve_feasibility(cs);
    if (out.feasible()) {
      ++feasible;
      EXPECT_TRUE(verify_certificate(f, out.certificate()));
      for (const auto& x : f.inputs_with(true)) {
        for (const auto& y : f.inputs_with(false)) EXPECT_TRUE(pair_satisfied(out.certificate(), x, y));
      }
    } else {
      EXPECT_TRUE(verify_farkas(cs, out.infeasibility().farkas));
    }
  }
  EXPECT_GT(feasible, 100);
}

TEST(SolveFeasibility, FindsPlantedCertificates) {
  testing::Rng rng(19);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + i % 6;
    const auto f = testing::random_orthogonal(rng, n, testing::random_weights(rng, n));
    EXPECT_TRUE(solve_feasibility(build_constraints(f)).feasible());
  }
}

TEST(VerifyCertificate, Examples) {
  EXPECT_TRUE(verify_certificate(make_f1(4).function, WeightCertificate::uniform(4)));
  const auto f2 = make_f2(5, 3).function;
  EXPECT_TRUE(verify_certificate(f2, WeightCertificate(std::vector<Rational>(6, Rational(1, 6)))));
  const WeightCertificate skewed({Rational(1, 2), Rational(1, 8), Rational(1, 8), Rational(1, 8),
                                  Rational(1, 8)});
  EXPECT_FALSE(verify_certificate(make_f1(4).function, skewed));
  EXPECT_THROW(verify_certificate(f2, WeightCertificate::uniform(4)), DimensionError);
}

TEST(MaxWeight, BoundsAndSupport) {
  // f1(2) forces c = (0, 1/2, 1/2).
  const auto cs = build_constraints(make_f1(2).function);
  EXPECT_EQ(max_weight(cs, 0), Rational(0));
  EXPECT_EQ(max_weight(cs, 1), Rational(1, 2));
  EXPECT_EQ(support_union(cs), (std::vector<int>{1, 2}));

  // Only constraint c1 = 1/2: c0, c2 free up to 1/2.
  const auto loose = build_constraints(parse_function("00 1\n10 0\n"));
  EXPECT_EQ(max_weight(loose, 0), Rational(1, 2));
  EXPECT_EQ(max_weight(loose, 2), Rational(1, 2));
  EXPECT_EQ(support_union(loose), (std::vector<int>{0, 1, 2}));

  const auto and2 = build_constraints(parse_function("00 0\n01 0\n10 0\n11 1"));
  EXPECT_FALSE(max_weight(and2, 1).has_value());
  EXPECT_TRUE(support_union(and2).empty());
}

}  // namespace
}  // namespace oneq
