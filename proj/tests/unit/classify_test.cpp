#include <gtest/gtest.h>

#include <algorithm>

#include "generators.hpp"
#include "linear_system.hpp"
#include "oneq/catalog.hpp"
#include "oneq/classify.hpp"
#include "oneq/errors.hpp"

namespace oneq {
namespace {

PartialBooleanFunction total(int n, std::uint64_t code) {
  std::vector<PartialBooleanFunction::Entry> entries;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    entries.emplace_back(BitString(n, x), ((code >> x) & 1u) != 0);
  }
  return PartialBooleanFunction(n, std::move(entries));
}

TEST(MinDegree, Examples) {
  EXPECT_EQ(min_degree(parse_function("0 0\n1 1"), 4), 1);
  EXPECT_EQ(min_degree(parse_function("00 0\n01 0\n10 0\n11 1"), 4), 2);
  EXPECT_EQ(min_degree(parse_function("00 0\n01 1\n10 1\n11 0"), 4), 2);
  EXPECT_EQ(min_degree(parse_function("00 1\n11 1"), 4), 0);
  EXPECT_EQ(min_degree(parse_function("000 0\n001 1\n010 1\n011 1\n100 1\n101 1\n110 1\n111 1"), 2),
            std::nullopt);
}

TEST(MinDegree, MatchesMoebiusOnTotals) {
  for (int n = 1; n <= 3; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (1u << n)); ++code) {
      std::vector<int> truth(std::size_t{1} << n);
      for (std::size_t x = 0; x < truth.size(); ++x) truth[x] = static_cast<int>((code >> x) & 1u);
      EXPECT_EQ(min_degree(total(n, code), n), testing::moebius_degree(n, truth)) << n << ' ' << code;
    }
  }
}

TEST(LinearSystem, BareissAgreesWithRationals) {
  testing::Rng rng(37);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> dim(1, 7);
  for (int i = 0; i < 500; ++i) {
    detail::IntegerRows m(static_cast<std::size_t>(dim(rng)));
    const int cols = dim(rng);
    for (auto& row : m) {
      for (int j = 0; j <= cols; ++j) row.push_back(entry(rng));
    }
    const auto fast = detail::consistent_bareiss(m);
    ASSERT_TRUE(fast.has_value());
    EXPECT_EQ(*fast, detail::consistent_rational(m));
  }
  detail::IntegerRows huge{{std::int64_t{1} << 40, 1, 0}, {3, std::int64_t{1} << 40, 1}, {5, 7, 2}};
  EXPECT_FALSE(detail::consistent_bareiss(huge).has_value());
  EXPECT_EQ(detail::consistent(huge), detail::consistent_rational(huge));
}

TEST(IsOneQuery, Examples) {
  const auto yes = is_one_query(make_f1(2).function);
  EXPECT_EQ(yes.decision, Decision::one_query);
  ASSERT_TRUE(yes.certificate.has_value());
  EXPECT_EQ(yes.degree, 2);

  const auto no = is_one_query(parse_function("00 0\n01 0\n10 0\n11 1"));
  EXPECT_EQ(no.decision, Decision::not_one_query);
  ASSERT_TRUE(no.infeasibility.has_value());
  EXPECT_FALSE(no.infeasibility->trace.empty());

  const auto or3 = is_one_query(parse_function("000 0\n001 1\n010 1\n011 1\n100 1\n101 1\n110 1\n111 1"));
  EXPECT_EQ(or3.decision, Decision::not_one_query);
  EXPECT_TRUE(or3.rejected_by_degree);
  EXPECT_EQ(or3.degree, 3);
  EXPECT_TRUE(or3.infeasibility.has_value());

  const auto constant = is_one_query(parse_function("01 1"));
  EXPECT_EQ(constant.decision, Decision::one_query);
  EXPECT_NE(std::find(constant.notes.begin(), constant.notes.end(), "degenerate: constant"),
            constant.notes.end());
}

TEST(IsOneQuery, InvariantUnderIsomorphism) {
  testing::Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + i % 5;
    const auto f = testing::random_mixed(rng, n);
    const auto d = is_one_query(f, {.canonicalize = false}).decision;
    EXPECT_EQ(is_one_query(complement(f), {.canonicalize = false}).decision, d);
    EXPECT_EQ(is_one_query(apply(testing::random_isomorphism(rng, n), f), {.canonicalize = false}).decision, d);
  }
}

TEST(ScanTotal, CountsMatchCharacterization) {
  const std::size_t expected[] = {0, 4, 8, 14, 22};
  for (int n = 1; n <= 3; ++n) {
    const auto s = scan_total(n, {.threads = 1});
    EXPECT_EQ(s.examined, std::size_t{1} << (1u << n));
    EXPECT_EQ(s.one_query_functions, expected[n]) << n;
    EXPECT_EQ(total_one_query_characterization(n).size(), expected[n]);
    ASSERT_TRUE(s.characterization_holds.has_value());
    EXPECT_TRUE(*s.characterization_holds);
    EXPECT_EQ(s.degree_filter_exceptions, 0u);
  }
  EXPECT_THROW(scan_total(5), BudgetExceeded);
}

TEST(ScanPartial, SmallArities) {
  const auto s1 = scan_partial(1);
  EXPECT_EQ(s1.examined, 8u);
  EXPECT_EQ(s1.one_query_functions, 8u);

  const auto s2 = scan_partial(2);
  EXPECT_EQ(s2.examined, 80u);
  const auto f1 = canonical_form(make_f1(2).function);
  const auto and2 = canonical_form(parse_function("00 0\n01 0\n10 0\n11 1"));
  bool saw_f1 = false;
  bool saw_and = false;
  std::size_t members = 0;
  for (const auto& r : s2.representatives) {
    members += r.members;
    if (r.function == f1) saw_f1 = r.decision == Decision::one_query;
    if (r.function == and2) saw_and = r.decision == Decision::not_one_query;
    if (r.decision == Decision::one_query) {
      ASSERT_TRUE(r.certificate.has_value());
      EXPECT_TRUE(verify_certificate(r.function, *r.certificate));
    }
  }
  EXPECT_EQ(members, 80u);
  EXPECT_TRUE(saw_f1);
  EXPECT_TRUE(saw_and);
}

TEST(ScanPartial, ThreadCountDoesNotMatter) {
  const auto a = scan_partial(2, {.threads = 1});
  const auto b = scan_partial(2, {.threads = 4});
  EXPECT_EQ(a.one_query_functions, b.one_query_functions);
  ASSERT_EQ(a.representatives.size(), b.representatives.size());
  for (std::size_t i = 0; i < a.representatives.size(); ++i) {
    EXPECT_EQ(a.representatives[i].function, b.representatives[i].function);
    EXPECT_EQ(a.representatives[i].members, b.representatives[i].members);
  }
}

TEST(F4Search, Rediscovered) {
  EXPECT_TRUE(rediscover_f4());
  EXPECT_TRUE(one_query_without_extreme_isomorph(complement(make_f4().function)));
  EXPECT_FALSE(one_query_without_extreme_isomorph(make_f1(4).function));
  EXPECT_TRUE(has_extreme_isomorph(make_f1(4).function));
}

}  // namespace
}  // namespace oneq
