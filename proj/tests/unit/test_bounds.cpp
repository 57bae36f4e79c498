#include <gtest/gtest.h>

#include <cmath>

#include "subdiv/bounds.hpp"
#include "subdiv/families.hpp"
#include "subdiv/report_json.hpp"
#include "subdiv/subdivision.hpp"
#include "support/oracles.hpp"

using namespace subdiv;

namespace {

/// Pascal's triangle in BigInt, independent of the library's binomial.
BigInt pascal(int n, int k) {
  std::vector<BigInt> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<BigInt> next(row.size() + 1, 0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j] += row[j];
      next[j + 1] += row[j];
    }
    row = std::move(next);
  }
  return k < 0 || k > n ? BigInt(0) : row[static_cast<std::size_t>(k)];
}

BigInt repeated_product(long long base, int times) {
  BigInt r = 1;
  for (int i = 0; i < times; ++i) r *= base;
  return r;
}

} // namespace

TEST(MinDegree, Examples) {
  EXPECT_EQ(min_degree_lower_bound(4, 10).exact, 5);
  EXPECT_EQ(min_degree_lower_bound(3, 7).exact, 7);
  EXPECT_NEAR(min_degree_lower_bound(4, 10).closed_form, 2.0 * std::sqrt(10.0) / std::exp(1.0), 1e-12);
  EXPECT_NEAR(min_degree_lower_bound(4, 10).closed_form, 2.327, 1e-3);
  EXPECT_THROW(min_degree_lower_bound(2, 1), DomainError);
  EXPECT_THROW(min_degree_lower_bound(4, 0), DomainError);
}

TEST(MinDegree, ExactIsSmallestAdequateDegree) {
  for (int l = 3; l <= 7; ++l)
    for (long long t = 1; t <= 300; t += 7) {
      const long d = min_degree_lower_bound(l, t).exact;
      EXPECT_GE(pascal(static_cast<int>(d), l - 2), BigInt(t));
      EXPECT_LT(pascal(static_cast<int>(d - 1), l - 2), BigInt(t));
    }
}

TEST(MinDegree, StrictlyExceedsClosedForm) {
  for (int l = 3; l <= 6; ++l)
    for (long long t : {1LL, 2LL, 10LL, 100LL, 1000LL, 123457LL}) {
      const auto b = min_degree_lower_bound(l, t);
      const auto exact_cmp = exceeds_closed_form(b.exact, l, t);
      ASSERT_TRUE(exact_cmp.has_value());
      EXPECT_TRUE(*exact_cmp) << l << "," << t;
      EXPECT_GT(static_cast<double>(b.exact), b.closed_form);
    }
}

TEST(MinDegree, ExactComparisonRejectsSmallDegrees) {
  // 1 vs e^{-1} * 2 * sqrt(10): false; the comparison must not be one-sided.
  EXPECT_EQ(exceeds_closed_form(1, 4, 10), std::optional<bool>(false));
  EXPECT_EQ(exceeds_closed_form(3, 4, 10), std::optional<bool>(true));
}

TEST(Komlos, ThresholdAndOrder) {
  EXPECT_DOUBLE_EQ(ko_threshold(23), 230.0);
  EXPECT_EQ(subdivision_order(10), 4);
  EXPECT_EQ(subdivision_order(0), 0);
  for (double avg = 0; avg < 200; avg += 0.37) {
    const long d = subdivision_order(avg);
    EXPECT_LE(10.0 * d * d, 23.0 * avg + 1e-9);
    EXPECT_GT(10.0 * (d + 1) * (d + 1), 23.0 * avg);
  }
  EXPECT_THROW(subdivision_order(-1), DomainError);
}

TEST(CliqueFamilyBounds, Examples) {
  EXPECT_NEAR(bound_i_log2(4, 16), 2.0, 1e-12);
  EXPECT_NEAR(bound_i_log2(5, 729), 3.0, 1e-12);
  EXPECT_NEAR(eq2_d(4, 1), std::sqrt(46.0 / (10.0 * std::exp(1.0))), 1e-12);
  EXPECT_NEAR(eq2_d(4, 1), 1.301, 1e-3);
  EXPECT_THROW(bound_i_log2(3, 4), DomainError);
  EXPECT_THROW(eq2_d(4, 0), DomainError);
}

TEST(PolynomialBounds, Examples) {
  EXPECT_EQ(lemma5_bound(4, 5, 4), BigInt(16) * repeated_product(5, 13));
  EXPECT_EQ(bound_ii(4, 5, 3), BigInt(16) * repeated_product(5, 13));
  EXPECT_EQ(bound_ii(3, 3, 1), BigInt(8) * repeated_product(3, 9));
  for (int l = 3; l <= 6; ++l)
    for (int e = 0; e <= 12; e += 3)
      for (long long t = 0; t <= 9; ++t) {
        EXPECT_EQ(bound_ii(l, e, t), repeated_product(2, l) * repeated_product(t + 2, e + 2 * l));
        EXPECT_EQ(lemma5_bound(l, e, t + 1), bound_ii(l, e, t));
      }
  EXPECT_THROW(bound_ii(-1, 0, 0), DomainError);
}

TEST(PolynomialBounds, SubsetCountIsBelowPolynomialBound) {
  for (int l = 3; l <= 6; ++l)
    for (int e = l; e <= l * (l - 1) / 2; ++e)
      for (long long b = 0; b <= 12; ++b) {
        BigInt direct = 0;
        for (int i = 0; i <= 2 * l + e; ++i) direct += pascal(static_cast<int>(b), i);
        EXPECT_EQ(lemma5_subset_count(l - 2, b, l, e), repeated_product(2, l - 2) * direct);
        EXPECT_LE(lemma5_subset_count(l, b, l, e), lemma5_bound(l, e, b));
      }
}

TEST(BookBounds, ExponentIdentity) {
  EXPECT_EQ(kminus_exponent_identity(4), (std::pair<long, long>{2, 2}));
  EXPECT_EQ(kminus_exponent_identity(6), (std::pair<long, long>{7, 7}));
  for (int l = 4; l <= 50; ++l) {
    const auto [lhs, rhs] = kminus_exponent_identity(l);
    EXPECT_EQ(lhs, rhs) << l;
    EXPECT_EQ(lhs, static_cast<long>(oracle::binom(l, 2)) - 1 - 2 * l + 5);
  }
  EXPECT_NEAR(bound_iii_exponent(4, 0.1), 1.6, 1e-12);
  EXPECT_THROW(bound_iii_exponent(4, 0.5), DomainError);
  EXPECT_THROW(bound_iii_exponent(3, 0.1), DomainError);
}

TEST(Counts, Examples) {
  EXPECT_EQ(complete_count(3, 5), 16);
  EXPECT_EQ(komlos_cycle_count(4), 16);
  EXPECT_EQ(complete_count(4, 4), 1);
  EXPECT_EQ(theorem_i_count_lower(4, 3), 5);
  EXPECT_EQ(theorem_i_count_lower(5, 4), 6);
  EXPECT_EQ(theorem_i_count_lower(3, 3), 1);
  EXPECT_THROW(theorem_i_count_lower(3, 4), DomainError);
  EXPECT_THROW(komlos_cycle_count(1), DomainError);
}

TEST(Counts, KomlosEqualsTriangleCompleteCount) {
  for (int d = 2; d <= 30; ++d) EXPECT_EQ(complete_count(3, d + 1), komlos_cycle_count(d)) << d;
}

TEST(Counts, CompleteCountMatchesEnumeration) {
  for (int r = 3; r <= 6; ++r)
    for (int l = 3; l <= r; ++l) {
      BigInt direct = 0;
      for (int i = l; i <= r; ++i) direct += pascal(r, i);
      EXPECT_EQ(complete_count(l, r), direct);
      EXPECT_EQ(count_distinguishable(complete_graph(r), Pattern::complete(l)), direct) << l << "," << r;
    }
}

TEST(Counts, CliqueFamilyLowerMatchesFamily) {
  for (int d = 2; d <= 6; ++d)
    for (int l = 2; l <= d; ++l) {
      std::vector<int> vs(static_cast<std::size_t>(d));
      std::iota(vs.begin(), vs.end(), 0);
      const auto fam = theorem_i_family(complete_graph(d), trivial_clique_witness(vs), l);
      EXPECT_EQ(theorem_i_count_lower(d, l), BigInt(fam.size())) << d << "," << l;
    }
}

TEST(Report, ExactAndLogFallback) {
  const auto small = integer_report("x", {{"l", 4}}, BigInt(12345), BoundSide::upper);
  EXPECT_TRUE(small.exact());
  EXPECT_EQ(std::get<BigInt>(small.value), 12345);
  const auto huge = integer_report("y", {}, power(BigInt(2), 1030), BoundSide::lower);
  EXPECT_FALSE(huge.exact());
  EXPECT_TRUE(huge.value_is_log2);
  EXPECT_NEAR(std::get<double>(huge.value), 1030.0, 1e-9);
  const auto edge = integer_report("z", {}, power(BigInt(2), 1023), BoundSide::lower);
  EXPECT_TRUE(edge.exact());
}

TEST(Report, JsonShape) {
  auto r = integer_report("bound_ii", {{"ell", 4.0}, {"t", 3.0}}, bound_ii(4, 5, 3), BoundSide::upper);
  r.compared_against = BigInt(7);
  const Json j = to_json(r);
  EXPECT_EQ(j["name"], "bound_ii");
  EXPECT_EQ(j["side"], "upper");
  EXPECT_EQ(j["value"], "19531250000");
  EXPECT_EQ(j["compared_against"], "7");
  EXPECT_FALSE(j.contains("asymptotic"));
  EXPECT_EQ(j["inputs"]["ell"], 4);

  const Json big = to_json(integer_report("b", {}, power(BigInt(3), 700), BoundSide::lower));
  EXPECT_TRUE(big.contains("log2_value"));
  EXPECT_FALSE(big.contains("value"));

  const Json real = to_json(real_report("eq2_d", {}, 1.5, BoundSide::lower, true));
  EXPECT_EQ(real["value"], 1.5);
  EXPECT_EQ(real["asymptotic"], true);
}
