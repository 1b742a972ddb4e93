#include <gtest/gtest.h>

#include "compsum/identities.hpp"
#include "compsum/simplex.hpp"

namespace compsum {
namespace {

CountingPolynomial poly(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return CountingPolynomial(std::move(c), Var::t);
}

bool coefficientwise_le(const CountingPolynomial& a, const CountingPolynomial& b) {
  for (long k = 0; k <= std::max(a.degree(), b.degree()); ++k)
    if (a.coeff(k) > b.coeff(k)) return false;
  return true;
}

TEST(Histogram, Examples) {
  EXPECT_EQ(value_histogram({3, 4}, 2).counts[2], 4);
  EXPECT_EQ(value_histogram({3, 4}, 1).counts[0], 6);
  EXPECT_EQ(value_histogram({5, 7}, 3).counts[3], 18);
  EXPECT_THROW(value_histogram({3, 4}, 4), std::out_of_range);
  EXPECT_THROW(value_histogram({3, 1}, 1), std::invalid_argument);
}

TEST(Histogram, SumsToPointCount) {
  for (int N = 1; N <= 7; ++N)
    for (int n = N - 1; n <= 20; ++n)
      for (int d = 1; d <= N; ++d) {
        const OrderSimplexSpec spec{N, n};
        BigInt total = 0;
        for (const auto& c : value_histogram(spec, d).counts) total += c;
        EXPECT_EQ(total, spec.point_count()) << N << " " << n << " " << d;
      }
}

TEST(Histogram, ReversalSymmetry) {
  for (int N = 1; N <= 7; ++N)
    for (int n = N - 1; n <= 20; ++n)
      for (int d = 1; d <= N; ++d) {
        auto a = value_histogram({N, n}, d).counts, b = value_histogram({N, n}, N + 1 - d).counts;
        for (int v = 0; v <= n; ++v) EXPECT_EQ(a[v], b[n - v]);
      }
}

TEST(Histogram, MatchesPointListing) {
  const OrderSimplexSpec spec{4, 9};
  for (int d = 1; d <= 4; ++d) {
    std::vector<BigInt> counts(10, BigInt(0));
    for (const auto& p : simplex_points(spec)) counts[p[d - 1]] += 1;
    EXPECT_EQ(value_histogram(spec, d).counts, counts);
  }
}

TEST(Enumerators, Examples) {
  EXPECT_EQ(distinct_enumerator({3, 4}, 2), poly({1, 10, 33, 36}));
  EXPECT_EQ(distinct_enumerator({3, 4}, 1), poly({1, 10, 27, 18}));
  EXPECT_EQ(sparse_enumerator({3, 4}, 2), poly({1, 10, 9}));
  EXPECT_EQ(two_sparse_enumerator({3, 4}, 1), poly({1, 10, 9}));
}

TEST(Enumerators, LinearCoefficientCountsPoints) {
  for (int N = 1; N <= 6; ++N)
    for (int n = N - 1; n <= 15; ++n)
      for (int d = 1; d <= N; ++d)
        for (auto s : {Sparseness::distinct, Sparseness::sparse, Sparseness::two_sparse})
          EXPECT_EQ(enumerator({N, n}, d, s).coeff(1), Rational(OrderSimplexSpec{N, n}.point_count()));
}

TEST(Enumerators, SparseOfSpreadValuesIsDistinct) {
  // N = 1, n = 0: a single value
  EXPECT_EQ(sparse_enumerator({1, 0}, 1), distinct_enumerator({1, 0}, 1));
  // N = n + 1: one point, so one nonzero value
  EXPECT_EQ(sparse_enumerator({5, 4}, 3), distinct_enumerator({5, 4}, 3));
  EXPECT_EQ(sparse_enumerator({5, 4}, 3), poly({1, 1}));
}

TEST(Enumerators, TwoSparseClassSums) {
  for (int n = 5; n <= 20; ++n) {
    auto h = value_histogram({5, n}, 1).counts;
    for (int j = 0; 2 * j + 1 <= n; ++j) {
      const BigInt m = n - 2 * j - 2;
      EXPECT_EQ(h[2 * j] + h[2 * j + 1], (m * m * m * m - m * m) / 12) << n << " " << j;
    }
  }
}

TEST(Enumerators, PredicateImplicationOrder) {
  for (int N = 1; N <= 6; ++N)
    for (int n = N - 1; n <= 14; ++n)
      for (int d = 1; d <= N; ++d) {
        const OrderSimplexSpec spec{N, n};
        EXPECT_TRUE(coefficientwise_le(sparse_enumerator(spec, d), two_sparse_enumerator(spec, d)));
        EXPECT_TRUE(coefficientwise_le(two_sparse_enumerator(spec, d), distinct_enumerator(spec, d)));
      }
}

TEST(BruteForce, Examples) {
  EXPECT_EQ(brute_force_enumerator({3, 4}, 2, Sparseness::distinct, 3), poly({1, 10, 33, 36}));
  EXPECT_EQ(brute_force_enumerator({3, 4}, 2, Sparseness::sparse, 2), poly({1, 10, 9}));
  EXPECT_EQ(brute_force_enumerator({3, 4}, 2, Sparseness::distinct, 0), poly({1}));
  EXPECT_THROW(brute_force_enumerator({5, 12}, 1, Sparseness::distinct, 2), std::length_error);
}

TEST(BruteForce, AgreesOnThreeSimplex) {
  for (int n = 2; n <= 7; ++n)
    for (int d = 1; d <= 3; ++d)
      for (auto s : {Sparseness::distinct, Sparseness::sparse, Sparseness::two_sparse})
        EXPECT_EQ(brute_force_enumerator({3, n}, d, s, n + 1), enumerator({3, n}, d, s))
            << "n=" << n << " d=" << d << " " << sparseness_name(s);
}

TEST(BruteForce, AgreesOnFiveSimplexToThree) {
  for (int n = 4; n <= 8; ++n)
    for (int d = 1; d <= 5; ++d)
      for (auto s : {Sparseness::distinct, Sparseness::sparse, Sparseness::two_sparse})
        EXPECT_EQ(brute_force_enumerator({5, n}, d, s, 3), enumerator({5, n}, d, s).truncated(3))
            << "n=" << n << " d=" << d << " " << sparseness_name(s);
}

TEST(Thm1, FourAndThree) {
  auto v = check_thm1(4);
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(v.larger.coeff(2), 33);
  EXPECT_EQ(v.larger.coeff(3), 36);
  EXPECT_EQ(v.smaller.coeff(2), 27);
  EXPECT_EQ(v.smaller.coeff(3), 18);
  auto three = check_thm1(3);
  EXPECT_EQ(three.l_min, 2);
  EXPECT_EQ(three.l_max, 2);
  EXPECT_TRUE(three.holds);
  EXPECT_THROW(check_thm1(2), std::invalid_argument);
}

TEST(Thm1, StrictThroughThirty) {
  for (int n = 3; n <= 30; ++n) {
    auto v = check_thm1(n);
    EXPECT_TRUE(v.holds) << n;
    EXPECT_TRUE(v.vacuous.empty()) << n;
    EXPECT_EQ(static_cast<int>(v.strict.size()), n - 2) << n;
  }
}

TEST(Thm2, Examples) {
  auto v = check_thm2(4);
  EXPECT_EQ(v.sparse_y, poly({1, 10, 9}));
  EXPECT_EQ(v.two_sparse_x, poly({1, 10, 9}));
  EXPECT_TRUE(v.generating_functions_equal);
  EXPECT_TRUE(check_thm2(5).generating_functions_equal);
}

TEST(Thm2, HoldsThroughThirty) {
  for (int n = 3; n <= 30; ++n) {
    auto v = check_thm2(n);
    EXPECT_TRUE(v.generating_functions_equal) << n;
    EXPECT_TRUE(v.holds) << n;
    // wherever the sparse sets run out on both sides the comparison is empty
    for (int l : v.dominance.vacuous) EXPECT_GT(l, v.sparse_y.degree());
  }
}

// Sparse y-sets of S^3(n) correspond to compositions of n by {1,2}.
TEST(Thm2, SparseYIsTheOneTwoCompositionSum) {
  for (int n = 2; n <= 24; ++n) EXPECT_EQ(sparse_enumerator({3, n}, 2), lhs_id2(n)) << n;
}

TEST(Thm3, Examples) {
  EXPECT_TRUE(check_thm3(6).holds);
  auto five = check_thm3(5);
  EXPECT_EQ(five.l_min, 2);
  EXPECT_EQ(five.l_max, 2);
  EXPECT_THROW(check_thm3(4), std::invalid_argument);
  auto v = check_thm3(9);
  EXPECT_EQ(v.larger.coeff(1), v.smaller.coeff(1));
  EXPECT_EQ(v.larger.coeff(0), 1);
}

TEST(Thm3, HoldsThroughTwentyFive) {
  for (int n = 5; n <= 25; ++n) {
    auto v = check_thm3(n);
    EXPECT_TRUE(v.holds) << n;
    for (int l : v.vacuous) EXPECT_GT(l, v.larger.degree());
  }
}

TEST(Dominance, VacuousOnlyWhenBothVanish) {
  auto v = compare_dominance(poly({1, 4, 2}), poly({1, 4, 1}), 2, 4);
  EXPECT_EQ(v.strict, (std::vector<int>{2}));
  EXPECT_EQ(v.vacuous, (std::vector<int>{3, 4}));
  EXPECT_TRUE(v.holds);
  auto w = compare_dominance(poly({1, 4, 1}), poly({1, 4, 1, 1}), 2, 3);
  EXPECT_EQ(w.failed, (std::vector<int>{2, 3}));
  EXPECT_FALSE(w.holds);
}

TEST(Scan, PrefixDefinition) {
  EXPECT_EQ(dominance_prefix(poly({1, 5, 9, 4}), poly({1, 5, 8, 3})), 3);
  EXPECT_EQ(dominance_prefix(poly({1, 5, 8, 4}), poly({1, 5, 8, 3})), 1);
}

TEST(Scan, ThreeSimplexRowsMatchThm1) {
  auto rows = conjecture_scan({3, 3, 3, 10}, Sparseness::distinct);
  ASSERT_EQ(rows.size(), 8u);
  for (const auto& r : rows) {
    EXPECT_EQ(r.N, 3);
    EXPECT_EQ(r.d, 1);
    EXPECT_FALSE(r.in_conjecture_range);
    EXPECT_EQ(r.dominance_prefix, r.n - 1);
    auto v = check_thm1(r.n);
    EXPECT_EQ(r.inner, v.larger);
    EXPECT_EQ(r.outer, v.smaller);
  }
}

TEST(Scan, CellsAndFlags) {
  auto rows = conjecture_scan({3, 7, 3, 12}, Sparseness::distinct);
  bool saw_4_1_8 = false;
  for (const auto& r : rows) {
    EXPECT_GE(r.n, r.N);
    EXPECT_LE(2 * r.d, r.N - 1);
    EXPECT_EQ(r.in_conjecture_range, 2 * r.d < r.N - 2);
    EXPECT_EQ(r.digest.size(), 16u);
    if (r.N == 4 && r.d == 1 && r.n == 8) {
      saw_4_1_8 = true;
      EXPECT_EQ(r.digest, scan_cell(4, 1, 8, Sparseness::distinct).digest);
    }
  }
  EXPECT_TRUE(saw_4_1_8);
  EXPECT_TRUE(scan_cell(7, 2, 10, Sparseness::distinct).in_conjecture_range);
  EXPECT_FALSE(scan_cell(7, 3, 10, Sparseness::distinct).in_conjecture_range);
}

TEST(Scan, IndependentOfJobCount) {
  for (auto s : {Sparseness::distinct, Sparseness::sparse}) {
    auto one = conjecture_scan({3, 7, 3, 16}, s, 1);
    auto four = conjecture_scan({3, 7, 3, 16}, s, 4);
    ASSERT_EQ(one.size(), four.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
      EXPECT_EQ(one[i].digest, four[i].digest);
      EXPECT_EQ(one[i].dominance_prefix, four[i].dominance_prefix);
    }
  }
}

TEST(Scan, Guards) {
  EXPECT_THROW(conjecture_scan({2, 5, 3, 8}, Sparseness::distinct), std::invalid_argument);
  EXPECT_THROW(conjecture_scan({3, 13, 3, 8}, Sparseness::distinct), std::out_of_range);
  EXPECT_THROW(scan_cell(13, 1, 20, Sparseness::distinct), std::out_of_range);
}

TEST(Digest, Fnv1a) {
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
}

}  // namespace
}  // namespace compsum
