#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "compsum/composition.hpp"
#include "compsum/random.hpp"

namespace compsum {
namespace {

using Parts = std::vector<int>;

std::vector<Parts> listing(int n, PartFilter filter) {
  std::vector<Parts> out;
  for (const auto& c : enumerate(n, std::move(filter))) out.push_back(c.parts());
  return out;
}

long count(int n, PartFilter filter) {
  long k = 0;
  for_each_composition(n, filter, [&](const Composition&) { ++k; });
  return k;
}

TEST(Composition, Validation) {
  EXPECT_THROW(Composition(std::vector<int>{}), std::invalid_argument);
  EXPECT_THROW(Composition({1, 0, 2}), std::invalid_argument);
  Composition c({2, 1, 3});
  EXPECT_EQ(c.weight(), 6);
  EXPECT_EQ(c.partial_sums(), (Parts{2, 3, 6}));
  EXPECT_EQ(c.reversed().parts(), (Parts{3, 1, 2}));
  EXPECT_EQ(c.reversed().reversed(), c);
  EXPECT_EQ(to_string(c), "(2,1,3)");
}

TEST(Enumerate, AllCompositionsOfThreeInLexOrder) {
  EXPECT_EQ(listing(3, PartFilter::all()), (std::vector<Parts>{{1, 1, 1}, {1, 2}, {2, 1}, {3}}));
}

TEST(Enumerate, PartsOneTwoOfFour) {
  EXPECT_EQ(listing(4, PartFilter::in_set({1, 2})),
            (std::vector<Parts>{{1, 1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {2, 1, 1}, {2, 2}}));
}

TEST(Enumerate, OddPartsOfFive) {
  EXPECT_EQ(listing(5, PartFilter::odd()),
            (std::vector<Parts>{{1, 1, 1, 1, 1}, {1, 1, 3}, {1, 3, 1}, {3, 1, 1}, {5}}));
}

TEST(Enumerate, RejectsNonPositive) {
  EXPECT_THROW(enumerate(0), std::invalid_argument);
  EXPECT_THROW(enumerate(-3), std::invalid_argument);
}

TEST(Enumerate, InfeasibleFilterGivesEmptyStream) {
  EXPECT_EQ(count(3, PartFilter::in_set({2})), 0);
  EXPECT_EQ(count(4, PartFilter::in_set({2})), 1);
}

TEST(Enumerate, StreamIsStrictlyIncreasing) {
  std::vector<Composition> seen;
  for (const auto& c : enumerate(9)) seen.push_back(c);
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
  EXPECT_EQ(std::adjacent_find(seen.begin(), seen.end()), seen.end());
}

TEST(Enumerate, CountIsPowerOfTwo) {
  for (int n = 1; n <= 20; ++n) EXPECT_EQ(count(n, PartFilter::all()), 1L << (n - 1)) << "n=" << n;
}

TEST(Enumerate, OneTwoCountsAreFibonacci) {
  long f1 = 1, f2 = 2;
  EXPECT_EQ(count(1, PartFilter::in_set({1, 2})), f1);
  EXPECT_EQ(count(2, PartFilter::in_set({1, 2})), f2);
  for (int n = 3; n <= 25; ++n) {
    long f = f1 + f2;
    EXPECT_EQ(count(n, PartFilter::in_set({1, 2})), f) << "n=" << n;
    f1 = f2;
    f2 = f;
  }
}

TEST(Enumerate, OddCountMatchesOneTwoCount) {
  for (int n = 2; n <= 22; ++n) EXPECT_EQ(count(n, PartFilter::odd()), count(n - 1, PartFilter::in_set({1, 2})));
}

TEST(Weights, SWeight) {
  EXPECT_EQ(s_weight(Composition({5})), 1);
  EXPECT_EQ(s_weight(Composition({1, 1, 1})), 2);
  EXPECT_EQ(s_weight(Composition({2, 1, 1})), 6);
  EXPECT_EQ(reversed_s_weight(Composition({2, 1, 1})), s_weight(Composition({1, 1, 2})));
}

TEST(Weights, ReversedWeightIsWeightOfReverse) {
  for (int n = 1; n <= 10; ++n)
    for_each_composition(n, PartFilter::all(), [](const Composition& c) {
      EXPECT_EQ(reversed_s_weight(c), s_weight(c.reversed()));
    });
}

TEST(LeftSums, Examples) {
  EXPECT_EQ(left_sum_set(Composition({1, 3})), (Parts{1}));
  EXPECT_TRUE(left_sum_set(Composition({4})).empty());
  EXPECT_EQ(left_sum_set(Composition({1, 1, 2})), (Parts{1, 2}));
}

TEST(LeftSums, DetermineTheComposition) {
  for (int n = 1; n <= 12; ++n)
    for_each_composition(n, PartFilter::all(), [n](const Composition& c) {
      EXPECT_EQ(from_left_sums(left_sum_set(c), n), c);
    });
}

TEST(Complement, Examples) {
  EXPECT_EQ(complement(Composition({1, 3})).parts(), (Parts{2, 1, 1}));
  EXPECT_EQ(complement(Composition({5})).parts(), (Parts{1, 1, 1, 1, 1}));
  EXPECT_EQ(complement(Composition({1, 1, 1})).parts(), (Parts{3}));
}

TEST(Complement, IsAnInvolution) {
  FixedSeedRng rng(kDefaultSeed);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng.uniform(1, 30));
    Parts parts;
    for (int left = n; left > 0;) {
      int p = static_cast<int>(rng.uniform(1, left));
      parts.push_back(p);
      left -= p;
    }
    Composition c(parts);
    EXPECT_EQ(complement(complement(c)), c);
  }
}

TEST(OddBijection, Examples) {
  EXPECT_EQ(odd_bijection(Composition({1, 2, 1})).parts(), (Parts{1, 3, 1}));
  EXPECT_EQ(odd_bijection(Composition({1})).parts(), (Parts{1, 1}));
  EXPECT_EQ(odd_bijection(Composition({2, 2})).parts(), (Parts{5}));
  EXPECT_THROW(odd_bijection(Composition({3})), std::invalid_argument);
}

// Absorb the 2's right to left instead: each run of 2's joins the nearest 1
// on its left. Disjoint absorptions make the order irrelevant.
Composition odd_bijection_right_to_left(const Composition& c) {
  Parts seq{1};
  seq.insert(seq.end(), c.parts().begin(), c.parts().end());
  Parts out;
  int pending = 0;
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    if (*it == 2) {
      pending += 2;
    } else {
      out.push_back(1 + pending);
      pending = 0;
    }
  }
  std::reverse(out.begin(), out.end());
  return Composition(out);
}

TEST(OddBijection, OrderIndependent) {
  for (int m = 1; m <= 14; ++m)
    for_each_composition(m, PartFilter::in_set({1, 2}), [](const Composition& c) {
      EXPECT_EQ(odd_bijection(c), odd_bijection_right_to_left(c)) << to_string(c);
    });
}

TEST(OddBijection, RoundTripAndBijectivity) {
  for (int m = 1; m <= 14; ++m) {
    std::set<Composition> images;
    for_each_composition(m, PartFilter::in_set({1, 2}), [&](const Composition& c) {
      auto odd = odd_bijection(c);
      EXPECT_EQ(odd.weight(), m + 1);
      for (int p : odd.parts()) EXPECT_EQ(p % 2, 1);
      EXPECT_EQ(odd_bijection_inverse(odd), c);
      images.insert(odd);
    });
    EXPECT_EQ(static_cast<long>(images.size()), count(m + 1, PartFilter::odd()));
    for_each_composition(m + 1, PartFilter::odd(), [](const Composition& c) {
      EXPECT_EQ(odd_bijection(odd_bijection_inverse(c)), c);
    });
  }
}

// Classical recurrences: c(n,l) = c(n-1,l-1) + (n-1) c(n-1,l), S(n,l) = S(n-1,l-1) + l S(n-1,l).
std::vector<std::vector<BigInt>> stirling_triangle(StirlingKind kind, int n_max) {
  std::vector<std::vector<BigInt>> t(n_max + 1, std::vector<BigInt>(n_max + 1, BigInt(0)));
  t[0][0] = 1;
  for (int n = 1; n <= n_max; ++n)
    for (int l = 1; l <= n; ++l)
      t[n][l] = t[n - 1][l - 1] + (kind == StirlingKind::first ? n - 1 : l) * t[n - 1][l];
  return t;
}

TEST(Stirling, Examples) {
  EXPECT_EQ(stirling_via_compositions(StirlingKind::first, 3, 2), 3);
  EXPECT_EQ(stirling_via_compositions(StirlingKind::second, 3, 2), 3);
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(stirling_via_compositions(StirlingKind::first, n, n), 1);
    EXPECT_EQ(stirling_via_compositions(StirlingKind::second, n, n), 1);
  }
  EXPECT_THROW(stirling_via_compositions(StirlingKind::first, 3, 4), std::out_of_range);
}

TEST(Stirling, MatchesTriangleRecurrences) {
  for (auto kind : {StirlingKind::first, StirlingKind::second}) {
    auto t = stirling_triangle(kind, 10);
    for (int n = 1; n <= 10; ++n)
      for (int l = 1; l <= n; ++l)
        EXPECT_EQ(stirling_via_compositions(kind, n, l), t[n][l]) << "n=" << n << " l=" << l;
  }
}

}  // namespace
}  // namespace compsum
