#include "gaussdeg/errors.hpp"
#include "gaussdeg/partition.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <set>

using namespace gaussdeg;

TEST(Partition, CanonicalFormDropsTrailingZeros) {
  Partition p{2, 1, 0, 0};
  EXPECT_EQ(p, (Partition{2, 1}));
  EXPECT_EQ(p.length(), 2);
  EXPECT_EQ(p.weight(), 3);
  EXPECT_EQ(p.padded(4), (std::vector<int>{2, 1, 0, 0}));
  EXPECT_THROW(p.padded(1), ParameterError);
  EXPECT_EQ(Partition{}.padded(0), std::vector<int>{});
}

TEST(Partition, RejectsInvalidSequences) {
  EXPECT_THROW((Partition{1, 2}), ParameterError);
  EXPECT_THROW((Partition{2, -1}), ParameterError);
  EXPECT_THROW((Partition{0, 1}), ParameterError);
}

TEST(Partition, Conjugate) {
  EXPECT_EQ((Partition{3, 1}).conjugate(), (Partition{2, 1, 1}));
  EXPECT_EQ(Partition::rectangle(2, 3).conjugate(), Partition::rectangle(3, 2));
  EXPECT_EQ(Partition{}.conjugate(), Partition{});
}

TEST(EnumeratePartitions, Examples) {
  EXPECT_EQ(enumerate_partitions(0, 5), std::vector<Partition>{Partition{}});
  EXPECT_EQ(enumerate_partitions(3, 2), (std::vector<Partition>{Partition{3}, Partition{2, 1}}));
  EXPECT_EQ(enumerate_partitions(2, 4), (std::vector<Partition>{Partition{2}, Partition{1, 1}}));
  EXPECT_TRUE(enumerate_partitions(3, 0).empty());
  EXPECT_EQ(enumerate_partitions(0, 0), std::vector<Partition>{Partition{}});
  EXPECT_EQ(enumerate_partitions(4, 4),
            (std::vector<Partition>{Partition{4}, Partition{3, 1}, Partition{2, 2}, Partition{2, 1, 1},
                                    Partition{1, 1, 1, 1}}));
}

TEST(EnumeratePartitions, MatchesSortedCompositionsAndIsReverseLex) {
  for (int total = 0; total <= 14; ++total) {
    const auto listed = enumerate_partitions(total, total);
    std::set<std::vector<int>> seen;
    for (std::size_t i = 0; i < listed.size(); ++i) {
      EXPECT_EQ(listed[i].weight(), total);
      EXPECT_TRUE(seen.insert(listed[i].parts()).second) << "duplicate " << listed[i].to_string();
      if (i > 0) EXPECT_GT(listed[i - 1], listed[i]);
    }
    EXPECT_EQ(seen, oracle::partitions_from_compositions(total)) << "total " << total;
  }
}

TEST(EnumeratePartitions, RespectsMaxParts) {
  for (int total = 0; total <= 10; ++total) {
    for (int parts = 0; parts <= 6; ++parts) {
      std::size_t expected = 0;
      for (const auto& p : oracle::partitions_from_compositions(total))
        if (static_cast<int>(p.size()) <= parts) ++expected;
      const auto listed = enumerate_partitions(total, parts);
      EXPECT_EQ(listed.size(), expected);
      for (const auto& p : listed) EXPECT_LE(p.length(), parts);
    }
  }
}

TEST(AddRectangle, Examples) {
  EXPECT_EQ(add_rectangle(Partition{2}, 2, 1), (Partition{3, 1}));
  EXPECT_EQ(add_rectangle(Partition{1, 1}, 2, 1), (Partition{2, 2}));
  EXPECT_EQ(add_rectangle(Partition{}, 3, 0), Partition{});
  EXPECT_THROW(add_rectangle(Partition{1, 1, 1}, 2, 1), ParameterError);
}

TEST(SytCount, Examples) {
  EXPECT_EQ(syt_count_hook(Partition{3, 1}), 3);
  EXPECT_EQ(syt_count_hook(Partition{2, 2}), 2);
  EXPECT_EQ(syt_count_hook(Partition{2, 1}), 2);
  EXPECT_EQ(syt_count_hook(Partition{}), 1);
  for (int k = 0; k <= 20; ++k) EXPECT_EQ(syt_count_hook(Partition{k}), 1);
  EXPECT_EQ(syt_count_bruteforce(Partition{3, 1}), 3);
  EXPECT_EQ(syt_count_bruteforce(Partition{}), 1);
  EXPECT_EQ(syt_count_bruteforce(Partition{2, 2, 1}), 5);
}

TEST(SytCount, BruteForceCap) {
  EXPECT_THROW(syt_count_bruteforce(Partition{7, 6}), SizeError);
  EXPECT_EQ(syt_count_bruteforce(Partition{7, 6}, 13), syt_count_hook(Partition{7, 6}));
}

TEST(SytCount, CapFromEnvironment) {
  ::unsetenv("GAUSSDEG_BRUTE_CAP");
  EXPECT_EQ(brute_force_cap_from_env(), kDefaultBruteForceCap);
  ::setenv("GAUSSDEG_BRUTE_CAP", "5", 1);
  EXPECT_EQ(brute_force_cap_from_env(), 5);
  ::setenv("GAUSSDEG_BRUTE_CAP", "junk", 1);
  EXPECT_EQ(brute_force_cap_from_env(), kDefaultBruteForceCap);
  ::unsetenv("GAUSSDEG_BRUTE_CAP");
}

TEST(SytCount, HookFormulaAgreesWithOraclesUpToWeight10) {
  for (int w = 0; w <= 10; ++w) {
    for (const Partition& lam : enumerate_partitions(w, w)) {
      const BigInt f = syt_count_hook(lam);
      EXPECT_EQ(f, syt_count_bruteforce(lam)) << lam.to_string();
      EXPECT_EQ(f, oracle::hook_product_count(lam.parts())) << lam.to_string();
    }
  }
}

TEST(SytCount, SumOfSquaresIsFactorial) {
  for (int k = 0; k <= 10; ++k) {
    BigInt sum = 0;
    for (const Partition& lam : enumerate_partitions(k, k)) {
      const BigInt f = syt_count_hook(lam);
      sum += f * f;
    }
    EXPECT_EQ(sum, factorial(k)) << "k = " << k;
  }
}

TEST(SytCount, PaddingAndConjugateInvariance) {
  for (int w = 0; w <= 10; ++w) {
    for (const Partition& lam : enumerate_partitions(w, w)) {
      const BigInt f = syt_count_hook(lam);
      for (int extra = 1; extra <= 3; ++extra) EXPECT_EQ(syt_count_hook(lam, lam.length() + extra), f);
      EXPECT_EQ(syt_count_hook(lam.conjugate()), f) << lam.to_string();
    }
  }
  for (int r = 1; r <= 8; ++r)
    for (int d = 0; d <= r; ++d)
      EXPECT_EQ(syt_count_hook(Partition::rectangle(d, r - d)), syt_count_hook(Partition::rectangle(r - d, d)));
}

TEST(SytCount, FrozenLargerShapes) {
  // Recursive corner-removal counts, computed outside this library.
  EXPECT_EQ(syt_count_hook(Partition{4, 2}), 9);
  EXPECT_EQ(syt_count_hook(Partition{3, 3}), 5);
}
