#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "hypertrees/counting.hpp"
#include "hypertrees/errors.hpp"
#include "hypertrees/oracle.hpp"

namespace hypertrees {
namespace {

using Ints = std::vector<int>;

TEST(EnumerateHypertrees, Examples) {
  const auto one = enumerate_hypertrees(1, 1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].edges(), (std::vector<Hyperedge>{{0, 1}}));
  EXPECT_EQ(enumerate_hypertrees(3, 2).size(), 12u);
  EXPECT_EQ(enumerate_hypertrees(4, 4).size(), 125u);
}

TEST(EnumerateHypertrees, CountsMatchTotalsStrictlyOrdered) {
  for (int n = 1; n <= 5; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto trees = enumerate_hypertrees(n, k);
      EXPECT_EQ(BigCount(trees.size()), count_hypertrees_total(n, k));
      EXPECT_TRUE(std::adjacent_find(trees.begin(), trees.end(), [](const auto& x, const auto& y) {
                    return !(x.edges() < y.edges());
                  }) == trees.end());
      for (const auto& t : trees) {
        EXPECT_EQ(t.n(), n);
        EXPECT_EQ(t.k(), k);
      }
    }
  }
}

TEST(EnumerateHypertrees, SingleEdgeFirstForKOne) {
  const auto trees = enumerate_hypertrees(5, 1);
  ASSERT_EQ(trees.size(), 1u);
  EXPECT_EQ(trees[0].edges(), (std::vector<Hyperedge>{{0, 1, 2, 3, 4, 5}}));
}

TEST(EnumerateHypertrees, Errors) {
  EXPECT_THROW(enumerate_hypertrees(6, 3), Error);
  try {
    enumerate_hypertrees(6, 3);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BoundExceeded);
  }
  OracleBounds wider;
  wider.max_n = 6;
  EXPECT_EQ(BigCount(enumerate_hypertrees(6, 2, wider).size()), count_hypertrees_total(6, 2));
  try {
    enumerate_hypertrees(3, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ProfileMismatch);
  }
}

TEST(EnumerateBipartite, Examples) {
  EXPECT_EQ(enumerate_bipartite_trees(0, 0).size(), 1u);
  EXPECT_EQ(enumerate_bipartite_trees(1, 1).size(), 4u);
  EXPECT_EQ(enumerate_bipartite_trees(2, 1).size(), 12u);
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      const auto trees = enumerate_bipartite_trees(a, b);
      EXPECT_EQ(BigCount(trees.size()), count_bipartite_total(a, b));
      EXPECT_TRUE(std::is_sorted(trees.begin(), trees.end()));
      EXPECT_EQ(std::set<BipartiteTree>(trees.begin(), trees.end()).size(), trees.size());
    }
  }
  try {
    enumerate_bipartite_trees(4, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BoundExceeded);
  }
}

TEST(ProfileCensus, SmallCases) {
  const EnumerationReport r = profile_census(3, 2);
  EXPECT_EQ(r.total, 12);
  const std::map<ProfileKey, BigCount> expected{
      {{{2, 1}, {0, 0, 0, 1}}, 3},
      {{{2, 1}, {0, 0, 1, 0}}, 3},
      {{{2, 1}, {0, 1, 0, 0}}, 3},
      {{{2, 1}, {1, 0, 0, 0}}, 3},
  };
  EXPECT_EQ(r.per_profile, expected);

  const EnumerationReport single = profile_census(1, 1);
  EXPECT_EQ(single.total, 1);
  EXPECT_EQ(single.per_profile, (std::map<ProfileKey, BigCount>{{{{1}, {0, 0}}, 1}}));
}

TEST(ProfileCensus, AgreesWithProfileOfEveryTree) {
  for (int n = 1; n <= 5; ++n) {
    for (int k = 1; k <= n; ++k) {
      std::map<ProfileKey, BigCount> by_hand;
      for (const auto& t : enumerate_hypertrees(n, k)) {
        Ints lambda;
        for (const auto& e : t.edges()) lambda.push_back(static_cast<int>(e.size()) - 1);
        std::sort(lambda.rbegin(), lambda.rend());
        Ints mu;
        for (int d : t.hypergraph().degrees()) mu.push_back(d - 1);
        by_hand[{lambda, mu}] += 1;
      }
      const EnumerationReport r = profile_census(n, k);
      EXPECT_EQ(r.per_profile, by_hand);
    }
  }
}

TEST(BipartiteCensus, SmallCases) {
  const EnumerationReport r = bipartite_census(1, 1);
  EXPECT_EQ(r.family, "bipartite");
  EXPECT_EQ(r.total, 4);
  for (const auto& [key, count] : r.per_profile) EXPECT_EQ(count, 1);
  EXPECT_EQ(r.per_profile.size(), 4u);
}

TEST(WeightedCensus, Examples) {
  EXPECT_EQ(weighted_census(3, 2), 12);
  EXPECT_EQ(weighted_census(4, 2), 55);
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(weighted_census(n, n), count_hypertrees_total(n, n));
}

TEST(SetPartitionsAndWords, Counts) {
  for (int n = 1; n <= 7; ++n) {
    for (int k = 1; k <= n; ++k) {
      std::set<SetPartition> seen;
      for_each_set_partition(n, k, [&](const SetPartition& p) {
        EXPECT_EQ(p.k(), k);
        seen.insert(p);
      });
      EXPECT_EQ(BigCount(seen.size()), stirling2(n, k));
    }
  }
  std::vector<Ints> words;
  for_each_word(2, 3, [&](const Ints& w) { words.push_back(w); });
  ASSERT_EQ(words.size(), 9u);
  EXPECT_TRUE(std::is_sorted(words.begin(), words.end()));
  EXPECT_EQ(words.front(), (Ints{0, 0}));
  EXPECT_EQ(words.back(), (Ints{2, 2}));
  words.clear();
  for_each_word(0, 3, [&](const Ints& w) { words.push_back(w); });
  EXPECT_EQ(words, (std::vector<Ints>{{}}));
}

}  // namespace
}  // namespace hypertrees
