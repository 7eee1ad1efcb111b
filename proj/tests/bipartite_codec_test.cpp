#include <gtest/gtest.h>

#include <algorithm>
#include <queue>
#include <set>

#include "hypertrees/bipartite_codec.hpp"
#include "hypertrees/counting.hpp"
#include "hypertrees/errors.hpp"
#include "hypertrees/oracle.hpp"
#include "hypertrees/sampling.hpp"

namespace hypertrees {
namespace {

BipartiteTree bip(int a, int b, std::vector<BipartiteEdge> edges) {
  return validate_bipartite_tree(a, b, std::move(edges));
}

BipartiteTree star(int b) {
  std::vector<BipartiteEdge> edges;
  for (int j = 0; j <= b; ++j) edges.emplace_back(0, j);
  return bip(0, b, edges);
}

ErrorKind decode_error(const BipartiteCode& code) {
  try {
    decode_bipartite(code);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::MalformedInput;
}

// ---------------------------------------------------------------------------
// Slow reference for the second word: builds each forest explicitly as an
// edge list and finds its components by breadth-first search.

struct Rooted {
  std::vector<int> parent_of_u;               // p(u_i), -1 for u_0
  std::vector<int> parent_of_v;               // p(v_j)
  std::vector<std::vector<int>> children_of;  // children of u_i
};

Rooted root_at_u0(const BipartiteTree& t) {
  const int a = t.a();
  const int b = t.b();
  // Vertices: u_i -> i, v_j -> a + 1 + j.
  std::vector<std::vector<int>> adj(a + b + 2);
  for (const auto& [i, j] : t.edges()) {
    adj[i].push_back(a + 1 + j);
    adj[a + 1 + j].push_back(i);
  }
  std::vector<int> parent(a + b + 2, -2);
  std::queue<int> q;
  parent[0] = -1;
  q.push(0);
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    for (int y : adj[x])
      if (parent[y] == -2) parent[y] = x, q.push(y);
  }
  Rooted r;
  r.children_of.resize(a + 1);
  for (int i = 0; i <= a; ++i) r.parent_of_u.push_back(i == 0 ? -1 : parent[i] - a - 1);
  for (int j = 0; j <= b; ++j) {
    r.parent_of_v.push_back(parent[a + 1 + j]);
    r.children_of[parent[a + 1 + j]].push_back(j);
  }
  return r;
}

std::vector<int> reference_w(const BipartiteTree& t) {
  const Rooted r = root_at_u0(t);
  return {r.parent_of_u.begin() + 1, r.parent_of_u.end()};
}

std::vector<int> reference_w_prime(const BipartiteTree& t) {
  const int a = t.a();
  const int b = t.b();
  const Rooted r = root_at_u0(t);
  std::vector<int> word(b, -1);
  for (int c = a; c >= 1; --c) {
    // F_c: parent edges of u_1..u_a and child edges of u_{c+1}..u_a.
    std::vector<std::vector<int>> adj(a + b + 2);
    std::vector<bool> has_parent(a + b + 2, false);
    auto link = [&](int i, int j, bool v_is_child) {
      adj[i].push_back(a + 1 + j);
      adj[a + 1 + j].push_back(i);
      has_parent[v_is_child ? a + 1 + j : i] = true;
    };
    for (int i = 1; i <= a; ++i) link(i, r.parent_of_u[i], false);
    for (int i = c + 1; i <= a; ++i)
      for (int j : r.children_of[i]) link(i, j, true);

    std::vector<int> component(a + b + 2, -1);
    for (int s = 0; s < a + b + 2; ++s) {
      if (component[s] >= 0) continue;
      std::queue<int> q;
      component[s] = s;
      q.push(s);
      while (!q.empty()) {
        const int x = q.front();
        q.pop();
        for (int y : adj[x])
          if (component[y] < 0) component[y] = s, q.push(y);
      }
    }
    // Components other than u_0 and the one holding u_c, by V-root index.
    std::vector<int> roots;
    for (int j = 0; j <= b; ++j) {
      if (has_parent[a + 1 + j]) continue;
      if (component[a + 1 + j] == component[c]) continue;
      roots.push_back(j);
    }
    std::vector<int> free_slots;
    for (int s = 0; s < b; ++s)
      if (word[s] < 0) free_slots.push_back(s);
    for (int child : r.children_of[c]) {
      const auto rank = std::find(roots.begin(), roots.end(), child) - roots.begin();
      word[free_slots.at(rank)] = c;
    }
  }
  for (int& letter : word)
    if (letter < 0) letter = 0;
  return word;
}

// ---------------------------------------------------------------------------

TEST(EncodeBipartite, Star) {
  for (int b = 0; b <= 5; ++b) {
    const BipartiteCode code = encode_bipartite(star(b));
    EXPECT_TRUE(code.w.empty());
    EXPECT_EQ(code.w_prime, std::vector<int>(b, 0));
  }
}

TEST(EncodeBipartite, HandTraces) {
  BipartiteCode code = encode_bipartite(bip(1, 1, {{0, 0}, {1, 0}, {1, 1}}));
  EXPECT_EQ(code.w, (std::vector<int>{0}));
  EXPECT_EQ(code.w_prime, (std::vector<int>{1}));

  code = encode_bipartite(bip(1, 1, {{0, 0}, {0, 1}, {1, 0}}));
  EXPECT_EQ(code.w, (std::vector<int>{0}));
  EXPECT_EQ(code.w_prime, (std::vector<int>{0}));
}

TEST(DecodeBipartite, Examples) {
  for (int b = 0; b <= 5; ++b) {
    EXPECT_EQ(decode_bipartite({0, b, {}, std::vector<int>(b, 0)}), star(b));
  }
  EXPECT_EQ(decode_bipartite({1, 1, {0}, {1}}), bip(1, 1, {{0, 0}, {1, 0}, {1, 1}}));

  std::set<BipartiteTree> images;
  for (int w : {0, 1})
    for (int wp : {0, 1}) images.insert(decode_bipartite({1, 1, {w}, {wp}}));
  const auto all = enumerate_bipartite_trees(1, 1);
  EXPECT_EQ(images, std::set<BipartiteTree>(all.begin(), all.end()));
  EXPECT_EQ(images.size(), 4u);
}

TEST(DecodeBipartite, Errors) {
  EXPECT_EQ(decode_error({1, 1, {}, {0}}), ErrorKind::BadLength);
  EXPECT_EQ(decode_error({1, 1, {0}, {0, 0}}), ErrorKind::BadLength);
  EXPECT_EQ(decode_error({1, 1, {2}, {0}}), ErrorKind::LetterOutOfRange);
  EXPECT_EQ(decode_error({1, 1, {0}, {-1}}), ErrorKind::LetterOutOfRange);
  EXPECT_EQ(decode_error({2, 1, {0, 0}, {3}}), ErrorKind::LetterOutOfRange);
}

TEST(DegreeProfile, Examples) {
  const BipartiteProfile path = degree_profile(bip(1, 1, {{0, 0}, {1, 0}, {1, 1}}));
  EXPECT_EQ(path.alpha, (std::vector<int>{0, 1}));
  EXPECT_EQ(path.beta, (std::vector<int>{1, 0}));
  const BipartiteProfile s = degree_profile(star(3));
  EXPECT_EQ(s.alpha, (std::vector<int>{3}));
  EXPECT_EQ(s.beta, (std::vector<int>{0, 0, 0, 0}));
}

TEST(EncodeBipartite, AgreesWithExplicitForests) {
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      for_each_bipartite_tree(a, b, [&](const BipartiteTree& t) {
        const BipartiteCode code = encode_bipartite(t);
        ASSERT_EQ(code.w, reference_w(t));
        ASSERT_EQ(code.w_prime, reference_w_prime(t));
      });
    }
  }
}

TEST(BipartiteCodec, RoundTripsBothWaysWithDegreeFidelity) {
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      long trees = 0;
      for_each_bipartite_tree(a, b, [&](const BipartiteTree& t) {
        const BipartiteCode code = encode_bipartite(t);
        ASSERT_EQ(decode_bipartite(code), t);
        const BipartiteProfile prof = degree_profile(t);
        ASSERT_EQ(letter_counts(code.w, b + 1), prof.beta);
        ASSERT_EQ(letter_counts(code.w_prime, a + 1), prof.alpha);
        ++trees;
      });
      std::set<BipartiteTree> images;
      long codes = 0;
      for_each_word(a, b + 1, [&](const std::vector<int>& w) {
        for_each_word(b, a + 1, [&](const std::vector<int>& wp) {
          const BipartiteCode code{a, b, w, wp};
          const BipartiteTree t = decode_bipartite(code);
          ASSERT_EQ(encode_bipartite(t), code);
          const BipartiteProfile prof = degree_profile(t);
          ASSERT_EQ(prof.beta, letter_counts(w, b + 1));
          ASSERT_EQ(prof.alpha, letter_counts(wp, a + 1));
          images.insert(t);
          ++codes;
        });
      });
      EXPECT_EQ(codes, trees);
      EXPECT_EQ(static_cast<long>(images.size()), codes);
      EXPECT_EQ(BigCount(codes), count_bipartite_total(a, b));
    }
  }
}

TEST(BipartiteCodec, AgreesWithReferenceOnRandomMediumTrees) {
  SeedStream rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const int a = static_cast<int>(rng.below(25));
    const int b = static_cast<int>(rng.below(25));
    const BipartiteTree t = sample_bipartite_tree(a, b, std::nullopt, std::nullopt, rng);
    const BipartiteCode code = encode_bipartite(t);
    ASSERT_EQ(code.w, reference_w(t));
    ASSERT_EQ(code.w_prime, reference_w_prime(t));
  }
}

TEST(BipartiteCodec, LargeRoundTrip) {
  SeedStream rng(3);
  const int a = 60000;
  const int b = 80000;
  const BipartiteCode code{a, b, sample_word(a, b + 1, std::nullopt, rng),
                           sample_word(b, a + 1, std::nullopt, rng)};
  const BipartiteTree t = decode_bipartite(code);
  EXPECT_EQ(static_cast<int>(t.edges().size()), a + b + 1);
  EXPECT_EQ(encode_bipartite(t), code);
}

}  // namespace
}  // namespace hypertrees
