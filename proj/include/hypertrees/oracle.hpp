#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hypertrees/big_count.hpp"
#include "hypertrees/core_model.hpp"

namespace hypertrees {

/// Size limits for exhaustive enumeration. Requests above them throw
/// BoundExceeded.
struct OracleBounds {
  int max_n = 5;
  int max_ab = 3;
};

/// Visits every hypertree on {0..n} with k hyperedges exactly once, in
/// lexicographic order of the canonical edge list. Built by depth-first
/// search over candidate hyperedges with hyperforest pruning; independent of
/// the codecs. Throws ProfileMismatch for k < 1.
void for_each_hypertree(int n, int k, const std::function<void(const Hypertree&)>& visit,
                        const OracleBounds& bounds = {});

std::vector<Hypertree> enumerate_hypertrees(int n, int k, const OracleBounds& bounds = {});

/// Visits every spanning tree of K_{a+1,b+1} exactly once, in lexicographic
/// order of the canonical edge list.
void for_each_bipartite_tree(int a, int b,
                             const std::function<void(const BipartiteTree&)>& visit,
                             const OracleBounds& bounds = {});

std::vector<BipartiteTree> enumerate_bipartite_trees(int a, int b,
                                                     const OracleBounds& bounds = {});

/// Visits every partition of {1..n} into exactly k blocks, in canonical form.
void for_each_set_partition(int n, int k, const std::function<void(const SetPartition&)>& visit);

/// Visits every word of the given length over {0..alphabet_size-1} in
/// lexicographic order.
void for_each_word(int length, int alphabet_size,
                   const std::function<void(const std::vector<int>&)>& visit);

/// Profile key: (lambda parts, mu) for hypertrees, (alpha, beta) for
/// bipartite trees.
using ProfileKey = std::pair<std::vector<int>, std::vector<int>>;

struct EnumerationReport {
  std::string family;  // "hypertree" or "bipartite"
  std::vector<std::pair<std::string, int>> parameters;
  BigCount total = 0;
  std::map<ProfileKey, BigCount> per_profile;
  std::chrono::duration<double> elapsed{};
};

EnumerationReport profile_census(int n, int k, const OracleBounds& bounds = {});

EnumerationReport bipartite_census(int a, int b, const OracleBounds& bounds = {});

/// Sum over all hypertrees with k hyperedges of prod_j (lambda_j - 1)!.
BigCount weighted_census(int n, int k, const OracleBounds& bounds = {});

}  // namespace hypertrees
