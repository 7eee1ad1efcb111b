#pragma once

#include <span>
#include <vector>

#include "hypertrees/big_count.hpp"
#include "hypertrees/core_model.hpp"

namespace hypertrees {

BigCount factorial(int n);
BigCount binomial(int n, int k);

/// n! / prod parts_i!. Throws PartsMismatch unless the parts are
/// nonnegative and sum to n.
BigCount multinomial(int n, std::span<const int> parts);

/// Partitions of {1..n} into k nonempty blocks; 0 outside the triangle.
BigCount stirling2(int n, int k);

/// Permutations of {1..n} with exactly k cycles; 0 outside the triangle.
BigCount stirling1_unsigned(int n, int k);

/// Number of set partitions of {1..n} whose block sizes form lambda:
/// multinomial(n, lambda) / prod_j nu_j!.
BigCount set_partitions_of_shape(const SizePartition& lambda);

/// Hypertrees on {0..n} with hyperedge sizes 1 + lambda_i and vertex degrees
/// 1 + mu_i. Throws ProfileMismatch unless |mu| = n + 1, mu >= 0 and
/// sum mu = k - 1 for k = #parts(lambda) >= 1.
BigCount count_hypertrees(const SizePartition& lambda, const DegreeVector& mu);

/// Hypertrees with hyperedge sizes 1 + lambda_i, any degrees.
BigCount count_hypertrees_by_sizes(const SizePartition& lambda);

/// All hypertrees on {0..n} with k hyperedges: (n+1)^(k-1) S2(n,k).
/// Throws ProfileMismatch for k < 1.
BigCount count_hypertrees_total(int n, int k);

/// Sum over the same hypertrees of prod_j (lambda_j - 1)!, which equals
/// (n+1)^(k-1) times the unsigned Stirling number of the first kind.
BigCount weighted_total(int n, int k);

/// Labelled trees on U = {u_0..u_a}, V = {v_0..v_b} with deg u_i = 1 + alpha_i
/// and deg v_j = 1 + beta_j, where a = |alpha| - 1 and b = |beta| - 1.
/// Throws ProfileMismatch unless sum alpha = b and sum beta = a.
BigCount count_bipartite(std::span<const int> alpha, std::span<const int> beta);

/// Spanning trees of K_{a+1,b+1}: (a+1)^b (b+1)^a.
BigCount count_bipartite_total(int a, int b);

/// Left side of the leaf-removal recursion for bipartite trees:
/// sum over i with alpha_i >= 1 of multinomial(a, beta) multinomial(b-1, alpha - e_i).
/// Equals count_bipartite(alpha, beta) for b >= 1.
BigCount bipartite_recursion_sum(std::span<const int> alpha, std::span<const int> beta);

/// Probability that a uniform hypertree with k hyperedges on {0..n} has
/// hyperedge sizes 1 + lambda_i.
Probability size_profile_probability(const SizePartition& lambda, int n, int k);

/// Probability that the same random hypertree has degrees 1 + mu_i.
Probability degree_profile_probability(const DegreeVector& mu, int n, int k);

struct IdentitySides {
  BigCount lhs;
  BigCount rhs;
};

/// (n+1)^(n-1) against sum_{k<n} C(n,k) (k+1)^(n-1-k) (n-k)^k. Requires n >= 1.
IdentitySides split_identity_check(int n);

/// All partitions of n into exactly k parts, in decreasing lexicographic order.
std::vector<SizePartition> partitions_into(int n, int k);

/// All sequences of `parts` nonnegative integers summing to `total`, in
/// increasing lexicographic order.
std::vector<std::vector<int>> weak_compositions(int total, int parts);

}  // namespace hypertrees
