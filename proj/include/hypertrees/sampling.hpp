#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "hypertrees/big_count.hpp"
#include "hypertrees/core_model.hpp"

namespace hypertrees {

/// Deterministic random source: std::mt19937_64 seeded with a 64-bit value.
/// Bounded draws use rejection on raw 64-bit outputs, so sequences are
/// identical on every platform.
class SeedStream {
 public:
  explicit SeedStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform in [0, bound). bound must be positive.
  BigCount below(const BigCount& bound);

  /// Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::span<T> values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1], values[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Uniform among partitions of {1..n} with block sizes lambda: shuffle 1..n
/// and cut consecutive blocks of sizes lambda_1, ..., lambda_k.
SetPartition sample_set_partition(const SizePartition& lambda, SeedStream& rng);

/// Uniform word of the given length over {0..alphabet_size-1}; with `mu`,
/// uniform among arrangements of the multiset in which letter i occurs
/// mu[i] times. Throws ProfileMismatch if |mu| != alphabet_size or
/// sum mu != length.
CodeWord sample_word(int length, int alphabet_size, const std::optional<std::vector<int>>& mu,
                     SeedStream& rng);

/// Uniform among hypertrees with hyperedge sizes 1 + lambda_i (and degrees
/// 1 + mu_i when given), by decoding a uniform code.
Hypertree sample_hypertree(const SizePartition& lambda, const std::optional<DegreeVector>& mu,
                           SeedStream& rng);

/// Uniform among partitions of {1..n} into k blocks, by a walk down the
/// recurrence of S2. Needs the S2 triangle up to n, so cost grows as n^2
/// big integers. Throws ProfileMismatch unless 1 <= k <= n.
SetPartition sample_set_partition(int n, int k, SeedStream& rng);

/// Size profile of a uniform hypertree with k hyperedges on {0..n}.
SizePartition sample_size_partition(int n, int k, SeedStream& rng);

/// Uniform among all hypertrees with k hyperedges on {0..n}.
Hypertree sample_hypertree(int n, int k, SeedStream& rng);

/// Uniform among spanning trees of K_{a+1,b+1}, optionally with prescribed
/// alpha (U degrees minus one) and beta (V degrees minus one).
BipartiteTree sample_bipartite_tree(int a, int b, const std::optional<std::vector<int>>& alpha,
                                    const std::optional<std::vector<int>>& beta,
                                    SeedStream& rng);

}  // namespace hypertrees
