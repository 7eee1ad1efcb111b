#include "hypertrees/sampling.hpp"

#include <limits>
#include <numeric>
#include <string>

#include "hypertrees/bipartite_codec.hpp"
#include "hypertrees/counting.hpp"
#include "hypertrees/errors.hpp"
#include "hypertrees/hypertree_codec.hpp"

namespace hypertrees {

std::uint64_t SeedStream::below(std::uint64_t bound) {
  // Values below `threshold` would make the modulo biased.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

BigCount SeedStream::below(const BigCount& bound) {
  if (bound <= std::numeric_limits<std::uint64_t>::max()) {
    return BigCount(below(static_cast<std::uint64_t>(bound)));
  }
  const unsigned bits = boost::multiprecision::msb(BigCount(bound - 1)) + 1;
  const unsigned words = (bits + 63) / 64;
  const BigCount mask = (BigCount(1) << bits) - 1;
  for (;;) {
    BigCount r = 0;
    for (unsigned w = 0; w < words; ++w) r = (r << 64) | next();
    r &= mask;
    if (r < bound) return r;
  }
}

SetPartition sample_set_partition(const SizePartition& lambda, SeedStream& rng) {
  std::vector<int> order(lambda.n());
  std::iota(order.begin(), order.end(), 1);
  rng.shuffle(std::span<int>(order));
  std::vector<std::vector<int>> blocks;
  auto cursor = order.begin();
  for (int part : lambda.parts()) {
    blocks.emplace_back(cursor, cursor + part);
    cursor += part;
  }
  return SetPartition(lambda.n(), std::move(blocks));
}

CodeWord sample_word(int length, int alphabet_size, const std::optional<std::vector<int>>& mu,
                     SeedStream& rng) {
  if (length < 0 || alphabet_size < 0 || (length > 0 && alphabet_size == 0)) {
    throw Error(ErrorKind::ProfileMismatch, "no word of length " + std::to_string(length) +
                                                " over " + std::to_string(alphabet_size) +
                                                " letters");
  }
  CodeWord word;
  word.reserve(length);
  if (!mu) {
    for (int i = 0; i < length; ++i) {
      word.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(alphabet_size))));
    }
    return word;
  }
  if (static_cast<int>(mu->size()) != alphabet_size ||
      std::accumulate(mu->begin(), mu->end(), 0) != length) {
    throw Error(ErrorKind::ProfileMismatch,
                "letter multiplicities must have " + std::to_string(alphabet_size) +
                    " entries summing to " + std::to_string(length));
  }
  for (int letter = 0; letter < alphabet_size; ++letter) {
    if ((*mu)[letter] < 0) throw Error(ErrorKind::ProfileMismatch, "negative multiplicity");
    word.insert(word.end(), (*mu)[letter], letter);
  }
  rng.shuffle(std::span<int>(word));
  return word;
}

Hypertree sample_hypertree(const SizePartition& lambda, const std::optional<DegreeVector>& mu,
                           SeedStream& rng) {
  if (lambda.k() == 0) throw Error(ErrorKind::ProfileMismatch, "size partition is empty");
  std::optional<std::vector<int>> letters;
  if (mu) letters = mu->mu;
  SetPartition partition = sample_set_partition(lambda, rng);
  CodeWord word = sample_word(lambda.k() - 1, lambda.n() + 1, letters, rng);
  return decode({std::move(partition), std::move(word)});
}

SetPartition sample_set_partition(int n, int k, SeedStream& rng) {
  if (k < 1 || k > n) throw Error(ErrorKind::ProfileMismatch, "need 1 <= k <= n");
  // Walk S2(m, j) = S2(m-1, j-1) + j S2(m-1, j) from (n, k) down: element m
  // either opens a block or joins one of the j blocks formed by 1..m-1.
  std::vector<int> joins(n + 1, -1);
  int j = k;
  for (int m = n; m >= 1; --m) {
    if (rng.below(stirling2(m, j)) < stirling2(m - 1, j - 1)) {
      --j;
    } else {
      joins[m] = static_cast<int>(rng.below(static_cast<std::uint64_t>(j)));
    }
  }
  std::vector<std::vector<int>> blocks;
  for (int m = 1; m <= n; ++m) {
    if (joins[m] < 0) {
      blocks.push_back({m});
    } else {
      blocks[joins[m]].push_back(m);
    }
  }
  return SetPartition(n, std::move(blocks));
}

SizePartition sample_size_partition(int n, int k, SeedStream& rng) {
  return sample_set_partition(n, k, rng).shape();
}

Hypertree sample_hypertree(int n, int k, SeedStream& rng) {
  SetPartition partition = sample_set_partition(n, k, rng);
  CodeWord word = sample_word(k - 1, n + 1, std::nullopt, rng);
  return decode({std::move(partition), std::move(word)});
}

BipartiteTree sample_bipartite_tree(int a, int b, const std::optional<std::vector<int>>& alpha,
                                    const std::optional<std::vector<int>>& beta,
                                    SeedStream& rng) {
  if (a < 0 || b < 0) throw Error(ErrorKind::ProfileMismatch, "negative class size");
  BipartiteCode code{a, b, sample_word(a, b + 1, beta, rng), sample_word(b, a + 1, alpha, rng)};
  return decode_bipartite(code);
}

}  // namespace hypertrees
