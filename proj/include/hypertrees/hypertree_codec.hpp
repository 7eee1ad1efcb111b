#pragma once

#include "hypertrees/core_model.hpp"

namespace hypertrees {

/// Image of a hypertree with k >= 1 hyperedges: a partition of {1..n} into
/// k blocks and a word of length k-1 over {0..n}.
struct HypertreeCode {
  SetPartition partition;
  CodeWord word;

  friend bool operator==(const HypertreeCode&, const HypertreeCode&) = default;
};

/// Blocks E \ {m(E)}, one per hyperedge. Throws EmptyTree when k = 0.
SetPartition partition_of(const Hypertree& tree);

/// The word records, for each non-leaf a from the largest down, which blocks
/// hang from a: letter a sits at the ranks (by block minimum, P(a) excluded)
/// of the blocks whose hyperedge is marked at a, among the positions not yet
/// used by larger letters. The hyperedges containing a are then merged and
/// the process continues; positions left at the end carry letter 0.
///
/// Letter i occurs exactly deg(i) - 1 times. Throws EmptyTree when k = 0.
HypertreeCode encode(const Hypertree& tree);

/// Inverse of encode. Throws EmptyTree when the partition has no block,
/// BadWordLength when |word| != k - 1 and LetterOutOfRange for letters
/// outside {0..n}.
Hypertree decode(const HypertreeCode& code);

}  // namespace hypertrees
