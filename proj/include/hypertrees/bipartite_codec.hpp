#pragma once

#include <vector>

#include "hypertrees/core_model.hpp"

namespace hypertrees {

/// Code of a tree on U = {u_0..u_a}, V = {v_0..v_b}: `w` has length a with
/// letters indexing V, `w_prime` has length b with letters indexing U.
struct BipartiteCode {
  int a = 0;
  int b = 0;
  std::vector<int> w;
  std::vector<int> w_prime;

  friend bool operator==(const BipartiteCode&, const BipartiteCode&) = default;
};

/// Roots the tree at u_0. `w` lists the parents p(u_1)..p(u_a). `w_prime` is
/// filled for c = a..1: the children of u_c are roots of components of the
/// forest made of the parent edges of u_1..u_a and the child edges of
/// u_{c+1}..u_a; with u_0 and the component of u_c left out, the ranks of
/// those components (ordered by root index) pick the slots of letter c among
/// the slots still free. Remaining slots get letter 0.
BipartiteCode encode_bipartite(const BipartiteTree& tree);

/// Inverse of encode_bipartite. Throws BadLength, LetterOutOfRange, or
/// NonTreeCode if reconstruction fails to yield a spanning tree.
BipartiteTree decode_bipartite(const BipartiteCode& code);

}  // namespace hypertrees
