#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace hypertrees {

/// Vertex label. A hypergraph on n+1 vertices uses exactly the labels 0..n.
using Vertex = int;

/// Hyperedge stored as a strictly increasing list of at least two labels.
using Hyperedge = std::vector<Vertex>;

/// Labelled hypergraph in canonical form: each hyperedge sorted ascending,
/// the edge list sorted lexicographically. Construction canonicalizes and
/// rejects structurally malformed input (labels out of range, hyperedges of
/// size < 2, repeated labels, repeated hyperedges).
class Hypergraph {
 public:
  Hypergraph(int n, std::vector<Hyperedge> edges);

  int n() const noexcept { return n_; }
  int vertex_count() const noexcept { return n_ + 1; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Hyperedge>& edges() const noexcept { return edges_; }

  int degree(Vertex v) const;
  std::vector<int> degrees() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;
  friend auto operator<=>(const Hypergraph&, const Hypergraph&) = default;

 private:
  int n_;
  std::vector<Hyperedge> edges_;
};

/// A hypergraph certified to be a connected hyperforest. Only
/// validate_hypertree produces values of this type.
class Hypertree {
 public:
  const Hypergraph& hypergraph() const noexcept { return graph_; }
  int n() const noexcept { return graph_.n(); }
  int k() const noexcept { return graph_.edge_count(); }
  const std::vector<Hyperedge>& edges() const noexcept { return graph_.edges(); }

  friend bool operator==(const Hypertree&, const Hypertree&) = default;
  friend auto operator<=>(const Hypertree&, const Hypertree&) = default;

 private:
  explicit Hypertree(Hypergraph graph) : graph_(std::move(graph)) {}
  friend Hypertree validate_hypertree(Hypergraph graph);

  Hypergraph graph_;
};

/// Checks, in this order: pairwise intersections of at most one vertex
/// (EdgeOverlap), acyclicity of the vertex/hyperedge incidence graph
/// (CycleOutsideEdge), connectivity (Disconnected) and the size identity
/// sum size(E) = n + k (SizeIdentityViolated). The error message names the
/// first witness found. The one-vertex hypergraph without edges is accepted.
Hypertree validate_hypertree(Hypergraph graph);

/// Breadth-first distances from `source` over the adjacency relation
/// "both endpoints lie in a common hyperedge".
std::vector<int> distances_from(const Hypertree& tree, Vertex source);

int distance(const Hypertree& tree, Vertex v, Vertex w);

/// The unique vertex of `edge` closest to vertex 0.
Vertex marked_vertex(const Hypertree& tree, const Hyperedge& edge);

/// Marked vertex of every hyperedge, aligned with tree.edges().
std::vector<Vertex> marked_vertices(const Hypertree& tree);

/// Weakly decreasing positive parts lambda_1 >= ... >= lambda_k >= 1.
/// Hyperedge sizes are 1 + lambda_i. The constructor sorts its input.
class SizePartition {
 public:
  SizePartition() = default;
  explicit SizePartition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int n() const noexcept { return n_; }
  int k() const noexcept { return static_cast<int>(parts_.size()); }

  /// nu[j] = number of parts equal to j, for j = 0..n.
  std::vector<int> multiplicities() const;

  friend bool operator==(const SizePartition&, const SizePartition&) = default;
  friend auto operator<=>(const SizePartition&, const SizePartition&) = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// mu_0..mu_n with vertex degrees 1 + mu_i.
struct DegreeVector {
  std::vector<int> mu;

  int total() const;

  friend bool operator==(const DegreeVector&, const DegreeVector&) = default;
  friend auto operator<=>(const DegreeVector&, const DegreeVector&) = default;
};

struct Profile {
  SizePartition lambda;
  DegreeVector mu;

  friend bool operator==(const Profile&, const Profile&) = default;
  friend auto operator<=>(const Profile&, const Profile&) = default;
};

/// Hyperedge sizes minus one (sorted) and vertex degrees minus one.
/// Throws EmptyTree for the edgeless one-vertex tree.
Profile profile(const Hypertree& tree);

/// Partition of {1..n} into nonempty blocks. Canonical form: each block
/// ascending, blocks ordered by their minimum. Throws BadPartition unless
/// the blocks are nonempty, disjoint and cover exactly {1..n}.
class SetPartition {
 public:
  SetPartition(int n, std::vector<std::vector<int>> blocks);

  int n() const noexcept { return n_; }
  int k() const noexcept { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }

  /// Block sizes sorted decreasingly.
  SizePartition shape() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
};

/// Word w_1..w_{k-1} over the alphabet {0..n}.
using CodeWord = std::vector<int>;

/// Letter multiplicities of `word` over the alphabet {0..alphabet_size-1}.
std::vector<int> letter_counts(std::span<const int> word, int alphabet_size);

/// Edge (i, j) joins u_i to v_j.
using BipartiteEdge = std::pair<int, int>;

/// Labelled tree on U = {u_0..u_a} and V = {v_0..v_b}, edges sorted
/// lexicographically. Only validate_bipartite_tree produces values.
class BipartiteTree {
 public:
  int a() const noexcept { return a_; }
  int b() const noexcept { return b_; }
  const std::vector<BipartiteEdge>& edges() const noexcept { return edges_; }

  friend bool operator==(const BipartiteTree&, const BipartiteTree&) = default;
  friend auto operator<=>(const BipartiteTree&, const BipartiteTree&) = default;

 private:
  BipartiteTree(int a, int b, std::vector<BipartiteEdge> edges)
      : a_(a), b_(b), edges_(std::move(edges)) {}
  friend BipartiteTree validate_bipartite_tree(int a, int b,
                                               std::vector<BipartiteEdge> edges);

  int a_;
  int b_;
  std::vector<BipartiteEdge> edges_;
};

/// Throws NotBipartite when an endpoint index is outside its class and
/// NotATree unless the edges form a spanning tree of K_{a+1,b+1}.
BipartiteTree validate_bipartite_tree(int a, int b, std::vector<BipartiteEdge> edges);

struct BipartiteProfile {
  std::vector<int> alpha;  // deg(u_i) - 1
  std::vector<int> beta;   // deg(v_j) - 1

  friend bool operator==(const BipartiteProfile&, const BipartiteProfile&) = default;
  friend auto operator<=>(const BipartiteProfile&, const BipartiteProfile&) = default;
};

BipartiteProfile degree_profile(const BipartiteTree& tree);

}  // namespace hypertrees
