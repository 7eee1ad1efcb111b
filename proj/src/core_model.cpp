#include "hypertrees/core_model.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>
#include <string>
#include <unordered_map>

#include "detail/union_find.hpp"
#include "hypertrees/errors.hpp"

namespace hypertrees {
namespace {

std::string format_edge(const Hyperedge& edge) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < edge.size(); ++i) out << (i ? "," : "") << edge[i];
  out << ']';
  return out.str();
}

// Incidence lists: for each vertex, the indices of the hyperedges containing it.
std::vector<std::vector<int>> incidence(const Hypergraph& graph) {
  std::vector<std::vector<int>> lists(graph.vertex_count());
  for (int e = 0; e < graph.edge_count(); ++e) {
    for (Vertex v : graph.edges()[e]) lists[v].push_back(e);
  }
  return lists;
}

// Reports the first pair of hyperedges (in edge order) sharing two vertices.
void check_overlaps(const Hypergraph& graph) {
  const auto lists = incidence(graph);
  std::vector<int> seen_at(graph.edge_count(), -1);
  std::vector<Vertex> first_shared(graph.edge_count(), -1);
  for (int e = 0; e < graph.edge_count(); ++e) {
    for (Vertex v : graph.edges()[e]) {
      for (int f : lists[v]) {
        if (f <= e) continue;
        if (seen_at[f] != e) {
          seen_at[f] = e;
          first_shared[f] = v;
        } else {
          throw Error(ErrorKind::EdgeOverlap,
                      "edges " + format_edge(graph.edges()[e]) + " and " +
                          format_edge(graph.edges()[f]) + " share vertices " +
                          std::to_string(first_shared[f]) + " and " + std::to_string(v));
        }
      }
    }
  }
}

}  // namespace

Hypergraph::Hypergraph(int n, std::vector<Hyperedge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 0) throw Error(ErrorKind::MalformedHypergraph, "negative vertex bound");
  for (auto& edge : edges_) {
    std::sort(edge.begin(), edge.end());
    if (edge.size() < 2) {
      throw Error(ErrorKind::MalformedHypergraph,
                  "hyperedge " + format_edge(edge) + " has fewer than two vertices");
    }
    if (edge.front() < 0 || edge.back() > n_) {
      throw Error(ErrorKind::MalformedHypergraph,
                  "hyperedge " + format_edge(edge) + " uses a label outside 0.." +
                      std::to_string(n_));
    }
    if (std::adjacent_find(edge.begin(), edge.end()) != edge.end()) {
      throw Error(ErrorKind::MalformedHypergraph,
                  "hyperedge " + format_edge(edge) + " repeats a label");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw Error(ErrorKind::MalformedHypergraph, "hyperedge " + format_edge(*dup) + " repeated");
  }
}

int Hypergraph::degree(Vertex v) const {
  int count = 0;
  for (const auto& edge : edges_) count += std::binary_search(edge.begin(), edge.end(), v);
  return count;
}

std::vector<int> Hypergraph::degrees() const {
  std::vector<int> deg(vertex_count(), 0);
  for (const auto& edge : edges_)
    for (Vertex v : edge) ++deg[v];
  return deg;
}

Hypertree validate_hypertree(Hypergraph graph) {
  const int vertices = graph.vertex_count();
  const int k = graph.edge_count();

  // Incidence graph: vertex nodes 0..n, hyperedge nodes n+1..n+k.
  detail::UnionFind components(vertices + k);
  int cycle_edge = -1;
  for (int e = 0; e < k && cycle_edge < 0; ++e) {
    for (Vertex v : graph.edges()[e]) {
      if (components.unite(v, vertices + e) < 0) {
        cycle_edge = e;
        break;
      }
    }
  }
  if (cycle_edge >= 0) {
    // Two hyperedges sharing two vertices always close an incidence cycle,
    // so overlaps only need to be searched for here.
    check_overlaps(graph);
    throw Error(ErrorKind::CycleOutsideEdge,
                "hyperedge " + format_edge(graph.edges()[cycle_edge]) +
                    " closes a cycle not contained in a hyperedge");
  }

  if (components.components() != 1) {
    const int root = components.find(0);
    for (Vertex v = 1; v < vertices; ++v) {
      if (components.find(v) != root) {
        throw Error(ErrorKind::Disconnected,
                    "vertex " + std::to_string(v) + " is not connected to vertex 0");
      }
    }
  }

  long long size_sum = 0;
  for (const auto& edge : graph.edges()) size_sum += static_cast<long long>(edge.size());
  if (size_sum != static_cast<long long>(graph.n()) + k) {
    throw Error(ErrorKind::SizeIdentityViolated,
                "hyperedge sizes sum to " + std::to_string(size_sum) + " instead of " +
                    std::to_string(graph.n() + k));
  }
  return Hypertree(std::move(graph));
}

std::vector<int> distances_from(const Hypertree& tree, Vertex source) {
  const auto& graph = tree.hypergraph();
  if (source < 0 || source > graph.n()) {
    throw Error(ErrorKind::MalformedInput, "vertex " + std::to_string(source) + " out of range");
  }
  const auto lists = incidence(graph);
  std::vector<int> dist(graph.vertex_count(), -1);
  std::vector<char> edge_done(graph.edge_count(), 0);
  std::queue<Vertex> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const Vertex v = frontier.front();
    frontier.pop();
    for (int e : lists[v]) {
      if (edge_done[e]) continue;
      edge_done[e] = 1;
      for (Vertex w : graph.edges()[e]) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          frontier.push(w);
        }
      }
    }
  }
  return dist;
}

int distance(const Hypertree& tree, Vertex v, Vertex w) {
  if (w < 0 || w > tree.n()) {
    throw Error(ErrorKind::MalformedInput, "vertex " + std::to_string(w) + " out of range");
  }
  return distances_from(tree, v)[w];
}

namespace {

Vertex closest_in(const Hyperedge& edge, const std::vector<int>& dist) {
  Vertex best = edge.front();
  int ties = 0;
  for (Vertex v : edge) {
    if (dist[v] < dist[best]) {
      best = v;
      ties = 0;
    } else if (dist[v] == dist[best] && v != best) {
      ++ties;
    }
  }
  if (ties > 0) {
    throw Error(ErrorKind::NonUniqueMarked,
                "hyperedge " + format_edge(edge) + " has several vertices closest to 0");
  }
  return best;
}

}  // namespace

Vertex marked_vertex(const Hypertree& tree, const Hyperedge& edge) {
  Hyperedge sorted = edge;
  std::sort(sorted.begin(), sorted.end());
  if (!std::binary_search(tree.edges().begin(), tree.edges().end(), sorted)) {
    throw Error(ErrorKind::NotAnEdge, format_edge(sorted) + " is not a hyperedge of the tree");
  }
  return closest_in(sorted, distances_from(tree, 0));
}

std::vector<Vertex> marked_vertices(const Hypertree& tree) {
  const auto dist = distances_from(tree, 0);
  std::vector<Vertex> marks;
  marks.reserve(tree.edges().size());
  for (const auto& edge : tree.edges()) marks.push_back(closest_in(edge, dist));
  return marks;
}

SizePartition::SizePartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw Error(ErrorKind::ProfileMismatch, "partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> SizePartition::multiplicities() const {
  std::vector<int> nu(n_ + 1, 0);
  for (int p : parts_) ++nu[p];
  return nu;
}

int DegreeVector::total() const { return std::accumulate(mu.begin(), mu.end(), 0); }

Profile profile(const Hypertree& tree) {
  if (tree.k() == 0) throw Error(ErrorKind::EmptyTree, "tree has no hyperedges");
  std::vector<int> parts;
  parts.reserve(tree.edges().size());
  for (const auto& edge : tree.edges()) parts.push_back(static_cast<int>(edge.size()) - 1);
  DegreeVector mu{tree.hypergraph().degrees()};
  for (int& m : mu.mu) --m;
  return {SizePartition(std::move(parts)), std::move(mu)};
}

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  if (n_ < 0) throw Error(ErrorKind::BadPartition, "negative ground set size");
  std::vector<char> covered(n_ + 1, 0);
  for (auto& block : blocks_) {
    if (block.empty()) throw Error(ErrorKind::BadPartition, "empty block");
    std::sort(block.begin(), block.end());
    for (int x : block) {
      if (x < 1 || x > n_) {
        throw Error(ErrorKind::BadPartition,
                    "element " + std::to_string(x) + " outside 1.." + std::to_string(n_));
      }
      if (covered[x]) {
        throw Error(ErrorKind::BadPartition, "element " + std::to_string(x) + " repeated");
      }
      covered[x] = 1;
    }
  }
  for (int x = 1; x <= n_; ++x) {
    if (!covered[x]) throw Error(ErrorKind::BadPartition, "element " + std::to_string(x) + " missing");
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& lhs, const auto& rhs) { return lhs.front() < rhs.front(); });
}

SizePartition SetPartition::shape() const {
  std::vector<int> sizes;
  sizes.reserve(blocks_.size());
  for (const auto& block : blocks_) sizes.push_back(static_cast<int>(block.size()));
  return SizePartition(std::move(sizes));
}

std::vector<int> letter_counts(std::span<const int> word, int alphabet_size) {
  std::vector<int> counts(alphabet_size, 0);
  for (int letter : word) {
    if (letter < 0 || letter >= alphabet_size) {
      throw Error(ErrorKind::LetterOutOfRange,
                  "letter " + std::to_string(letter) + " outside 0.." +
                      std::to_string(alphabet_size - 1));
    }
    ++counts[letter];
  }
  return counts;
}

BipartiteTree validate_bipartite_tree(int a, int b, std::vector<BipartiteEdge> edges) {
  if (a < 0 || b < 0) throw Error(ErrorKind::NotBipartite, "negative class size");
  for (const auto& [i, j] : edges) {
    if (i < 0 || i > a || j < 0 || j > b) {
      throw Error(ErrorKind::NotBipartite, "edge (" + std::to_string(i) + "," +
                                               std::to_string(j) + ") does not join U to V");
    }
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw Error(ErrorKind::NotATree, "repeated edge");
  }
  if (static_cast<long long>(edges.size()) != static_cast<long long>(a) + b + 1) {
    throw Error(ErrorKind::NotATree, std::to_string(edges.size()) + " edges instead of " +
                                         std::to_string(a + b + 1));
  }
  // U nodes 0..a, V nodes a+1..a+b+1.
  detail::UnionFind components(a + b + 2);
  for (const auto& [i, j] : edges) {
    if (components.unite(i, a + 1 + j) < 0) {
      throw Error(ErrorKind::NotATree, "edge (" + std::to_string(i) + "," + std::to_string(j) +
                                           ") closes a cycle");
    }
  }
  return BipartiteTree(a, b, std::move(edges));
}

BipartiteProfile degree_profile(const BipartiteTree& tree) {
  BipartiteProfile result{std::vector<int>(tree.a() + 1, -1), std::vector<int>(tree.b() + 1, -1)};
  for (const auto& [i, j] : tree.edges()) {
    ++result.alpha[i];
    ++result.beta[j];
  }
  return result;
}

}  // namespace hypertrees
