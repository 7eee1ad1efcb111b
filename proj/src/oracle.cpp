#include "hypertrees/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "detail/union_find.hpp"
#include "hypertrees/errors.hpp"

namespace hypertrees {
namespace {

void check_bound(int value, int bound, const char* what) {
  if (value > bound) {
    throw Error(ErrorKind::BoundExceeded, std::string(what) + " = " + std::to_string(value) +
                                              " exceeds the enumeration bound " +
                                              std::to_string(bound));
  }
}

// All subsets of {0..n} with at least two elements, as sorted lists in
// lexicographic order.
std::vector<Hyperedge> candidate_edges(int n) {
  std::vector<Hyperedge> out;
  const unsigned full = 1u << (n + 1);
  for (unsigned mask = 0; mask < full; ++mask) {
    if (std::popcount(mask) < 2) continue;
    Hyperedge edge;
    for (int v = 0; v <= n; ++v)
      if (mask & (1u << v)) edge.push_back(v);
    out.push_back(std::move(edge));
  }
  std::sort(out.begin(), out.end());
  return out;
}

class HypertreeSearch {
 public:
  HypertreeSearch(int n, int k, const std::function<void(const Hypertree&)>& visit)
      : n_(n), k_(k), visit_(visit), candidates_(candidate_edges(n)) {
    for (const auto& edge : candidates_) {
      unsigned mask = 0;
      for (Vertex v : edge) mask |= 1u << v;
      masks_.push_back(mask);
    }
  }

  void run() { extend(0, 0); }

 private:
  void extend(std::size_t next, int size_sum) {
    const int placed = static_cast<int>(chosen_.size());
    if (placed == k_) {
      if (size_sum == n_ + k_) emit();
      return;
    }
    for (std::size_t c = next; c < candidates_.size(); ++c) {
      const int size = static_cast<int>(candidates_[c].size());
      if (size_sum + size + 2 * (k_ - placed - 1) > n_ + k_) continue;
      if (!compatible(c)) continue;
      chosen_.push_back(c);
      extend(c + 1, size_sum + size);
      chosen_.pop_back();
    }
  }

  // Pairwise intersections of at most one vertex, and no cycle in the
  // incidence graph of the chosen hyperedges.
  bool compatible(std::size_t c) const {
    for (std::size_t e : chosen_) {
      if (std::popcount(masks_[e] & masks_[c]) > 1) return false;
    }
    detail::UnionFind incidence(n_ + 1 + k_);
    int node = n_ + 1;
    for (std::size_t e : chosen_) {
      for (Vertex v : candidates_[e]) incidence.unite(v, node);
      ++node;
    }
    for (Vertex v : candidates_[c]) {
      if (incidence.unite(v, node) < 0) return false;
    }
    return true;
  }

  void emit() {
    detail::UnionFind connect(n_ + 1);
    for (std::size_t e : chosen_)
      for (Vertex v : candidates_[e]) connect.unite(candidates_[e].front(), v);
    if (connect.components() != 1) return;
    std::vector<Hyperedge> edges;
    for (std::size_t e : chosen_) edges.push_back(candidates_[e]);
    visit_(validate_hypertree(Hypergraph(n_, std::move(edges))));
  }

  int n_;
  int k_;
  const std::function<void(const Hypertree&)>& visit_;
  std::vector<Hyperedge> candidates_;
  std::vector<unsigned> masks_;
  std::vector<std::size_t> chosen_;
};

class BipartiteSearch {
 public:
  BipartiteSearch(int a, int b, const std::function<void(const BipartiteTree&)>& visit)
      : a_(a), b_(b), visit_(visit) {
    for (int i = 0; i <= a; ++i)
      for (int j = 0; j <= b; ++j) candidates_.emplace_back(i, j);
  }

  void run() { extend(0); }

 private:
  void extend(std::size_t next) {
    const int needed = a_ + b_ + 1;
    if (static_cast<int>(chosen_.size()) == needed) {
      if (acyclic()) visit_(validate_bipartite_tree(a_, b_, chosen_));
      return;
    }
    const std::size_t left = needed - chosen_.size();
    for (std::size_t c = next; c + left <= candidates_.size(); ++c) {
      chosen_.push_back(candidates_[c]);
      if (acyclic()) extend(c + 1);
      chosen_.pop_back();
    }
  }

  bool acyclic() const {
    detail::UnionFind forest(a_ + b_ + 2);
    for (const auto& [i, j] : chosen_)
      if (forest.unite(i, a_ + 1 + j) < 0) return false;
    return true;
  }

  int a_;
  int b_;
  const std::function<void(const BipartiteTree&)>& visit_;
  std::vector<BipartiteEdge> candidates_;
  std::vector<BipartiteEdge> chosen_;
};

}  // namespace

void for_each_hypertree(int n, int k, const std::function<void(const Hypertree&)>& visit,
                        const OracleBounds& bounds) {
  check_bound(n, bounds.max_n, "n");
  if (n < 0) throw Error(ErrorKind::ProfileMismatch, "negative n");
  if (k < 1) throw Error(ErrorKind::ProfileMismatch, "need k >= 1");
  if (k > n) return;
  HypertreeSearch(n, k, visit).run();
}

std::vector<Hypertree> enumerate_hypertrees(int n, int k, const OracleBounds& bounds) {
  std::vector<Hypertree> out;
  for_each_hypertree(n, k, [&](const Hypertree& t) { out.push_back(t); }, bounds);
  return out;
}

void for_each_bipartite_tree(int a, int b,
                             const std::function<void(const BipartiteTree&)>& visit,
                             const OracleBounds& bounds) {
  check_bound(a, bounds.max_ab, "a");
  check_bound(b, bounds.max_ab, "b");
  if (a < 0 || b < 0) throw Error(ErrorKind::ProfileMismatch, "negative class size");
  BipartiteSearch(a, b, visit).run();
}

std::vector<BipartiteTree> enumerate_bipartite_trees(int a, int b, const OracleBounds& bounds) {
  std::vector<BipartiteTree> out;
  for_each_bipartite_tree(a, b, [&](const BipartiteTree& t) { out.push_back(t); }, bounds);
  return out;
}

void for_each_set_partition(int n, int k, const std::function<void(const SetPartition&)>& visit) {
  if (n < 0 || k < 0 || k > n) return;
  // Restricted growth strings: element i+1 goes to block label[i], and a
  // new block may only be opened with the next unused label.
  std::vector<int> label(n, 0);
  std::function<void(int, int)> place = [&](int i, int used) {
    if (n - i < k - used) return;
    if (i == n) {
      if (used != k) return;
      std::vector<std::vector<int>> blocks(k);
      for (int x = 0; x < n; ++x) blocks[label[x]].push_back(x + 1);
      visit(SetPartition(n, std::move(blocks)));
      return;
    }
    for (int b = 0; b <= std::min(used, k - 1); ++b) {
      label[i] = b;
      place(i + 1, b == used ? used + 1 : used);
    }
  };
  place(0, 0);
}

void for_each_word(int length, int alphabet_size,
                   const std::function<void(const std::vector<int>&)>& visit) {
  if (length < 0 || (length > 0 && alphabet_size <= 0)) return;
  std::vector<int> word(length, 0);
  for (;;) {
    visit(word);
    int i = length - 1;
    while (i >= 0 && word[i] == alphabet_size - 1) word[i--] = 0;
    if (i < 0) return;
    ++word[i];
  }
}

EnumerationReport profile_census(int n, int k, const OracleBounds& bounds) {
  const auto start = std::chrono::steady_clock::now();
  EnumerationReport report;
  report.family = "hypertree";
  report.parameters = {{"n", n}, {"k", k}};
  for_each_hypertree(
      n, k,
      [&](const Hypertree& tree) {
        std::vector<int> lambda;
        std::vector<int> mu(n + 1, -1);
        for (const auto& edge : tree.edges()) {
          lambda.push_back(static_cast<int>(edge.size()) - 1);
          for (Vertex v : edge) ++mu[v];
        }
        std::sort(lambda.begin(), lambda.end(), std::greater<>());
        report.per_profile[{std::move(lambda), std::move(mu)}] += 1;
        report.total += 1;
      },
      bounds);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

EnumerationReport bipartite_census(int a, int b, const OracleBounds& bounds) {
  const auto start = std::chrono::steady_clock::now();
  EnumerationReport report;
  report.family = "bipartite";
  report.parameters = {{"a", a}, {"b", b}};
  for_each_bipartite_tree(
      a, b,
      [&](const BipartiteTree& tree) {
        std::vector<int> alpha(a + 1, -1);
        std::vector<int> beta(b + 1, -1);
        for (const auto& [i, j] : tree.edges()) {
          ++alpha[i];
          ++beta[j];
        }
        report.per_profile[{std::move(alpha), std::move(beta)}] += 1;
        report.total += 1;
      },
      bounds);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

BigCount weighted_census(int n, int k, const OracleBounds& bounds) {
  BigCount sum = 0;
  for_each_hypertree(
      n, k,
      [&](const Hypertree& tree) {
        BigCount weight = 1;
        for (const auto& edge : tree.edges())
          for (int f = 2; f < static_cast<int>(edge.size()) - 1; ++f) weight *= f;
        sum += weight;
      },
      bounds);
  return sum;
}

}  // namespace hypertrees
