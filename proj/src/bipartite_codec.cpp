#include "hypertrees/bipartite_codec.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "detail/fenwick.hpp"
#include "detail/union_find.hpp"
#include "hypertrees/errors.hpp"

namespace hypertrees {
namespace {

// Forest on U-nodes 0..a and V-nodes a+1..a+b+1 whose components (other than
// the one holding u_0) are each rooted at a V-vertex. Roots are kept in an
// order-statistic set over V indices.
class RootedForest {
 public:
  RootedForest(int a, int b)
      : a_(a), sets_(a + b + 2), root_of_(a + b + 2, -1), roots_(b + 1), root_count_(b + 1) {
    for (int j = 0; j <= b; ++j) {
      root_of_[v_node(j)] = j;
      roots_.insert(j);
    }
  }

  /// Attaches u_i below v_j (the parent edge of u_i).
  void hang_u(int i, int j) {
    const int keep = root_of_[sets_.find(v_node(j))];
    root_of_[sets_.unite(v_node(j), i)] = keep;
  }

  /// Root (a V index) of the component of u_c.
  int root_of_u(int c) { return root_of_[sets_.find(c)]; }

  /// Rank among roots other than `excluded`.
  int rank_excluding(int root, int excluded) const {
    return roots_.rank(root) - (excluded < root ? 1 : 0);
  }

  /// Root at rank r among roots other than `excluded`; -1 if out of range.
  int select_excluding(int r, int excluded) const {
    const int index = r < roots_.rank(excluded) ? r : r + 1;
    if (r < 0 || index >= root_count_) return -1;
    return roots_.select(index);
  }

  /// Makes the root v_j a child of u_c.
  void adopt(int c, int j) {
    const int keep = root_of_u(c);
    roots_.erase(j);
    --root_count_;
    const int r = sets_.unite(c, v_node(j));
    root_of_[r] = keep;
  }

  std::vector<int> remaining_roots() const {
    std::vector<int> result;
    result.reserve(root_count_);
    for (int r = 0; r < root_count_; ++r) result.push_back(roots_.select(r));
    return result;
  }

 private:
  int v_node(int j) const { return a_ + 1 + j; }

  int a_;
  detail::UnionFind sets_;
  std::vector<int> root_of_;
  detail::OrderStatisticSet roots_;
  int root_count_;
};

}  // namespace

BipartiteCode encode_bipartite(const BipartiteTree& tree) {
  const int a = tree.a();
  const int b = tree.b();
  const int nodes = a + b + 2;
  auto v_node = [a](int j) { return a + 1 + j; };

  std::vector<std::vector<int>> adjacent(nodes);
  for (const auto& [i, j] : tree.edges()) {
    adjacent[i].push_back(v_node(j));
    adjacent[v_node(j)].push_back(i);
  }
  std::vector<int> parent(nodes, -1);
  std::vector<char> seen(nodes, 0);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = 1;
  while (!frontier.empty()) {
    const int s = frontier.front();
    frontier.pop();
    for (int t : adjacent[s]) {
      if (seen[t]) continue;
      seen[t] = 1;
      parent[t] = s;
      frontier.push(t);
    }
  }

  BipartiteCode code{a, b, std::vector<int>(a), std::vector<int>(b, 0)};
  std::vector<std::vector<int>> children(a + 1);
  for (int j = 0; j <= b; ++j) children[parent[v_node(j)]].push_back(j);

  RootedForest forest(a, b);
  for (int i = 1; i <= a; ++i) {
    code.w[i - 1] = parent[i] - (a + 1);
    forest.hang_u(i, code.w[i - 1]);
  }

  detail::OrderStatisticSet free_slots(b);
  for (int pos = 0; pos < b; ++pos) free_slots.insert(pos);
  std::vector<int> slots;
  for (int c = a; c >= 1; --c) {
    const int own_root = forest.root_of_u(c);
    slots.clear();
    for (int j : children[c]) slots.push_back(free_slots.select(forest.rank_excluding(j, own_root)));
    for (int pos : slots) {
      code.w_prime[pos] = c;
      free_slots.erase(pos);
    }
    for (int j : children[c]) forest.adopt(c, j);
  }
  return code;
}

BipartiteTree decode_bipartite(const BipartiteCode& code) {
  const int a = code.a;
  const int b = code.b;
  if (a < 0 || b < 0) throw Error(ErrorKind::BadLength, "negative class size");
  if (static_cast<int>(code.w.size()) != a) {
    throw Error(ErrorKind::BadLength, "w has length " + std::to_string(code.w.size()) +
                                          ", expected " + std::to_string(a));
  }
  if (static_cast<int>(code.w_prime.size()) != b) {
    throw Error(ErrorKind::BadLength, "w' has length " + std::to_string(code.w_prime.size()) +
                                          ", expected " + std::to_string(b));
  }
  letter_counts(code.w, b + 1);
  letter_counts(code.w_prime, a + 1);

  std::vector<std::vector<int>> positions(a + 1);
  for (int pos = 0; pos < b; ++pos) positions[code.w_prime[pos]].push_back(pos);

  std::vector<BipartiteEdge> edges;
  edges.reserve(a + b + 1);
  RootedForest forest(a, b);
  for (int i = 1; i <= a; ++i) {
    edges.emplace_back(i, code.w[i - 1]);
    forest.hang_u(i, code.w[i - 1]);
  }

  detail::OrderStatisticSet free_slots(b);
  for (int pos = 0; pos < b; ++pos) free_slots.insert(pos);
  std::vector<int> chosen;
  for (int c = a; c >= 1; --c) {
    const int own_root = forest.root_of_u(c);
    chosen.clear();
    for (int pos : positions[c]) {
      const int j = forest.select_excluding(free_slots.rank(pos), own_root);
      if (j < 0) throw Error(ErrorKind::NonTreeCode, "no component left for u_" + std::to_string(c));
      chosen.push_back(j);
    }
    for (int pos : positions[c]) free_slots.erase(pos);
    for (int j : chosen) {
      forest.adopt(c, j);
      edges.emplace_back(c, j);
    }
  }
  for (int j : forest.remaining_roots()) edges.emplace_back(0, j);

  try {
    return validate_bipartite_tree(a, b, std::move(edges));
  } catch (const Error& e) {
    throw Error(ErrorKind::NonTreeCode, e.what());
  }
}

}  // namespace hypertrees
