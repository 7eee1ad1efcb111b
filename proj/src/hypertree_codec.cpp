#include "hypertrees/hypertree_codec.hpp"

#include <algorithm>
#include <string>

#include "detail/fenwick.hpp"
#include "detail/union_find.hpp"
#include "hypertrees/errors.hpp"

namespace hypertrees {
namespace {

struct MarkedBlocks {
  std::vector<std::vector<int>> blocks;  // aligned with tree.edges()
  std::vector<Vertex> marks;
};

MarkedBlocks split_marks(const Hypertree& tree) {
  if (tree.k() == 0) throw Error(ErrorKind::EmptyTree, "tree has no hyperedges");
  MarkedBlocks result{{}, marked_vertices(tree)};
  result.blocks.reserve(tree.edges().size());
  for (std::size_t e = 0; e < tree.edges().size(); ++e) {
    std::vector<int> block;
    block.reserve(tree.edges()[e].size() - 1);
    for (Vertex v : tree.edges()[e])
      if (v != result.marks[e]) block.push_back(v);
    result.blocks.push_back(std::move(block));
  }
  return result;
}

// Merged groups of blocks, indexed by block id, with the block minima kept in
// an order-statistic set so that ranks by minimum are exact after every merge.
class BlockGroups {
 public:
  BlockGroups(int n, const std::vector<std::vector<int>>& blocks)
      : sets_(static_cast<int>(blocks.size())),
        min_(blocks.size()),
        by_min_(n + 1, -1),
        minima_(n + 1) {
    for (int id = 0; id < static_cast<int>(blocks.size()); ++id) {
      min_[id] = blocks[id].front();
      by_min_[min_[id]] = id;
      minima_.insert(min_[id]);
    }
  }

  int find(int id) { return sets_.find(id); }
  int min_of(int group) const { return min_[group]; }

  /// Rank by minimum of `group` among all groups other than `excluded`.
  int rank_excluding(int group, int excluded) const {
    const int m = min_[group];
    return minima_.rank(m) - (min_[excluded] < m ? 1 : 0);
  }

  /// Group at rank r (by minimum) among all groups other than `excluded`.
  int select_excluding(int r, int excluded) const {
    const int skip = minima_.rank(min_[excluded]);
    return by_min_[minima_.select(r < skip ? r : r + 1)];
  }

  /// Merges `others` into `target`; returns the new representative.
  int merge(int target, const std::vector<int>& others) {
    int root = target;
    int m = min_[target];
    minima_.erase(m);
    for (int g : others) {
      minima_.erase(min_[g]);
      m = std::min(m, min_[g]);
      root = sets_.unite(root, g);
    }
    min_[root] = m;
    by_min_[m] = root;
    minima_.insert(m);
    return root;
  }

 private:
  detail::UnionFind sets_;
  std::vector<int> min_;
  std::vector<int> by_min_;
  detail::OrderStatisticSet minima_;
};

}  // namespace

SetPartition partition_of(const Hypertree& tree) {
  return SetPartition(tree.n(), split_marks(tree).blocks);
}

HypertreeCode encode(const Hypertree& tree) {
  auto [blocks, marks] = split_marks(tree);
  const int n = tree.n();
  const int k = tree.k();

  std::vector<int> unmarked_in(n + 1, -1);
  std::vector<std::vector<int>> marked_at(n + 1);
  for (int id = 0; id < k; ++id) {
    for (int v : blocks[id]) unmarked_in[v] = id;
    marked_at[marks[id]].push_back(id);
  }

  BlockGroups groups(n, blocks);
  detail::OrderStatisticSet free_slots(std::max(k - 1, 0));
  for (int pos = 0; pos < k - 1; ++pos) free_slots.insert(pos);

  CodeWord word(k - 1, 0);
  std::vector<int> hanging;
  std::vector<int> slots;
  for (Vertex a = n; a >= 1; --a) {
    if (marked_at[a].empty()) continue;
    const int home = groups.find(unmarked_in[a]);
    hanging.clear();
    slots.clear();
    for (int id : marked_at[a]) {
      const int g = groups.find(id);
      hanging.push_back(g);
      slots.push_back(free_slots.select(groups.rank_excluding(g, home)));
    }
    for (int pos : slots) {
      word[pos] = a;
      free_slots.erase(pos);
    }
    groups.merge(home, hanging);
  }

  SetPartition partition(n, std::move(blocks));
  return {std::move(partition), std::move(word)};
}

Hypertree decode(const HypertreeCode& code) {
  const SetPartition& partition = code.partition;
  const int n = partition.n();
  const int k = partition.k();
  if (k == 0) throw Error(ErrorKind::EmptyTree, "partition has no blocks");
  if (static_cast<int>(code.word.size()) != k - 1) {
    throw Error(ErrorKind::BadWordLength, "word has length " + std::to_string(code.word.size()) +
                                              ", expected " + std::to_string(k - 1));
  }

  const auto counts = letter_counts(code.word, n + 1);
  std::vector<std::vector<int>> positions(n + 1);
  for (int pos = 0; pos < k - 1; ++pos) positions[code.word[pos]].push_back(pos);

  const auto& blocks = partition.blocks();
  std::vector<int> block_of(n + 1, -1);
  for (int id = 0; id < k; ++id)
    for (int v : blocks[id]) block_of[v] = id;

  BlockGroups groups(n, blocks);
  // The block of a merged group whose hyperedge takes the group's mark.
  std::vector<int> heir(k);
  for (int id = 0; id < k; ++id) heir[id] = id;
  std::vector<Vertex> mark(k, -1);

  detail::OrderStatisticSet free_slots(std::max(k - 1, 0));
  for (int pos = 0; pos < k - 1; ++pos) free_slots.insert(pos);

  std::vector<int> hanging;
  for (Vertex a = n; a >= 1; --a) {
    if (counts[a] == 0) continue;
    const int home = groups.find(block_of[a]);
    hanging.clear();
    for (int pos : positions[a]) {
      const int g = groups.select_excluding(free_slots.rank(pos), home);
      mark[heir[g]] = a;
      hanging.push_back(g);
    }
    for (int pos : positions[a]) free_slots.erase(pos);
    const int home_heir = heir[home];
    heir[groups.merge(home, hanging)] = home_heir;
  }
  for (int id = 0; id < k; ++id) {
    const int g = groups.find(id);
    if (g == id && mark[heir[g]] < 0) mark[heir[g]] = 0;
  }

  std::vector<Hyperedge> edges;
  edges.reserve(k);
  for (int id = 0; id < k; ++id) {
    Hyperedge edge = blocks[id];
    edge.push_back(mark[id]);
    edges.push_back(std::move(edge));
  }
  return validate_hypertree(Hypergraph(n, std::move(edges)));
}

}  // namespace hypertrees
