#pragma once

// Vertex-labeled graphs and trees: spanning trees, label-preserving
// tree isomorphism and its enumeration.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "polyiso/exact.hpp"
#include "polyiso/polytope.hpp"

namespace polyiso {

inline constexpr std::size_t kDefaultCap = 100000;

/// Edge graph with a positive label per vertex; weight(i, j) = label(i) + label(j).
struct LabeledGraph {
  EdgeGraph graph;
  std::vector<Int> labels;
  std::vector<Int> weights;  ///< Parallel to graph.edges().

  LabeledGraph() = default;
  LabeledGraph(EdgeGraph g, std::vector<Int> vertex_labels);
};

class LabeledTree {
 public:
  LabeledTree() = default;
  /// Throws PreconditionError unless the edges form a spanning tree.
  LabeledTree(std::size_t vertex_count, std::vector<std::pair<std::size_t, std::size_t>> edges,
              std::vector<Int> labels);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
  const std::vector<Int>& labels() const noexcept { return labels_; }
  const Int& label(std::size_t v) const { return labels_[v]; }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_[v]; }
  std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }
  bool has_edge(std::size_t a, std::size_t b) const;

  friend bool operator==(const LabeledTree& a, const LabeledTree& b) {
    return a.edges_ == b.edges_ && a.labels_ == b.labels_;
  }
  friend bool operator<(const LabeledTree& a, const LabeledTree& b) {
    if (a.edges_ != b.edges_) return a.edges_ < b.edges_;
    return a.labels_ < b.labels_;
  }

 private:
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<Int> labels_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// phi[v] is the image of vertex v.
using IsoMap = std::vector<std::size_t>;

/// Kruskal with ties broken by (weight, i, j).
LabeledTree mst(const LabeledGraph& gw);

/// Every minimum spanning tree, sorted by edge list. Throws CapExceededError
/// when more than `cap` trees exist.
std::vector<LabeledTree> all_msts(const LabeledGraph& gw, std::size_t cap = kDefaultCap);

/// New labels assigned by one round of the leaf-peeling isomorphism check.
struct LptRound {
  /// (vertex, new label), ascending by vertex.
  std::vector<std::pair<std::size_t, std::size_t>> first;
  std::vector<std::pair<std::size_t, std::size_t>> second;
};

struct LptResult {
  bool isomorphic = false;
  /// Round whose multiset gate failed; 0 is the leaf gate.
  std::optional<std::size_t> failed_round;
  std::vector<LptRound> rounds;
};

/// Label-preserving isomorphism check for trees by repeated leaf peeling.
/// Leaves get new labels by rank of their own label; interior vertices get
/// new labels by rank of the tentative label (label, sorted neighbour new
/// labels), equal tentative labels sharing a new label.
LptResult lpt_run(const LabeledTree& t1, const LabeledTree& t2);
bool lpt_check(const LabeledTree& t1, const LabeledTree& t2);

/// Every adjacency- and label-preserving bijection t1 -> t2, sorted.
/// Throws CapExceededError past `cap` maps.
std::vector<IsoMap> enumerate_label_isos(const LabeledTree& t1, const LabeledTree& t2, std::size_t cap = kDefaultCap);

std::vector<IsoMap> tree_automorphisms(const LabeledTree& t, std::size_t cap = kDefaultCap);

}  // namespace polyiso
