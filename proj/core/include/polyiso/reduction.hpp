#pragma once

// Graphs to lattice polytopes, and the graph-isomorphism reduction.

#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "polyiso/polytope.hpp"

namespace polyiso {

/// Undirected simple graph on nodes 0..n-1.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  /// Throws PreconditionError on self-loops, duplicates or out-of-range nodes.
  SimpleGraph(std::size_t node_count, std::vector<std::pair<std::size_t, std::size_t>> edges);

  std::size_t node_count() const noexcept { return n_; }
  /// Sorted pairs (i, j), i < j.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
  bool has_edge(std::size_t a, std::size_t b) const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// Adds node n adjacent to every original node. Requires a nonempty edge set.
SimpleGraph augment_universal(const SimpleGraph& g);

/// conv({0, e_1..e_n} and e_i + e_j for each edge), certified vertex by vertex.
LatticePolytope graph_to_polytope(const SimpleGraph& g);

/// Either a decided answer (edgeless cases) or the polytope pair for the
/// augmented graphs.
using ReductionResult = std::variant<bool, std::pair<LatticePolytope, LatticePolytope>>;

ReductionResult reduce_gip_to_uip(const SimpleGraph& g, const SimpleGraph& gp);

/// Node bijection pi with {pi(i), pi(j)} an edge of gp iff {i, j} is an edge of g,
/// or nullopt. Throws SizeLimitError beyond 8 nodes.
std::optional<std::vector<std::size_t>> gip_bruteforce(const SimpleGraph& g, const SimpleGraph& gp);

/// Permutation matrix M with M e_i = e_{pi(i)}.
IntMatrix permutation_matrix(const std::vector<std::size_t>& pi);

}  // namespace polyiso
