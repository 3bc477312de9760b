#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "polyiso/exact.hpp"

namespace polyiso {

/// A full-dimensional convex lattice polytope given by its vertex list.
///
/// Instances come from verify_vertices (which certifies that every listed point
/// is a vertex), from apply_map on a certified polytope, or from
/// assume_certified for point lists that are vertex sets by construction.
/// The vertex order is significant; lex_order gives the canonical one.
class LatticePolytope {
 public:
  /// Skips the convex-position LP checks but still validates shapes,
  /// distinctness and full dimension.
  static LatticePolytope assume_certified(std::vector<IntVec> vertices);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  const std::vector<IntVec>& vertices() const noexcept { return vertices_; }
  const IntVec& vertex(std::size_t i) const { return vertices_[i]; }

  /// Same vertex sequence (order-sensitive).
  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
  }
  friend bool operator<(const LatticePolytope& a, const LatticePolytope& b) {
    if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
    return a.vertices_ < b.vertices_;
  }

 private:
  LatticePolytope(std::size_t dim, std::vector<IntVec> vertices) : dim_(dim), vertices_(std::move(vertices)) {}
  friend class PolytopeAccess;

  std::size_t dim_ = 0;
  std::vector<IntVec> vertices_;
};

/// Why verify_vertices refused a point list.
struct VertexRejection {
  enum class Reason { Empty, DimensionMismatch, Duplicate, NotFullDimensional, NotAVertex };
  Reason reason;
  std::size_t index;  ///< First offending point (0-based).
  std::string message;
};

std::string to_string(VertexRejection::Reason reason);

using VertexCheck = std::variant<LatticePolytope, VertexRejection>;

/// Accepts iff the points are distinct, affinely span R^n and none of them is a
/// convex combination of the others (decided by exact LP feasibility).
/// The accepted polytope is returned in lex order.
VertexCheck verify_vertices(std::span<const IntVec> points);

/// Like verify_vertices but throws InvalidPolytopeError on rejection.
LatticePolytope certify_polytope(std::span<const IntVec> points);

/// Vertices sorted ascending lexicographically (first coordinate most significant).
LatticePolytope lex_order(const LatticePolytope& p);

/// Exact mean b_P of the vertices.
RatVec vertex_average(const LatticePolytope& p);

/// Centered vertices v - b_P in the polytope's vertex order.
std::vector<RatVec> centered_vertices(const LatticePolytope& p);

/// Q = sum_v (v - b_P)(v - b_P)^t. Symmetric positive definite for full-dimensional P.
RatMatrix quadratic_form(const LatticePolytope& p);

/// True iff every leading principal minor is positive.
bool is_positive_definite(const RatMatrix& q);

/// The polytope's 1-skeleton on vertex indices.
class EdgeGraph {
 public:
  EdgeGraph() = default;
  EdgeGraph(std::size_t vertex_count, std::vector<std::pair<std::size_t, std::size_t>> edges);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  /// Sorted pairs (i, j) with i < j.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
  /// Sorted neighbour list.
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_[v]; }
  bool has_edge(std::size_t a, std::size_t b) const;
  std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }
  bool is_connected() const;

  friend bool operator==(const EdgeGraph& a, const EdgeGraph& b) { return a.edges_ == b.edges_ && a.adjacency_.size() == b.adjacency_.size(); }

 private:
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// [v_i, v_j] is an edge iff the midpoint admits no convex representation
/// that puts weight on any other vertex (LP optimum zero).
bool is_edge(const LatticePolytope& p, std::size_t i, std::size_t j);

EdgeGraph edge_graph(const LatticePolytope& p);

/// {U v + Z}, re-sorted into lex order.
LatticePolytope apply_map(const LatticePolytope& p, const UnimodularAffineMap& t);

/// Vertex sets equal regardless of order.
bool same_vertex_set(const LatticePolytope& a, const LatticePolytope& b);

}  // namespace polyiso
