#include "polyiso/polytope.hpp"

#include <algorithm>
#include <set>

#include "polyiso/simplex.hpp"

namespace polyiso {

class PolytopeAccess {
 public:
  static LatticePolytope make(std::size_t dim, std::vector<IntVec> vertices) {
    return LatticePolytope(dim, std::move(vertices));
  }
};

namespace {

std::optional<VertexRejection> check_shape(std::span<const IntVec> points) {
  if (points.empty()) return VertexRejection{VertexRejection::Reason::Empty, 0, "empty point list"};
  const std::size_t n = points.front().size();
  if (n == 0) return VertexRejection{VertexRejection::Reason::DimensionMismatch, 0, "zero-dimensional point"};
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != n) {
      return VertexRejection{VertexRejection::Reason::DimensionMismatch, i,
                             "point " + std::to_string(i) + " has dimension " + std::to_string(points[i].size()) +
                                 ", expected " + std::to_string(n)};
    }
  }
  std::set<IntVec> seen;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!seen.insert(points[i]).second) {
      return VertexRejection{VertexRejection::Reason::Duplicate, i, "duplicate point " + to_string(points[i])};
    }
  }
  if (affine_rank(points) != n) {
    // Report the first point that fails to raise the affine rank.
    std::size_t bad = points.size() - 1;
    std::size_t r = 0;
    for (std::size_t i = 1; i < points.size(); ++i) {
      const std::size_t next = affine_rank(points.subspan(0, i + 1));
      if (next == r) {
        bad = i;
        break;
      }
      r = next;
    }
    return VertexRejection{VertexRejection::Reason::NotFullDimensional, bad,
                           "points do not affinely span dimension " + std::to_string(n)};
  }
  return std::nullopt;
}

// Is target a convex combination of `others`?
bool in_convex_hull(const IntVec& target, const std::vector<const IntVec*>& others) {
  const std::size_t n = target.size();
  const std::size_t k = others.size();
  RatMatrix lhs(n + 1, k);
  RatVec rhs(n + 1);
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t r = 0; r < n; ++r) lhs(r, c) = Rat((*others[c])[r]);
    lhs(n, c) = 1;
  }
  for (std::size_t r = 0; r < n; ++r) rhs[r] = Rat(target[r]);
  rhs[n] = 1;
  return simplex_max(RatVec(k), lhs, rhs).status != LpStatus::Infeasible;
}

}  // namespace

std::string to_string(VertexRejection::Reason reason) {
  switch (reason) {
    case VertexRejection::Reason::Empty: return "empty";
    case VertexRejection::Reason::DimensionMismatch: return "dimension-mismatch";
    case VertexRejection::Reason::Duplicate: return "duplicate";
    case VertexRejection::Reason::NotFullDimensional: return "not-full-dimensional";
    case VertexRejection::Reason::NotAVertex: return "not-a-vertex";
  }
  return "unknown";
}

LatticePolytope LatticePolytope::assume_certified(std::vector<IntVec> vertices) {
  if (auto bad = check_shape(vertices)) throw InvalidPolytopeError(bad->message);
  const std::size_t n = vertices.front().size();
  return LatticePolytope(n, std::move(vertices));
}

VertexCheck verify_vertices(std::span<const IntVec> points) {
  if (auto bad = check_shape(points)) return *bad;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<const IntVec*> others;
    others.reserve(points.size() - 1);
    for (std::size_t j = 0; j < points.size(); ++j)
      if (j != i) others.push_back(&points[j]);
    if (in_convex_hull(points[i], others)) {
      return VertexRejection{VertexRejection::Reason::NotAVertex, i,
                             "point " + to_string(points[i]) + " is a convex combination of the others"};
    }
  }
  std::vector<IntVec> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.front().size();
  return PolytopeAccess::make(n, std::move(sorted));
}

LatticePolytope certify_polytope(std::span<const IntVec> points) {
  auto res = verify_vertices(points);
  if (auto* bad = std::get_if<VertexRejection>(&res)) {
    throw InvalidPolytopeError("point " + std::to_string(bad->index) + " (" + to_string(bad->reason) +
                               "): " + bad->message);
  }
  return std::get<LatticePolytope>(std::move(res));
}

LatticePolytope lex_order(const LatticePolytope& p) {
  std::vector<IntVec> v = p.vertices();
  std::sort(v.begin(), v.end());
  return PolytopeAccess::make(p.dim(), std::move(v));
}

RatVec vertex_average(const LatticePolytope& p) {
  if (p.vertex_count() == 0) throw PreconditionError("vertex average of an empty polytope");
  RatVec b(p.dim());
  for (const auto& v : p.vertices())
    for (std::size_t i = 0; i < p.dim(); ++i) b[i] += v[i];
  const Rat d(static_cast<unsigned long>(p.vertex_count()));
  for (auto& x : b) x /= d;
  return b;
}

std::vector<RatVec> centered_vertices(const LatticePolytope& p) {
  const RatVec b = vertex_average(p);
  std::vector<RatVec> out;
  out.reserve(p.vertex_count());
  for (const auto& v : p.vertices()) out.push_back(to_rat(v) - b);
  return out;
}

RatMatrix quadratic_form(const LatticePolytope& p) {
  const std::size_t n = p.dim();
  RatMatrix q(n, n);
  for (const auto& w : centered_vertices(p))
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) q(i, j) += w[i] * w[j];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) q(i, j) = q(j, i);
  if (!is_positive_definite(q)) throw DefinitenessError("quadratic form of a degenerate polytope");
  return q;
}

bool is_positive_definite(const RatMatrix& q) {
  if (!q.is_square()) return false;
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (q(i, j) != q(j, i)) return false;
  for (std::size_t k = 1; k <= q.rows(); ++k) {
    RatMatrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = q(i, j);
    if (det(minor) <= 0) return false;
  }
  return true;
}

EdgeGraph::EdgeGraph(std::size_t vertex_count, std::vector<std::pair<std::size_t, std::size_t>> edges)
    : adjacency_(vertex_count) {
  for (auto& [a, b] : edges) {
    if (a == b || a >= vertex_count || b >= vertex_count) throw DimensionError("invalid edge endpoint");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  for (const auto& [a, b] : edges_) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

bool EdgeGraph::has_edge(std::size_t a, std::size_t b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(a, b));
}

bool EdgeGraph::is_connected() const {
  if (adjacency_.empty()) return true;
  std::vector<bool> seen(adjacency_.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == adjacency_.size();
}

bool is_edge(const LatticePolytope& p, std::size_t i, std::size_t j) {
  const std::size_t n = p.dim();
  const std::size_t d = p.vertex_count();
  // Variables are lambda_0..lambda_{d-1}; the midpoint is scaled by 2 to stay integral.
  RatMatrix lhs(n + 1, d);
  RatVec rhs(n + 1);
  RatVec objective(d);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t r = 0; r < n; ++r) lhs(r, k) = Rat(2 * p.vertex(k)[r]);
    lhs(n, k) = 1;
    if (k != i && k != j) objective[k] = 1;
  }
  for (std::size_t r = 0; r < n; ++r) rhs[r] = Rat(p.vertex(i)[r] + p.vertex(j)[r]);
  rhs[n] = 1;
  const LpResult res = simplex_max(objective, lhs, rhs);
  return res.status == LpStatus::Optimal && res.optimum == 0;
}

EdgeGraph edge_graph(const LatticePolytope& p) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < p.vertex_count(); ++i)
    for (std::size_t j = i + 1; j < p.vertex_count(); ++j)
      if (is_edge(p, i, j)) edges.emplace_back(i, j);
  return EdgeGraph(p.vertex_count(), std::move(edges));
}

LatticePolytope apply_map(const LatticePolytope& p, const UnimodularAffineMap& t) {
  if (t.dim() != p.dim()) throw DimensionError("map dimension differs from polytope dimension");
  std::vector<IntVec> image;
  image.reserve(p.vertex_count());
  for (const auto& v : p.vertices()) image.push_back(t.apply(v));
  std::sort(image.begin(), image.end());
  return PolytopeAccess::make(p.dim(), std::move(image));
}

bool same_vertex_set(const LatticePolytope& a, const LatticePolytope& b) {
  if (a.dim() != b.dim() || a.vertex_count() != b.vertex_count()) return false;
  return lex_order(a).vertices() == lex_order(b).vertices();
}

}  // namespace polyiso
