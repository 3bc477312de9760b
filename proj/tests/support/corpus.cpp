#include "corpus.hpp"

#include <algorithm>
#include <numeric>

namespace polyiso::testing {

LatticePolytope make(std::vector<IntVec> points) { return certify_polytope(points); }

IntVec iv(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

LatticePolytope unit_square() { return make({iv({0, 0}), iv({0, 1}), iv({1, 0}), iv({1, 1})}); }

LatticePolytope unit_simplex(std::size_t n) {
  std::vector<IntVec> pts{IntVec(n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    pts.push_back(e);
  }
  return make(pts);
}

LatticePolytope unit_cube(std::size_t n) {
  std::vector<IntVec> pts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    IntVec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = (mask >> i) & 1;
    pts.push_back(v);
  }
  return make(pts);
}

std::vector<NamedPolytope> seed_polytopes() {
  std::vector<NamedPolytope> out;
  out.push_back({"simplex2", unit_simplex(2)});
  out.push_back({"square", unit_square()});
  out.push_back({"sheared-square", make({iv({0, 0}), iv({1, 0}), iv({1, 1}), iv({2, 1})})});
  out.push_back({"diamond", make({iv({1, 0}), iv({0, 1}), iv({-1, 0}), iv({0, -1})})});
  out.push_back({"hexagon", make({iv({1, 0}), iv({0, 1}), iv({-1, 1}), iv({-1, 0}), iv({0, -1}), iv({1, -1})})});
  out.push_back({"trapezoid", make({iv({0, 0}), iv({2, 0}), iv({1, 1}), iv({0, 1})})});
  out.push_back({"wide-triangle", make({iv({0, 0}), iv({2, 0}), iv({0, 1})})});
  out.push_back({"pentagon", make({iv({0, 0}), iv({2, 0}), iv({2, 1}), iv({1, 2}), iv({0, 1})})});
  out.push_back({"rectangle", make({iv({0, 0}), iv({2, 0}), iv({0, 1}), iv({2, 1})})});
  out.push_back({"simplex3", unit_simplex(3)});
  out.push_back({"cube", unit_cube(3)});
  out.push_back({"octahedron", make({iv({1, 0, 0}), iv({-1, 0, 0}), iv({0, 1, 0}), iv({0, -1, 0}), iv({0, 0, 1}),
                                     iv({0, 0, -1})})});
  out.push_back({"prism", make({iv({0, 0, 0}), iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1}), iv({1, 0, 1}),
                                iv({0, 1, 1})})});
  out.push_back({"pyramid", make({iv({0, 0, 0}), iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 1, 0}), iv({0, 0, 1})})});
  out.push_back({"graph-path3", graph_to_polytope(SimpleGraph(3, {{0, 1}, {1, 2}}))});
  out.push_back({"graph-k3", graph_to_polytope(SimpleGraph(3, {{0, 1}, {1, 2}, {0, 2}}))});
  out.push_back({"graph-edge+node", graph_to_polytope(SimpleGraph(3, {{0, 1}}))});
  out.push_back({"graph-k2", graph_to_polytope(SimpleGraph(2, {{0, 1}}))});
  return out;
}

long uniform(Rng& rng, long lo, long hi) {
  return lo + static_cast<long>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
}

UnimodularMatrix random_unimodular(std::size_t n, Rng& rng, std::size_t steps) {
  if (steps == 0) steps = 2 * n + 2;
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t s = 0; s < steps; ++s) {
    const std::size_t i = rng.below(n);
    std::size_t j = rng.below(n);
    switch (rng.below(3)) {
      case 0:
        if (n > 1) {
          if (j == i) j = (i + 1) % n;
          const long k = rng.bit() ? 1 : -1;
          IntMatrix next = m;
          for (std::size_t c = 0; c < n; ++c) next(i, c) += k * m(j, c);
          bool small = true;
          for (const auto& x : next.data()) small = small && abs(x) <= 6;
          if (small) m = std::move(next);
        }
        break;
      case 1:
        for (std::size_t c = 0; c < n; ++c) std::swap(m(i, c), m(j, c));
        break;
      default:
        for (std::size_t c = 0; c < n; ++c) m(i, c) = -m(i, c);
        break;
    }
  }
  return UnimodularMatrix(std::move(m));
}

UnimodularAffineMap random_map(std::size_t n, Rng& rng) {
  IntVec z(n);
  for (auto& x : z) x = uniform(rng, -5, 5);
  return UnimodularAffineMap(random_unimodular(n, rng), std::move(z));
}

std::optional<LatticePolytope> random_hull(std::size_t n, long box, std::size_t points, std::size_t min_d,
                                           std::size_t max_d, Rng& rng) {
  std::vector<IntVec> pts;
  for (std::size_t k = 0; k < points; ++k) {
    IntVec v(n);
    for (auto& x : v) x = uniform(rng, 0, box);
    if (std::find(pts.begin(), pts.end(), v) == pts.end()) pts.push_back(std::move(v));
  }
  for (;;) {
    auto res = verify_vertices(pts);
    if (auto* p = std::get_if<LatticePolytope>(&res)) {
      if (p->vertex_count() < min_d || p->vertex_count() > max_d) return std::nullopt;
      return *p;
    }
    const auto& bad = std::get<VertexRejection>(res);
    if (bad.reason != VertexRejection::Reason::NotAVertex) return std::nullopt;
    pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(bad.index));
  }
}

IntMatrix random_nonsingular(std::size_t n, long bound, Rng& rng) {
  for (;;) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = uniform(rng, -bound, bound);
    if (det(m) != 0) return m;
  }
}

std::vector<SimpleGraph> all_graphs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::vector<SimpleGraph> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if ((mask >> k) & 1) edges.push_back(slots[k]);
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

SimpleGraph random_graph(std::size_t n, Rng& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.bit()) edges.emplace_back(i, j);
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph relabel(const SimpleGraph& g, const std::vector<std::size_t>& pi) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& [i, j] : g.edges()) edges.emplace_back(std::min(pi[i], pi[j]), std::max(pi[i], pi[j]));
  return SimpleGraph(g.node_count(), std::move(edges));
}

std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng) {
  std::vector<std::size_t> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(pi[i - 1], pi[rng.below(i)]);
  return pi;
}

}  // namespace polyiso::testing
