#include "polyiso/reduction.hpp"

#include <algorithm>
#include <numeric>

namespace polyiso {

SimpleGraph::SimpleGraph(std::size_t node_count, std::vector<std::pair<std::size_t, std::size_t>> edges)
    : n_(node_count) {
  for (auto& [a, b] : edges) {
    if (a >= n_ || b >= n_) throw PreconditionError("edge endpoint out of range");
    if (a == b) throw PreconditionError("self-loop on node " + std::to_string(a + 1));
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) throw PreconditionError("duplicate edge");
  edges_ = std::move(edges);
}

bool SimpleGraph::has_edge(std::size_t a, std::size_t b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(a, b));
}

SimpleGraph augment_universal(const SimpleGraph& g) {
  if (g.edges().empty()) throw PreconditionError("augmentation applies to graphs with at least one edge");
  auto edges = g.edges();
  const std::size_t u = g.node_count();
  for (std::size_t i = 0; i < u; ++i) edges.emplace_back(i, u);
  return SimpleGraph(u + 1, std::move(edges));
}

LatticePolytope graph_to_polytope(const SimpleGraph& g) {
  const std::size_t n = g.node_count();
  if (n == 0) throw PreconditionError("graph has no nodes");
  std::vector<IntVec> points;
  points.reserve(1 + n + g.edges().size());
  points.emplace_back(n);
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n);
    e[i] = 1;
    points.push_back(std::move(e));
  }
  for (const auto& [i, j] : g.edges()) {
    IntVec e(n);
    e[i] = 1;
    e[j] = 1;
    points.push_back(std::move(e));
  }
  auto res = verify_vertices(points);
  if (auto* bad = std::get_if<VertexRejection>(&res)) {
    throw Error("graph polytope construction failed: " + bad->message);
  }
  return std::get<LatticePolytope>(std::move(res));
}

ReductionResult reduce_gip_to_uip(const SimpleGraph& g, const SimpleGraph& gp) {
  const bool empty_g = g.edges().empty();
  const bool empty_gp = gp.edges().empty();
  if (empty_g && empty_gp) return g.node_count() == gp.node_count();
  if (empty_g != empty_gp) return false;
  return std::make_pair(graph_to_polytope(augment_universal(g)), graph_to_polytope(augment_universal(gp)));
}

std::optional<std::vector<std::size_t>> gip_bruteforce(const SimpleGraph& g, const SimpleGraph& gp) {
  if (g.node_count() > 8 || gp.node_count() > 8) throw SizeLimitError("brute-force isomorphism is limited to 8 nodes");
  if (g.node_count() != gp.node_count() || g.edges().size() != gp.edges().size()) return std::nullopt;
  std::vector<std::size_t> pi(g.node_count());
  std::iota(pi.begin(), pi.end(), std::size_t{0});
  do {
    bool ok = true;
    for (const auto& [i, j] : g.edges()) {
      if (!gp.has_edge(pi[i], pi[j])) {
        ok = false;
        break;
      }
    }
    if (ok) return pi;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return std::nullopt;
}

IntMatrix permutation_matrix(const std::vector<std::size_t>& pi) {
  IntMatrix m(pi.size(), pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i) m(pi[i], i) = 1;
  return m;
}

}  // namespace polyiso
