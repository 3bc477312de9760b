#include "polyiso/uip.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace polyiso {

namespace {

std::vector<RatVec> sorted_centered(const LatticePolytope& p, const RatMatrix* U) {
  std::vector<RatVec> out;
  out.reserve(p.vertex_count());
  for (auto& w : centered_vertices(p)) out.push_back(U ? (*U) * w : std::move(w));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> lex_indices(const LatticePolytope& p) {
  std::vector<std::size_t> idx(p.vertex_count());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return p.vertex(a) < p.vertex(b); });
  return idx;
}

// Greedy choice of indices whose vectors are linearly independent.
std::vector<std::size_t> greedy_independent(const std::vector<RatVec>& vecs, const std::vector<std::size_t>& order,
                                            std::size_t n) {
  std::vector<std::size_t> chosen;
  std::vector<RatVec> cols;
  for (std::size_t k : order) {
    cols.push_back(vecs[k]);
    if (rank(RatMatrix::from_columns(cols, n)) == cols.size()) {
      chosen.push_back(k);
      if (chosen.size() == n) break;
    } else {
      cols.pop_back();
    }
  }
  return chosen;
}

bool is_permutation_of(const IsoMap& phi, std::size_t d) {
  if (phi.size() != d) return false;
  std::vector<bool> seen(d, false);
  for (std::size_t x : phi) {
    if (x >= d || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

Int tree_weight(const LabeledTree& t) {
  Int w;
  for (const auto& [a, b] : t.edges()) w += t.label(a) + t.label(b);
  return w;
}

std::vector<Int> sorted_labels(const LabeledGraph& g) {
  auto l = g.labels;
  std::sort(l.begin(), l.end());
  return l;
}

// Affine map determined by basis points p_{b_0..b_n} and their images.
std::optional<UnimodularAffineMap> affine_from_basis(const LatticePolytope& p, const LatticePolytope& pp,
                                                     const std::vector<std::size_t>& basis, const RatMatrix& d_inv,
                                                     const std::vector<std::size_t>& images) {
  const std::size_t n = p.dim();
  RatMatrix dp(n, n);
  const IntVec& q0 = pp.vertex(images[0]);
  for (std::size_t c = 0; c < n; ++c) {
    const IntVec& q = pp.vertex(images[c + 1]);
    for (std::size_t r = 0; r < n; ++r) dp(r, c) = Rat(q[r] - q0[r]);
  }
  auto u = to_int(dp * d_inv);
  if (!u || !is_unimodular(*u)) return std::nullopt;
  IntVec z = q0 - (*u) * p.vertex(basis[0]);
  UnimodularAffineMap t(UnimodularMatrix(std::move(*u)), std::move(z));
  if (!(apply_map(p, t) == lex_order(pp))) return std::nullopt;
  return t;
}

struct AffineBasis {
  std::vector<std::size_t> points;  ///< n+1 vertex indices
  RatMatrix d_inv;                  ///< inverse of [p_i - p_0]
};

AffineBasis affine_basis(const LatticePolytope& p, const std::vector<std::size_t>& order) {
  const std::size_t n = p.dim();
  AffineBasis b;
  b.points.push_back(order.front());
  std::vector<RatVec> cols;
  const IntVec& p0 = p.vertex(order.front());
  for (std::size_t k = 1; k < order.size() && cols.size() < n; ++k) {
    cols.push_back(to_rat(p.vertex(order[k]) - p0));
    if (rank(RatMatrix::from_columns(cols, n)) == cols.size()) {
      b.points.push_back(order[k]);
    } else {
      cols.pop_back();
    }
  }
  if (cols.size() != n) throw InvalidPolytopeError("polytope is not full-dimensional");
  b.d_inv = inverse_rational(RatMatrix::from_columns(cols, n));
  return b;
}

class EmbeddingSearch {
 public:
  EmbeddingSearch(const LatticePolytope& p, const LatticePolytope& pp, const LabeledTree& t, const LabeledGraph& gwp,
                  bool stop_at_first)
      : p_(p), pp_(pp), t_(t), gwp_(gwp), stop_(stop_at_first) {
    const std::size_t d = p.vertex_count();
    // BFS order of the tree from vertex 0.
    parent_.assign(d, d);
    order_.push_back(0);
    parent_[0] = 0;
    for (std::size_t k = 0; k < order_.size(); ++k) {
      for (std::size_t w : t.neighbors(order_[k])) {
        if (parent_[w] == d) {
          parent_[w] = order_[k];
          order_.push_back(w);
        }
      }
    }
    basis_ = affine_basis(p, order_);
    // Depth after which every basis point is mapped.
    for (std::size_t k = 0; k < order_.size(); ++k) {
      if (std::find(basis_.points.begin(), basis_.points.end(), order_[k]) != basis_.points.end()) ready_ = k + 1;
    }
    phi_.assign(d, d);
    used_.assign(d, false);
  }

  std::set<UnimodularAffineMap> run() {
    for (std::size_t q = 0; q < pp_.vertex_count() && !done(); ++q) {
      if (gwp_.labels[q] != t_.label(order_[0])) continue;
      assign(order_[0], q);
      descend(1);
      unassign(order_[0], q);
    }
    return std::move(found_);
  }

 private:
  bool done() const { return stop_ && !found_.empty(); }

  void assign(std::size_t v, std::size_t q) {
    phi_[v] = q;
    used_[q] = true;
  }
  void unassign(std::size_t v, std::size_t q) {
    phi_[v] = p_.vertex_count();
    used_[q] = false;
  }

  void descend(std::size_t k) {
    if (done()) return;
    if (k == ready_) {
      std::vector<std::size_t> images;
      for (std::size_t b : basis_.points) images.push_back(phi_[b]);
      auto t = affine_from_basis(p_, pp_, basis_.points, basis_.d_inv, images);
      if (!t) return;
      // The partial map must agree with the forced one.
      for (std::size_t j = 0; j < k; ++j) {
        const std::size_t v = order_[j];
        if (t->apply(p_.vertex(v)) != pp_.vertex(phi_[v])) return;
      }
      found_.insert(std::move(*t));
      return;
    }
    const std::size_t v = order_[k];
    const std::size_t image_of_parent = phi_[parent_[v]];
    for (std::size_t q : gwp_.graph.neighbors(image_of_parent)) {
      if (used_[q] || gwp_.labels[q] != t_.label(v)) continue;
      assign(v, q);
      descend(k + 1);
      unassign(v, q);
      if (done()) return;
    }
  }

  const LatticePolytope& p_;
  const LatticePolytope& pp_;
  const LabeledTree& t_;
  const LabeledGraph& gwp_;
  bool stop_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> parent_;
  AffineBasis basis_;
  std::size_t ready_ = 0;
  IsoMap phi_;
  std::vector<bool> used_;
  std::set<UnimodularAffineMap> found_;
};

std::set<UnimodularAffineMap> search(const LatticePolytope& p, const LatticePolytope& pp, const UipOptions& options,
                                     bool stop_at_first) {
  std::set<UnimodularAffineMap> found;
  if (p.dim() != pp.dim() || p.vertex_count() != pp.vertex_count()) return found;

  const LabeledGraph gw = labeled_graph(p);
  const LabeledGraph gwp = labeled_graph(pp);
  if (sorted_labels(gw) != sorted_labels(gwp)) return found;
  const LabeledTree t = mst(gw);

  auto by_embedding = [&]() {
    if (tree_weight(t) != tree_weight(mst(gwp))) return std::set<UnimodularAffineMap>{};
    return EmbeddingSearch(p, pp, t, gwp, stop_at_first).run();
  };

  if (options.strategy == SearchStrategy::TreeEmbedding) return by_embedding();

  try {
    for (const LabeledTree& tj : all_msts(gwp, options.cap_trees)) {
      if (!lpt_check(t, tj)) continue;
      for (const IsoMap& phi : enumerate_label_isos(t, tj, options.cap_maps)) {
        if (auto m = verify_candidate(p, pp, phi)) {
          found.insert(std::move(*m));
          if (stop_at_first) return found;
        }
      }
    }
  } catch (const CapExceededError&) {
    if (options.strategy != SearchStrategy::Auto) throw;
    return by_embedding();
  }
  return found;
}

}  // namespace

Int vertex_label(const LatticePolytope& p, const EdgeGraph& g, std::size_t v) {
  const std::size_t n = p.dim();
  IntMatrix a(n, n);
  const IntVec& x = p.vertex(v);
  for (std::size_t k : g.neighbors(v)) {
    const IntVec diff = p.vertex(k) - x;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) += diff[i] * diff[j];
  }
  return det(a);
}

LabeledGraph labeled_graph(const LatticePolytope& p) {
  EdgeGraph g = edge_graph(p);
  std::vector<Int> labels;
  labels.reserve(p.vertex_count());
  for (std::size_t v = 0; v < p.vertex_count(); ++v) labels.push_back(vertex_label(p, g, v));
  return LabeledGraph(std::move(g), std::move(labels));
}

std::optional<UnimodularAffineMap> verify_candidate(const LatticePolytope& p, const LatticePolytope& pp,
                                                    const IsoMap& phi) {
  const std::size_t n = p.dim();
  if (pp.dim() != n || pp.vertex_count() != p.vertex_count()) return std::nullopt;
  if (!is_permutation_of(phi, p.vertex_count())) throw PreconditionError("phi is not a vertex bijection");

  const std::vector<RatVec> w = centered_vertices(p);
  const std::vector<RatVec> wp = centered_vertices(pp);
  const std::vector<std::size_t> chosen = greedy_independent(w, lex_indices(p), n);
  if (chosen.size() != n) throw InvalidPolytopeError("centered vertices do not span R^n");

  std::vector<RatVec> cols;
  std::vector<RatVec> cols_image;
  for (std::size_t k : chosen) {
    cols.push_back(w[k]);
    cols_image.push_back(wp[phi[k]]);
  }
  const RatMatrix u_rat = RatMatrix::from_columns(cols_image, n) * inverse_rational(RatMatrix::from_columns(cols, n));
  auto u = to_int(u_rat);
  if (!u || !is_unimodular(*u)) return std::nullopt;
  if (sorted_centered(p, &u_rat) != sorted_centered(pp, nullptr)) return std::nullopt;

  auto z = to_int(vertex_average(pp) - u_rat * vertex_average(p));
  if (!z) throw Error("translation of a verified candidate is not integral");
  return UnimodularAffineMap(UnimodularMatrix(std::move(*u)), std::move(*z));
}

std::vector<UnimodularAffineMap> all_transforms(const LatticePolytope& p, const LatticePolytope& pp,
                                                const UipOptions& options) {
  auto found = search(p, pp, options, false);
  return std::vector<UnimodularAffineMap>(found.begin(), found.end());
}

std::optional<UnimodularAffineMap> find_transform(const LatticePolytope& p, const LatticePolytope& pp,
                                                  const UipOptions& options) {
  auto found = search(p, pp, options, true);
  if (found.empty()) return std::nullopt;
  return *found.begin();
}

bool decide(const LatticePolytope& p, const LatticePolytope& pp, const UipOptions& options) {
  return find_transform(p, pp, options).has_value();
}

std::vector<UnimodularAffineMap> oracle_all_transforms(const LatticePolytope& p, const LatticePolytope& pp) {
  if (p.vertex_count() > 10 || pp.vertex_count() > 10) throw SizeLimitError("oracle is limited to d <= 10");
  if (p.dim() > 3 || pp.dim() > 3) throw SizeLimitError("oracle is limited to n <= 3");
  std::vector<UnimodularAffineMap> out;
  if (p.dim() != pp.dim() || p.vertex_count() != pp.vertex_count()) return out;

  const std::size_t n = p.dim();
  const std::size_t d = p.vertex_count();
  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), std::size_t{0});
  const AffineBasis basis = affine_basis(p, order);

  std::set<UnimodularAffineMap> found;
  std::vector<std::size_t> images;
  std::vector<bool> used(d, false);
  auto rec = [&](auto&& self) -> void {
    if (images.size() == n + 1) {
      if (auto t = affine_from_basis(p, pp, basis.points, basis.d_inv, images)) found.insert(std::move(*t));
      return;
    }
    for (std::size_t q = 0; q < d; ++q) {
      if (used[q]) continue;
      used[q] = true;
      images.push_back(q);
      self(self);
      images.pop_back();
      used[q] = false;
    }
  };
  rec(rec);
  return std::vector<UnimodularAffineMap>(found.begin(), found.end());
}

}  // namespace polyiso
