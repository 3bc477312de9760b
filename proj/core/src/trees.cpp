#include "polyiso/trees.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace polyiso {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

struct WeightedEdge {
  Int weight;
  std::size_t a;
  std::size_t b;
};

std::vector<WeightedEdge> sorted_edges(const LabeledGraph& gw) {
  std::vector<WeightedEdge> out;
  const auto& e = gw.graph.edges();
  out.reserve(e.size());
  for (std::size_t k = 0; k < e.size(); ++k) out.push_back({gw.weights[k], e[k].first, e[k].second});
  std::sort(out.begin(), out.end(), [](const WeightedEdge& x, const WeightedEdge& y) {
    if (x.weight != y.weight) return x.weight < y.weight;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  });
  return out;
}

void require_connected(const LabeledGraph& gw) {
  if (!gw.graph.is_connected()) throw PreconditionError("spanning trees need a connected graph");
}

std::vector<std::vector<std::size_t>> tree_adjacency(std::size_t n,
                                                     const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

}  // namespace

LabeledGraph::LabeledGraph(EdgeGraph g, std::vector<Int> vertex_labels)
    : graph(std::move(g)), labels(std::move(vertex_labels)) {
  if (labels.size() != graph.vertex_count()) throw DimensionError("one label per vertex required");
  weights.reserve(graph.edges().size());
  for (const auto& [a, b] : graph.edges()) weights.push_back(labels[a] + labels[b]);
}

LabeledTree::LabeledTree(std::size_t vertex_count, std::vector<std::pair<std::size_t, std::size_t>> edges,
                         std::vector<Int> labels)
    : labels_(std::move(labels)) {
  if (labels_.size() != vertex_count) throw DimensionError("one label per vertex required");
  if (vertex_count > 0 && edges.size() != vertex_count - 1) throw PreconditionError("a spanning tree has n-1 edges");
  UnionFind uf(vertex_count);
  for (auto& [a, b] : edges) {
    if (a >= vertex_count || b >= vertex_count || a == b) throw PreconditionError("invalid tree edge");
    if (a > b) std::swap(a, b);
    if (!uf.unite(a, b)) throw PreconditionError("tree edges contain a cycle");
  }
  std::sort(edges.begin(), edges.end());
  edges_ = std::move(edges);
  adjacency_ = tree_adjacency(vertex_count, edges_);
}

bool LabeledTree::has_edge(std::size_t a, std::size_t b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(a, b));
}

LabeledTree mst(const LabeledGraph& gw) {
  require_connected(gw);
  const std::size_t n = gw.graph.vertex_count();
  UnionFind uf(n);
  std::vector<std::pair<std::size_t, std::size_t>> chosen;
  for (const auto& e : sorted_edges(gw)) {
    if (uf.unite(e.a, e.b)) chosen.emplace_back(e.a, e.b);
  }
  return LabeledTree(n, std::move(chosen), gw.labels);
}

std::vector<LabeledTree> all_msts(const LabeledGraph& gw, std::size_t cap) {
  require_connected(gw);
  const std::size_t n = gw.graph.vertex_count();
  const auto edges = sorted_edges(gw);

  // Every MST restricted to the edges of weight < w connects exactly the same
  // components, so each weight class contributes an independent choice: a
  // maximal acyclic subset of the class in the graph contracted by the
  // lighter classes.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> partial(1);
  UnionFind base(n);
  std::size_t start = 0;
  while (start < edges.size()) {
    std::size_t stop = start;
    while (stop < edges.size() && edges[stop].weight == edges[start].weight) ++stop;

    std::vector<std::pair<std::size_t, std::size_t>> contracted;
    std::vector<std::size_t> original;
    for (std::size_t k = start; k < stop; ++k) {
      const std::size_t ca = base.find(edges[k].a);
      const std::size_t cb = base.find(edges[k].b);
      if (ca != cb) {
        contracted.emplace_back(ca, cb);
        original.push_back(k);
      }
    }
    std::size_t rank = 0;
    {
      UnionFind probe = base;
      for (const auto& [a, b] : contracted) rank += probe.unite(a, b) ? 1 : 0;
    }

    std::vector<std::vector<std::size_t>> options;
    std::vector<std::size_t> pick;
    std::function<void(std::size_t, UnionFind&)> choose = [&](std::size_t idx, UnionFind& uf) {
      if (pick.size() == rank) {
        options.push_back(pick);
        if (options.size() > cap) throw CapExceededError("more than " + std::to_string(cap) + " minimum spanning trees");
        return;
      }
      if (contracted.size() - idx < rank - pick.size()) return;
      const auto [a, b] = contracted[idx];
      if (uf.find(a) != uf.find(b)) {
        UnionFind next = uf;
        next.unite(a, b);
        pick.push_back(original[idx]);
        choose(idx + 1, next);
        pick.pop_back();
      }
      choose(idx + 1, uf);
    };
    UnionFind root = base;
    if (rank > 0) choose(0, root);

    if (!options.empty()) {
      if (partial.size() * options.size() > cap) {
        throw CapExceededError("more than " + std::to_string(cap) + " minimum spanning trees");
      }
      std::vector<std::vector<std::pair<std::size_t, std::size_t>>> next;
      next.reserve(partial.size() * options.size());
      for (const auto& p : partial) {
        for (const auto& opt : options) {
          auto t = p;
          for (std::size_t k : opt) t.emplace_back(edges[k].a, edges[k].b);
          next.push_back(std::move(t));
        }
      }
      partial = std::move(next);
    }
    for (std::size_t k = start; k < stop; ++k) base.unite(edges[k].a, edges[k].b);
    start = stop;
  }

  std::vector<LabeledTree> out;
  out.reserve(partial.size());
  for (auto& t : partial) out.emplace_back(n, std::move(t), gw.labels);
  std::sort(out.begin(), out.end());
  return out;
}

LptResult lpt_run(const LabeledTree& t1, const LabeledTree& t2) {
  LptResult res;
  const std::size_t n = t1.vertex_count();
  if (n != t2.vertex_count()) {
    res.failed_round = 0;
    return res;
  }
  if (n == 0) {
    res.isomorphic = true;
    return res;
  }
  const LabeledTree* trees[2] = {&t1, &t2};
  std::vector<std::optional<std::size_t>> fresh[2] = {std::vector<std::optional<std::size_t>>(n),
                                                      std::vector<std::optional<std::size_t>>(n)};

  // Leaves.
  std::vector<Int> leaf_labels[2];
  std::vector<std::size_t> leaves[2];
  for (int t = 0; t < 2; ++t) {
    for (std::size_t v = 0; v < n; ++v) {
      if (trees[t]->degree(v) <= 1) {
        leaves[t].push_back(v);
        leaf_labels[t].push_back(trees[t]->label(v));
      }
    }
    std::sort(leaf_labels[t].begin(), leaf_labels[t].end());
  }
  if (leaf_labels[0] != leaf_labels[1]) {
    res.failed_round = 0;
    return res;
  }
  std::vector<Int> distinct = leaf_labels[0];
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  LptRound first_round;
  for (int t = 0; t < 2; ++t) {
    auto& out = t == 0 ? first_round.first : first_round.second;
    for (std::size_t v : leaves[t]) {
      const auto pos = std::lower_bound(distinct.begin(), distinct.end(), trees[t]->label(v)) - distinct.begin();
      fresh[t][v] = static_cast<std::size_t>(pos) + 1;
      out.emplace_back(v, *fresh[t][v]);
    }
  }
  res.rounds.push_back(std::move(first_round));
  std::size_t next_label = distinct.size() + 1;

  using Tentative = std::pair<Int, std::vector<std::size_t>>;
  for (;;) {
    bool pending = false;
    for (int t = 0; t < 2; ++t)
      for (std::size_t v = 0; v < n; ++v) pending = pending || !fresh[t][v];
    if (!pending) break;

    std::vector<std::pair<Tentative, std::size_t>> tent[2];
    for (int t = 0; t < 2; ++t) {
      for (std::size_t v = 0; v < n; ++v) {
        if (fresh[t][v]) continue;
        std::size_t unlabeled = 0;
        std::vector<std::size_t> nb;
        for (std::size_t w : trees[t]->neighbors(v)) {
          if (fresh[t][w]) {
            nb.push_back(*fresh[t][w]);
          } else {
            ++unlabeled;
          }
        }
        if (unlabeled > 1) continue;
        std::sort(nb.begin(), nb.end());
        tent[t].push_back({Tentative{trees[t]->label(v), std::move(nb)}, v});
      }
    }
    std::vector<Tentative> ms[2];
    for (int t = 0; t < 2; ++t) {
      for (const auto& [tl, v] : tent[t]) ms[t].push_back(tl);
      std::sort(ms[t].begin(), ms[t].end());
    }
    if (ms[0] != ms[1] || ms[0].empty()) {
      res.failed_round = res.rounds.size();
      return res;
    }
    std::vector<Tentative> uniq = ms[0];
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    LptRound round;
    for (int t = 0; t < 2; ++t) {
      auto& out = t == 0 ? round.first : round.second;
      for (const auto& [tl, v] : tent[t]) {
        const auto pos = std::lower_bound(uniq.begin(), uniq.end(), tl) - uniq.begin();
        fresh[t][v] = next_label + static_cast<std::size_t>(pos);
        out.emplace_back(v, *fresh[t][v]);
      }
    }
    next_label += uniq.size();
    res.rounds.push_back(std::move(round));
  }
  res.isomorphic = true;
  return res;
}

bool lpt_check(const LabeledTree& t1, const LabeledTree& t2) { return lpt_run(t1, t2).isomorphic; }

namespace {

std::vector<std::size_t> tree_centers(const LabeledTree& t) {
  const std::size_t n = t.vertex_count();
  if (n <= 2) {
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), std::size_t{0});
    return all;
  }
  std::vector<std::size_t> deg(n);
  std::vector<std::size_t> layer;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<std::size_t> next;
    for (std::size_t v : layer) {
      for (std::size_t w : t.neighbors(v)) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

class CodeBook {
 public:
  std::size_t code(const Int& label, std::vector<std::size_t> child_codes) {
    std::sort(child_codes.begin(), child_codes.end());
    auto key = std::make_pair(label, std::move(child_codes));
    auto it = book_.find(key);
    if (it != book_.end()) return it->second;
    const std::size_t id = book_.size();
    book_.emplace(std::move(key), id);
    return id;
  }

 private:
  std::map<std::pair<Int, std::vector<std::size_t>>, std::size_t> book_;
};

struct Rooted {
  std::vector<std::size_t> code;
  /// Children of each vertex, sorted by (code, index).
  std::vector<std::vector<std::size_t>> children;
};

Rooted root_tree(const LabeledTree& t, std::size_t root, CodeBook& book) {
  const std::size_t n = t.vertex_count();
  Rooted r{std::vector<std::size_t>(n), std::vector<std::vector<std::size_t>>(n)};
  std::vector<std::size_t> order;
  std::vector<std::size_t> parent(n, n);
  order.reserve(n);
  order.push_back(root);
  parent[root] = root;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::size_t v = order[k];
    for (std::size_t w : t.neighbors(v)) {
      if (parent[w] == n) {
        parent[w] = v;
        r.children[v].push_back(w);
        order.push_back(w);
      }
    }
  }
  for (std::size_t k = order.size(); k-- > 0;) {
    const std::size_t v = order[k];
    std::vector<std::size_t> cc;
    for (std::size_t w : r.children[v]) cc.push_back(r.code[w]);
    r.code[v] = book.code(t.label(v), std::move(cc));
    std::sort(r.children[v].begin(), r.children[v].end(), [&](std::size_t a, std::size_t b) {
      return std::make_pair(r.code[a], a) < std::make_pair(r.code[b], b);
    });
  }
  return r;
}

class IsoEnumerator {
 public:
  IsoEnumerator(const Rooted& a, const Rooted& b, std::size_t n, std::size_t cap, std::vector<IsoMap>& out)
      : a_(a), b_(b), phi_(n), cap_(cap), out_(out) {}

  void run(std::size_t ra, std::size_t rb) {
    work_.emplace_back(ra, rb);
    phi_[ra] = rb;
    expand(0);
  }

 private:
  void expand(std::size_t pos) {
    if (pos == work_.size()) {
      out_.push_back(phi_);
      if (out_.size() > cap_) throw CapExceededError("more than " + std::to_string(cap_) + " tree isomorphisms");
      return;
    }
    const auto [u, v] = work_[pos];
    // Children arrive sorted by code, so equal-code groups are contiguous and aligned.
    std::vector<std::pair<std::size_t, std::size_t>> groups;
    const auto& ca = a_.children[u];
    for (std::size_t k = 0; k < ca.size();) {
      std::size_t e = k;
      while (e < ca.size() && a_.code[ca[e]] == a_.code[ca[k]]) ++e;
      groups.emplace_back(k, e);
      k = e;
    }
    match_group(pos, u, v, groups, 0);
  }

  void match_group(std::size_t pos, std::size_t u, std::size_t v,
                   const std::vector<std::pair<std::size_t, std::size_t>>& groups, std::size_t g) {
    if (g == groups.size()) {
      expand(pos + 1);
      return;
    }
    const auto [lo, hi] = groups[g];
    const auto& ca = a_.children[u];
    const auto& cb = b_.children[v];
    std::vector<std::size_t> perm(cb.begin() + static_cast<std::ptrdiff_t>(lo), cb.begin() + static_cast<std::ptrdiff_t>(hi));
    std::sort(perm.begin(), perm.end());
    do {
      for (std::size_t k = lo; k < hi; ++k) {
        work_.emplace_back(ca[k], perm[k - lo]);
        phi_[ca[k]] = perm[k - lo];
      }
      match_group(pos, u, v, groups, g + 1);
      work_.resize(work_.size() - (hi - lo));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  const Rooted& a_;
  const Rooted& b_;
  IsoMap phi_;
  std::size_t cap_;
  std::vector<IsoMap>& out_;
  std::vector<std::pair<std::size_t, std::size_t>> work_;
};

}  // namespace

std::vector<IsoMap> enumerate_label_isos(const LabeledTree& t1, const LabeledTree& t2, std::size_t cap) {
  std::vector<IsoMap> out;
  const std::size_t n = t1.vertex_count();
  if (n != t2.vertex_count()) return out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  const auto c1 = tree_centers(t1);
  const auto c2 = tree_centers(t2);
  if (c1.size() != c2.size()) return out;
  CodeBook book;
  const Rooted a = root_tree(t1, c1.front(), book);
  for (std::size_t r2 : c2) {
    const Rooted b = root_tree(t2, r2, book);
    if (a.code[c1.front()] != b.code[r2]) continue;
    IsoEnumerator(a, b, n, cap, out).run(c1.front(), r2);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IsoMap> tree_automorphisms(const LabeledTree& t, std::size_t cap) {
  return enumerate_label_isos(t, t, cap);
}

}  // namespace polyiso
