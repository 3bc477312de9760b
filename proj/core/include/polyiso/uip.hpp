#pragma once

// Deciding and enumerating unimodular isomorphisms between lattice polytopes.

#include <optional>
#include <vector>

#include "polyiso/exact.hpp"
#include "polyiso/polytope.hpp"
#include "polyiso/trees.hpp"

namespace polyiso {

/// det of sum_k (v_k - v)(v_k - v)^t over the g-neighbours v_k of vertex v.
Int vertex_label(const LatticePolytope& p, const EdgeGraph& g, std::size_t v);

LabeledGraph labeled_graph(const LatticePolytope& p);

/// Builds U = W' W^{-1} from n independent centered vertices of P and their
/// images under phi; returns (U, Z) when U is unimodular and carries the
/// centered vertex set of P onto that of P'.
std::optional<UnimodularAffineMap> verify_candidate(const LatticePolytope& p, const LatticePolytope& pp,
                                                    const IsoMap& phi);

/// How all_transforms walks the candidate vertex maps.
enum class SearchStrategy {
  /// One MST T of GW(P), every MST T'_j of GW(P'), every label-preserving
  /// isomorphism T -> T'_j.
  MstEnumeration,
  /// Label-preserving embeddings of T into GW(P'): the same candidate maps,
  /// generated without listing the MSTs, and cut short once an affine basis
  /// of P is mapped (the rest of the map is then forced).
  TreeEmbedding,
  /// MstEnumeration, switching to TreeEmbedding when a cap is exceeded.
  Auto,
};

struct UipOptions {
  std::size_t cap_trees = kDefaultCap;
  std::size_t cap_maps = kDefaultCap;
  SearchStrategy strategy = SearchStrategy::Auto;
};

/// All (U, Z) with U P + Z = P', sorted and deduplicated.
std::vector<UnimodularAffineMap> all_transforms(const LatticePolytope& p, const LatticePolytope& pp,
                                                const UipOptions& options = {});

/// Some (U, Z) with U P + Z = P', or nullopt.
std::optional<UnimodularAffineMap> find_transform(const LatticePolytope& p, const LatticePolytope& pp,
                                                  const UipOptions& options = {});

bool decide(const LatticePolytope& p, const LatticePolytope& pp, const UipOptions& options = {});

/// Independent brute force: fixes one affinely independent (n+1)-tuple of P
/// and solves for (U, Z) against every ordered (n+1)-tuple of P'.
/// Limited to d <= 10 and n <= 3.
std::vector<UnimodularAffineMap> oracle_all_transforms(const LatticePolytope& p, const LatticePolytope& pp);

}  // namespace polyiso
