#include <gtest/gtest.h>

#include <algorithm>

#include "corpus.hpp"
#include "polyiso/polytope.hpp"
#include "polyiso/reduction.hpp"

using namespace polyiso;
using namespace polyiso::testing;

TEST(LexOrder, SortsAndIsIdempotent) {
  const auto p = LatticePolytope::assume_certified({iv({1, 0}), iv({0, 0}), iv({0, 1})});
  const auto q = lex_order(p);
  EXPECT_EQ(q.vertices(), (std::vector<IntVec>{iv({0, 0}), iv({0, 1}), iv({1, 0})}));
  EXPECT_EQ(lex_order(q), q);
}

TEST(LexOrder, MatchesSortOracleOnShuffles) {
  Rng rng(30, "lex");
  const auto hex = seed_polytopes()[4].p;
  ASSERT_EQ(hex.vertex_count(), 6u);
  for (int k = 0; k < 20; ++k) {
    std::vector<IntVec> pts = hex.vertices();
    for (std::size_t i = pts.size(); i > 1; --i) std::swap(pts[i - 1], pts[rng.below(i)]);
    std::vector<IntVec> sorted = pts;
    std::stable_sort(sorted.begin(), sorted.end(), [](const IntVec& a, const IntVec& b) {
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    EXPECT_EQ(lex_order(LatticePolytope::assume_certified(pts)).vertices(), sorted);
  }
}

TEST(VertexAverage, Symmetric) {
  EXPECT_EQ(vertex_average(unit_simplex(2)), (RatVec{Rat(1, 3), Rat(1, 3)}));
  EXPECT_EQ(vertex_average(unit_square()), (RatVec{Rat(1, 2), Rat(1, 2)}));
}

TEST(VertexAverage, DegenerateSegmentIsRejectedEarlier) {
  EXPECT_THROW(certify_polytope(std::vector<IntVec>{iv({0, 0}), iv({3, 0})}), InvalidPolytopeError);
}

TEST(QuadraticForm, Simplex) {
  EXPECT_EQ(quadratic_form(unit_simplex(2)), (RatMatrix{{Rat(2, 3), Rat(-1, 3)}, {Rat(-1, 3), Rat(2, 3)}}));
}

TEST(QuadraticForm, Square) { EXPECT_EQ(quadratic_form(unit_square()), RatMatrix::identity(2)); }

TEST(QuadraticForm, CongruenceUnderMaps) {
  Rng rng(31, "qf");
  for (const auto& s : seed_polytopes()) {
    const auto t = random_map(s.p.dim(), rng);
    const RatMatrix U = to_rat(t.U.matrix());
    EXPECT_EQ(quadratic_form(apply_map(s.p, t)), U * quadratic_form(s.p) * U.transpose()) << s.name;
  }
}

TEST(QuadraticForm, OrderInvariant) {
  const auto p = LatticePolytope::assume_certified({iv({1, 1}), iv({0, 0}), iv({1, 0}), iv({0, 1})});
  EXPECT_EQ(quadratic_form(p), quadratic_form(unit_square()));
}

TEST(PositiveDefinite, Basic) {
  EXPECT_TRUE(is_positive_definite(RatMatrix{{2, 1}, {1, 2}}));
  EXPECT_FALSE(is_positive_definite(RatMatrix{{1, 2}, {2, 1}}));
  EXPECT_FALSE(is_positive_definite(RatMatrix{{1, 0}, {1, 1}}));
}

TEST(VerifyVertices, AcceptsSquare) {
  const std::vector<IntVec> pts{iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})};
  EXPECT_TRUE(std::holds_alternative<LatticePolytope>(verify_vertices(pts)));
}

TEST(VerifyVertices, RejectsMidpoint) {
  const std::vector<IntVec> pts{iv({0, 0}), iv({2, 0}), iv({1, 0})};
  const auto res = verify_vertices(pts);
  ASSERT_TRUE(std::holds_alternative<VertexRejection>(res));
  // The three points are collinear, so full dimension fails first.
  EXPECT_EQ(std::get<VertexRejection>(res).reason, VertexRejection::Reason::NotFullDimensional);
}

TEST(VerifyVertices, RejectsInteriorPoint) {
  const std::vector<IntVec> pts{iv({0, 0}), iv({2, 0}), iv({1, 0}), iv({0, 2})};
  const auto res = verify_vertices(pts);
  ASSERT_TRUE(std::holds_alternative<VertexRejection>(res));
  EXPECT_EQ(std::get<VertexRejection>(res).reason, VertexRejection::Reason::NotAVertex);
  EXPECT_EQ(std::get<VertexRejection>(res).index, 2u);
}

TEST(VerifyVertices, RejectsDuplicatesAndRaggedInput) {
  std::vector<IntVec> dup{iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 0})};
  EXPECT_EQ(std::get<VertexRejection>(verify_vertices(dup)).reason, VertexRejection::Reason::Duplicate);
  std::vector<IntVec> ragged{iv({0, 0}), iv({1, 0, 0})};
  EXPECT_EQ(std::get<VertexRejection>(verify_vertices(ragged)).reason, VertexRejection::Reason::DimensionMismatch);
  EXPECT_EQ(std::get<VertexRejection>(verify_vertices(std::vector<IntVec>{})).reason, VertexRejection::Reason::Empty);
}

TEST(VerifyVertices, GraphPolytopeOfAugmentedTriangle) {
  // Triangle plus a universal node: 1 + 4 + 6 points, all vertices.
  const SimpleGraph h = augment_universal(SimpleGraph(3, {{0, 1}, {1, 2}, {0, 2}}));
  EXPECT_EQ(graph_to_polytope(h).vertex_count(), 11u);
}

TEST(EdgeGraph, KnownSkeletons) {
  const auto sq = edge_graph(unit_square());
  EXPECT_EQ(sq.edges().size(), 4u);
  EXPECT_FALSE(sq.has_edge(0, 3));  // (0,0)-(1,1)
  EXPECT_FALSE(sq.has_edge(1, 2));  // (0,1)-(1,0)
  EXPECT_EQ(edge_graph(unit_simplex(2)).edges().size(), 3u);
  const auto cube = edge_graph(unit_cube(3));
  EXPECT_EQ(cube.edges().size(), 12u);
  for (std::size_t v = 0; v < 8; ++v) EXPECT_EQ(cube.degree(v), 3u);
}

TEST(EdgeGraph, ConnectedWithDegreeAtLeastDimension) {
  for (const auto& s : seed_polytopes()) {
    const auto g = edge_graph(s.p);
    EXPECT_TRUE(g.is_connected()) << s.name;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) EXPECT_GE(g.degree(v), s.p.dim()) << s.name;
  }
}

TEST(EdgeGraph, InvariantUnderMaps) {
  Rng rng(32, "edges");
  for (const auto& s : seed_polytopes()) {
    const auto t = random_map(s.p.dim(), rng);
    const auto image = apply_map(s.p, t);
    const auto g = edge_graph(s.p);
    const auto gi = edge_graph(image);
    ASSERT_EQ(g.edges().size(), gi.edges().size());
    auto index_of = [&](const IntVec& v) {
      return static_cast<std::size_t>(std::find(image.vertices().begin(), image.vertices().end(), v) -
                                      image.vertices().begin());
    };
    for (const auto& [i, j] : g.edges()) {
      EXPECT_TRUE(gi.has_edge(index_of(t.apply(s.p.vertex(i))), index_of(t.apply(s.p.vertex(j))))) << s.name;
    }
  }
}

TEST(ApplyMap, Examples) {
  const auto sq = unit_square();
  EXPECT_EQ(apply_map(sq, UnimodularAffineMap::identity(2)), sq);
  EXPECT_EQ(apply_map(sq, {UnimodularMatrix(IntMatrix{{0, -1}, {1, 0}}), iv({1, 0})}), sq);
  const auto sheared = apply_map(sq, {UnimodularMatrix(IntMatrix{{1, 1}, {0, 1}}), iv({0, 0})});
  EXPECT_EQ(sheared.vertices(), (std::vector<IntVec>{iv({0, 0}), iv({1, 0}), iv({1, 1}), iv({2, 1})}));
}

TEST(ApplyMap, DimensionMismatch) {
  EXPECT_THROW(apply_map(unit_square(), UnimodularAffineMap::identity(3)), DimensionError);
}
