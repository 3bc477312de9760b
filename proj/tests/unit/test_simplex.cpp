#include <gtest/gtest.h>

#include "corpus.hpp"
#include "polyiso/simplex.hpp"

using namespace polyiso;
using namespace polyiso::testing;

namespace {

// Optimum over basic feasible solutions: every choice of linearly
// independent columns that solves the system with nonnegative values.
std::optional<Rat> vertex_enumeration(const RatVec& c, const RatMatrix& a, const RatVec& b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::optional<Rat> best;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < n; ++j)
      if ((mask >> j) & 1) cols.push_back(j);
    if (cols.size() > m) continue;
    RatMatrix sub(m, cols.size());
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t k = 0; k < cols.size(); ++k) sub(r, k) = a(r, cols[k]);
    if (rank(sub) != cols.size()) continue;
    RatVec x(cols.size());
    if (!cols.empty()) {
      const RatMatrix st = sub.transpose();
      x = inverse_rational(st * sub) * (st * b);
    }
    if (sub * x != b) continue;
    bool nonneg = true;
    for (const auto& v : x) nonneg = nonneg && v >= 0;
    if (!nonneg) continue;
    Rat val = 0;
    for (std::size_t k = 0; k < cols.size(); ++k) val += c[cols[k]] * x[k];
    if (!best || val > *best) best = val;
  }
  return best;
}

}  // namespace

TEST(Simplex, SimpleMaximum) {
  const auto res = simplex_max(RatVec{1, 0}, RatMatrix{{1, 1}}, RatVec{1});
  ASSERT_EQ(res.status, LpStatus::Optimal);
  EXPECT_EQ(res.optimum, 1);
  EXPECT_EQ(res.witness, (RatVec{1, 0}));
}

TEST(Simplex, Infeasible) {
  EXPECT_EQ(simplex_max(RatVec{1}, RatMatrix{{1}}, RatVec{-1}).status, LpStatus::Infeasible);
}

TEST(Simplex, Unbounded) {
  EXPECT_EQ(simplex_max(RatVec{1, 0}, RatMatrix{{1, -1}}, RatVec{0}).status, LpStatus::Unbounded);
}

TEST(Simplex, SquareDiagonalMidpoint) {
  // Vertices (0,0),(0,1),(1,0),(1,1); the midpoint of the diagonal (0,0)-(1,1)
  // scaled by two. Weight on the other two vertices can reach 1.
  const RatMatrix a{{0, 0, 2, 2}, {0, 2, 0, 2}, {1, 1, 1, 1}};
  const auto res = simplex_max(RatVec{0, 1, 1, 0}, a, RatVec{1, 1, 1});
  ASSERT_EQ(res.status, LpStatus::Optimal);
  EXPECT_EQ(res.optimum, 1);
}

TEST(Simplex, DimensionErrors) {
  EXPECT_THROW(simplex_max(RatVec{1}, RatMatrix{{1, 1}}, RatVec{1}), DimensionError);
  EXPECT_THROW(simplex_max(RatVec{1, 1}, RatMatrix{{1, 1}}, RatVec{1, 2}), DimensionError);
}

TEST(Simplex, AgreesWithVertexEnumeration) {
  Rng rng(20, "lp");
  std::size_t optimal = 0;
  for (int k = 0; k < 400; ++k) {
    const std::size_t m = 1 + rng.below(3);
    const std::size_t n = 1 + rng.below(4);
    RatMatrix a(m, n);
    RatVec b(m), c(n);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t j = 0; j < n; ++j) a(r, j) = Rat(uniform(rng, -4, 4), 2);
      b[r] = Rat(uniform(rng, -2, 6), 2);
    }
    for (auto& x : c) x = Rat(uniform(rng, -3, 3), 1);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t j = 0; j < n; ++j) a(r, j).canonicalize();
      b[r].canonicalize();
    }
    const auto res = simplex_max(c, a, b);
    const auto oracle = vertex_enumeration(c, a, b);
    if (!oracle) {
      EXPECT_EQ(res.status, LpStatus::Infeasible);
      continue;
    }
    ASSERT_NE(res.status, LpStatus::Infeasible);
    if (res.status == LpStatus::Optimal) {
      ++optimal;
      EXPECT_EQ(res.optimum, *oracle);
      EXPECT_EQ(a * res.witness, b);
      for (const auto& x : res.witness) EXPECT_GE(x, 0);
    }
  }
  EXPECT_GT(optimal, 50u);
}
