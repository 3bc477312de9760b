#include <gtest/gtest.h>

#include "corpus.hpp"
#include "polyiso/avgcase.hpp"
#include "polyiso/hnf.hpp"

using namespace polyiso;
using namespace polyiso::testing;

TEST(PolyTime, IdentityY) {
  const auto p = unit_simplex(2);
  const auto r = polytime(p, IntMatrix::identity(2));
  EXPECT_EQ(r.U.matrix(), IntMatrix::identity(2));
  const auto centered = centered_vertices(p);
  for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(r.P1.col(k), centered[k]);
}

TEST(PolyTime, RightMultiplication) {
  Rng rng(50, "polytime");
  const auto p = unit_simplex(2);
  for (int k = 0; k < 50; ++k) {
    const IntMatrix Y = random_nonsingular(2, 6, rng);
    const auto A = random_unimodular(2, rng);
    EXPECT_EQ(polytime(p, Y * A.matrix()).U, polytime(p, Y).U * A);
  }
}

TEST(PolyTime, CanonicalQuotient) {
  Rng rng(51, "polytime-shape");
  const auto p = unit_simplex(2);
  for (int k = 0; k < 50; ++k) {
    const IntMatrix Y = random_nonsingular(2, 6, rng);
    const auto r = polytime(p, Y);
    const auto T = to_int(to_rat(Y) * inverse_rational(r.U.matrix()));
    ASSERT_TRUE(T.has_value());
    EXPECT_TRUE(is_canonical_lower_hnf(*T));
  }
}

TEST(PolyTime, SingularThrows) {
  EXPECT_THROW(polytime(unit_simplex(2), IntMatrix{{1, 1}, {1, 1}}), SingularMatrixError);
}

TEST(Extract, HandExecutionOnSimplex) {
  // Centered simplex vertices in lex order: (-1/3,-1/3), (-1/3,2/3), (2/3,-1/3).
  // Translating the first to the origin gives back the unit simplex.
  const auto p = unit_simplex(2);
  const auto r = extract(p, IntMatrix::identity(2), iv({0, 0}));
  EXPECT_EQ(r.R, p);
  EXPECT_EQ(r.U.matrix(), IntMatrix::identity(2));
  EXPECT_EQ(r.Z, iv({0, 0}));
}

TEST(Extract, TranslationFromZ) {
  const auto p = unit_simplex(2);
  const auto r = extract(p, IntMatrix::identity(2), iv({3, -1}));
  EXPECT_EQ(r.R.vertices(), (std::vector<IntVec>{iv({3, -1}), iv({3, 0}), iv({4, -1})}));
  EXPECT_EQ(r.Z, iv({3, -1}));
}

TEST(Extract, ContractReplay) {
  Rng rng(52, "extract");
  const auto seeds = seed_polytopes();
  for (int k = 0; k < 100; ++k) {
    const auto& p = seeds[rng.below(seeds.size())].p;
    const std::size_t n = p.dim();
    const IntMatrix Y = random_nonsingular(n, 5, rng);
    IntVec z(n);
    for (auto& x : z) x = uniform(rng, -5, 5);
    const auto r = extract(p, Y, z);
    EXPECT_EQ(apply_map(p, {r.U, r.Z}), r.R);
    EXPECT_EQ(lex_order(r.R), r.R);
  }
}

TEST(Extract, RepresentativeIndependence) {
  Rng rng(53, "independence");
  const auto seeds = seed_polytopes();
  for (int k = 0; k < 100; ++k) {
    const auto& p = seeds[rng.below(seeds.size())].p;
    const std::size_t n = p.dim();
    const auto t = random_map(n, rng);
    const auto pp = apply_map(p, t);
    const IntMatrix Y = random_nonsingular(n, 5, rng);
    IntVec z(n);
    for (auto& x : z) x = uniform(rng, -5, 5);
    const auto Yp = to_int(to_rat(Y) * inverse_rational(t.U.matrix()));
    const auto zp = to_int(inverse_rational(t.U.matrix().transpose()) * to_rat(z));
    ASSERT_TRUE(Yp && zp);
    EXPECT_EQ(extract(p, Y, z).R, extract(pp, *Yp, *zp).R);
  }
}

TEST(Extract, RequiresLexOrder) {
  const auto p = LatticePolytope::assume_certified({iv({1, 0}), iv({0, 0}), iv({0, 1})});
  EXPECT_THROW(extract(p, IntMatrix::identity(2), iv({0, 0})), PreconditionError);
}

TEST(ClassSampler, ParameterChecks) {
  const auto sq = unit_square();
  EXPECT_THROW(ClassSampler(sq, Rat(1, 2)), ParameterError);
  EXPECT_NO_THROW(ClassSampler(sq, Rat(1)));
  // lambda_2 of 2x the square's form is 2.
  const auto big = LatticePolytope::assume_certified({iv({0, 0}), iv({0, 2}), iv({2, 0}), iv({2, 2})});
  EXPECT_THROW(ClassSampler(big, Rat(3, 2)), ParameterError);
  EXPECT_NO_THROW(ClassSampler(big, Rat(2)));
}

TEST(ClassSampler, HighDimensionNeedsAssertion) {
  const auto p = unit_simplex(5);
  EXPECT_THROW(ClassSampler(p, Rat(4)), UnsupportedDimensionError);
  ClassSamplerOptions opts;
  opts.assume_s_valid = true;
  ClassSampler sampler(p, Rat(4), opts);
  Rng rng(54);
  const auto cs = sampler.sample(rng);
  EXPECT_EQ(apply_map(p, {cs.result.U, cs.result.Z}), cs.result.R);
}

TEST(ClassSampler, ContractAndIndependentRows) {
  const auto sq = unit_square();
  ClassSampler sampler(sq, Rat(4));
  Rng rng(55, "class");
  for (int k = 0; k < 200; ++k) {
    const auto cs = sampler.sample(rng);
    EXPECT_NE(det(cs.Y), 0);
    EXPECT_EQ(apply_map(sq, {cs.result.U, cs.result.Z}), cs.result.R);
    EXPECT_EQ(cs.result.R, extract(sq, cs.Y, cs.z).R);
  }
}

TEST(ClassSampler, IterationCountRarelyExceedsNSquared) {
  const auto cube = unit_cube(3);
  ClassSampler sampler(cube, Rat(3));
  Rng rng(56, "iterations");
  int within = 0;
  for (int k = 0; k < 500; ++k) within += sampler.sample(rng).draws <= 9;
  EXPECT_GE(within, 495);
}

TEST(ClassSampler, SeedReproducible) {
  const auto sq = unit_square();
  Rng a(57), b(57);
  for (int k = 0; k < 20; ++k) EXPECT_EQ(sample_class(sq, Rat(4), a).result.R, sample_class(sq, Rat(4), b).result.R);
}
