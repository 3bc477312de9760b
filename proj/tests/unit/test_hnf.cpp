#include <gtest/gtest.h>

#include "corpus.hpp"
#include "polyiso/hnf.hpp"

using namespace polyiso;
using namespace polyiso::testing;

TEST(Hnf, Identity) {
  const auto h = hnf_lower_canonical(IntMatrix::identity(3));
  EXPECT_EQ(h.T, IntMatrix::identity(3));
  EXPECT_EQ(h.U.matrix(), IntMatrix::identity(3));
}

TEST(Hnf, SignNormalization) {
  const auto h = hnf_lower_canonical(IntMatrix{{-1, 0}, {0, 1}});
  EXPECT_EQ(h.T, IntMatrix::identity(2));
  EXPECT_EQ(h.U.matrix(), (IntMatrix{{-1, 0}, {0, 1}}));
}

TEST(Hnf, HandExample) {
  // Columns of Y span the lattice with basis (2, 1), (0, 3) in lower form.
  const IntMatrix Y{{2, 4}, {1, 5}};
  const auto h = hnf_lower_canonical(Y);
  EXPECT_EQ(h.T, (IntMatrix{{2, 0}, {1, 3}}));
  EXPECT_EQ(h.T * h.U.matrix(), Y);
}

TEST(Hnf, SingularThrows) {
  EXPECT_THROW(hnf_lower_canonical(IntMatrix{{1, 2}, {2, 4}}), SingularMatrixError);
}

TEST(Hnf, ShapePredicate) {
  EXPECT_TRUE(is_canonical_lower_hnf(IntMatrix{{2, 0}, {1, 3}}));
  EXPECT_FALSE(is_canonical_lower_hnf(IntMatrix{{2, 0}, {3, 3}}));
  EXPECT_FALSE(is_canonical_lower_hnf(IntMatrix{{2, 1}, {1, 3}}));
  EXPECT_FALSE(is_canonical_lower_hnf(IntMatrix{{-2, 0}, {1, 3}}));
}

TEST(Hnf, RandomReconstructionAndCanonicity) {
  Rng rng(10, "hnf");
  for (int k = 0; k < 500; ++k) {
    const std::size_t n = 1 + rng.below(4);
    const IntMatrix Y = random_nonsingular(n, 9, rng);
    const auto h = hnf_lower_canonical(Y);
    ASSERT_EQ(h.T * h.U.matrix(), Y);
    ASSERT_TRUE(is_canonical_lower_hnf(h.T));
    ASSERT_TRUE(is_unimodular(h.U.matrix()));
    const auto V = random_unimodular(n, rng);
    ASSERT_EQ(hnf_lower_canonical(Y * V.matrix()).T, h.T);
  }
}
