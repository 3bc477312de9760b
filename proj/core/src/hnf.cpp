#include "polyiso/hnf.hpp"

namespace polyiso {

namespace {

void subtract_column_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) -= q * m(r, src);
}

void negate_column(IntMatrix& m, std::size_t col) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, col) = -m(r, col);
}

// Replaces columns (a, b) by (x*a + y*b, -(vb/g)*a + (va/g)*b) where g = x*va + y*vb is
// the gcd of the two entries va, vb in row `row`. The 2x2 block has determinant 1.
void gcd_combine(IntMatrix& m, std::size_t row, std::size_t a, std::size_t b) {
  const Int va = m(row, a);
  const Int vb = m(row, b);
  Int g, x, y;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
  const Int pa = va / g;
  const Int pb = vb / g;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const Int ca = m(r, a);
    const Int cb = m(r, b);
    m(r, a) = x * ca + y * cb;
    m(r, b) = pa * cb - pb * ca;
  }
}

}  // namespace

HermiteDecomposition hnf_lower_canonical(const IntMatrix& Y) {
  if (!Y.is_square()) throw DimensionError("HNF expects a square matrix");
  const std::size_t n = Y.rows();
  if (det(Y) == 0) throw SingularMatrixError("HNF of a singular matrix");

  // Work on the augmented matrix [Y; I] so the accumulated column transform C
  // (with Y * C = T) rides along in the bottom block.
  IntMatrix aug(2 * n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = Y(r, c);
  for (std::size_t i = 0; i < n; ++i) aug(n + i, i) = 1;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (aug(i, j) != 0) gcd_combine(aug, i, i, j);
    }
    if (aug(i, i) < 0) negate_column(aug, i);
  }
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), aug(i, j).get_mpz_t(), aug(i, i).get_mpz_t());
      if (q != 0) subtract_column_multiple(aug, j, i, q);
    }
  }

  IntMatrix T(n, n);
  IntMatrix C(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      T(r, c) = aug(r, c);
      C(r, c) = aug(n + r, c);
    }
  // Y = T * C^{-1}.
  auto U = to_int(inverse_rational(C));
  return HermiteDecomposition{std::move(T), UnimodularMatrix(std::move(*U))};
}

bool is_canonical_lower_hnf(const IntMatrix& T) {
  if (!T.is_square()) return false;
  const std::size_t n = T.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (T(i, i) <= 0) return false;
    for (std::size_t j = i + 1; j < n; ++j)
      if (T(i, j) != 0) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (T(i, j) < 0 || T(i, j) >= T(i, i)) return false;
  }
  return true;
}

}  // namespace polyiso
