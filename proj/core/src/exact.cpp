#include "polyiso/exact.hpp"

#include <sstream>

namespace polyiso {

RatVec to_rat(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

RatMatrix to_rat(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rat(m(r, c));
  return out;
}

std::optional<IntVec> to_int(const RatVec& v) {
  IntVec out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (x.get_den() != 1) return std::nullopt;
    out.push_back(x.get_num());
  }
  return out;
}

std::optional<IntMatrix> to_int(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c).get_den() != 1) return std::nullopt;
      out(r, c) = m(r, c).get_num();
    }
  return out;
}

Int det(const IntMatrix& input) {
  if (!input.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix a = input;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

// Row-reduces a copy of m in place; returns the rank and the sign/product of pivots.
struct Elimination {
  RatMatrix reduced;
  std::size_t rank = 0;
  Rat det = 1;
};

Elimination eliminate(RatMatrix a) {
  Elimination e;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c) == 0) ++piv;
    if (piv == rows) {
      e.det = 0;
      continue;
    }
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(piv, j), a(r, j));
      e.det = -e.det;
    }
    e.det *= a(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a(i, c) == 0) continue;
      Rat f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  e.rank = r;
  if (r < rows) e.det = 0;
  e.reduced = std::move(a);
  return e;
}

}  // namespace

Rat det(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  return eliminate(m).det;
}

RatMatrix inverse_rational(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) throw SingularMatrixError("matrix is singular");
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(c, j));
        std::swap(inv(piv, j), inv(c, j));
      }
    }
    const Rat p = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= p;
      inv(c, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const Rat f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

RatMatrix inverse_rational(const IntMatrix& m) { return inverse_rational(to_rat(m)); }

std::size_t rank(const RatMatrix& m) { return eliminate(m).rank; }
std::size_t rank(const IntMatrix& m) { return rank(to_rat(m)); }

std::size_t affine_rank(std::span<const IntVec> points) {
  if (points.size() <= 1) return 0;
  const std::size_t n = points.front().size();
  RatMatrix diffs(points.size() - 1, n);
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].size() != n) throw DimensionError("points of differing dimension");
    for (std::size_t j = 0; j < n; ++j) diffs(i - 1, j) = Rat(points[i][j] - points[0][j]);
  }
  return rank(diffs);
}

bool is_unimodular(const IntMatrix& m) {
  if (!m.is_square()) return false;
  const Int d = det(m);
  return d == 1 || d == -1;
}

UnimodularMatrix::UnimodularMatrix(IntMatrix m) : m_(std::move(m)) {
  if (!m_.is_square()) throw DimensionError("unimodular matrix must be square");
  if (!is_unimodular(m_)) throw NotUnimodularError("determinant is not +1 or -1");
}

UnimodularMatrix UnimodularMatrix::identity(std::size_t n) { return UnimodularMatrix(IntMatrix::identity(n)); }

UnimodularMatrix UnimodularMatrix::inverse() const {
  auto inv = to_int(inverse_rational(m_));
  // det = +-1 makes the adjugate integral.
  return UnimodularMatrix(std::move(*inv));
}

UnimodularAffineMap::UnimodularAffineMap(UnimodularMatrix u, IntVec z) : U(std::move(u)), Z(std::move(z)) {
  if (Z.size() != U.dim()) throw DimensionError("translation length differs from matrix dimension");
}

UnimodularAffineMap UnimodularAffineMap::identity(std::size_t n) {
  return UnimodularAffineMap(UnimodularMatrix::identity(n), IntVec(n));
}

IntVec UnimodularAffineMap::apply(const IntVec& x) const { return U.matrix() * x + Z; }

UnimodularAffineMap UnimodularAffineMap::compose(const UnimodularAffineMap& other) const {
  return UnimodularAffineMap(U * other.U, U.matrix() * other.Z + Z);
}

UnimodularAffineMap UnimodularAffineMap::inverse() const {
  UnimodularMatrix inv = U.inverse();
  IntVec z = inv.matrix() * Z;
  for (auto& x : z) x = -x;
  return UnimodularAffineMap(std::move(inv), std::move(z));
}

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string to_string(const RatVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace polyiso
