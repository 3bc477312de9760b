#pragma once

#include "polyiso/exact.hpp"

namespace polyiso {

/// Y = T * U with T in canonical lower-triangular Hermite normal form.
struct HermiteDecomposition {
  IntMatrix T;
  UnimodularMatrix U;
};

/// Canonical lower-triangular HNF under right multiplication by GL_n(Z):
/// T lower triangular, T[i][i] > 0 and 0 <= T[i][j] < T[i][i] for j < i.
/// T depends only on the column lattice of Y, so hnf(Y * V).T == hnf(Y).T
/// for every unimodular V. Throws SingularMatrixError for singular Y.
HermiteDecomposition hnf_lower_canonical(const IntMatrix& Y);

/// The shape predicate satisfied by the T of hnf_lower_canonical.
bool is_canonical_lower_hnf(const IntMatrix& T);

}  // namespace polyiso
