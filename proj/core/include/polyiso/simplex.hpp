#pragma once

#include "polyiso/exact.hpp"

namespace polyiso {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rat optimum;      ///< Meaningful when status == Optimal.
  RatVec witness;   ///< An optimal basic solution when status == Optimal.
};

/// Exact rational LP: maximize objective . x subject to eq_lhs * x = eq_rhs and x >= 0.
/// Two-phase simplex with Bland's pivoting rule, so degenerate problems terminate.
/// Throws DimensionError on inconsistent shapes.
LpResult simplex_max(const RatVec& objective, const RatMatrix& eq_lhs, const RatVec& eq_rhs);

}  // namespace polyiso
