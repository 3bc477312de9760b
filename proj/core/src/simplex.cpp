#include "polyiso/simplex.hpp"

#include <optional>

namespace polyiso {

namespace {

// Dense tableau. Rows 0..m-1 hold constraints, row m holds reduced costs
// (z_j - c_j) with the current objective value in the rhs column.
class Tableau {
 public:
  Tableau(std::size_t m, std::size_t vars) : m_(m), vars_(vars), t_(m + 1, vars + 1), basis_(m) {}

  Rat& at(std::size_t r, std::size_t c) { return t_(r, c); }
  const Rat& at(std::size_t r, std::size_t c) const { return t_(r, c); }
  Rat& rhs(std::size_t r) { return t_(r, vars_); }
  const Rat& rhs(std::size_t r) const { return t_(r, vars_); }
  std::size_t& basic(std::size_t r) { return basis_[r]; }
  std::size_t basic(std::size_t r) const { return basis_[r]; }
  std::size_t rows() const { return m_; }

  void set_objective(const RatVec& cost, std::size_t active_vars) {
    for (std::size_t j = 0; j <= vars_; ++j) t_(m_, j) = 0;
    for (std::size_t j = 0; j < active_vars; ++j) t_(m_, j) = -cost[j];
    for (std::size_t r = 0; r < m_; ++r) {
      const Rat& cb = cost[basis_[r]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= vars_; ++j) {
        if (j < active_vars || j == vars_) t_(m_, j) += cb * t_(r, j);
      }
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rat p = t_(row, col);
    for (std::size_t j = 0; j <= vars_; ++j) t_(row, j) /= p;
    for (std::size_t r = 0; r <= m_; ++r) {
      if (r == row || t_(r, col) == 0) continue;
      const Rat f = t_(r, col);
      for (std::size_t j = 0; j <= vars_; ++j) {
        if (t_(row, j) != 0) t_(r, j) -= f * t_(row, j);
      }
    }
    basis_[row] = col;
  }

  // Bland's rule over columns [0, active_vars). Returns false when unbounded.
  bool optimize(std::size_t active_vars) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < active_vars; ++j) {
        if (t_(m_, j) < 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return true;
      std::optional<std::size_t> leaving;
      Rat best;
      for (std::size_t r = 0; r < m_; ++r) {
        if (t_(r, *entering) <= 0) continue;
        Rat ratio = t_(r, vars_) / t_(r, *entering);
        if (!leaving || ratio < best || (ratio == best && basis_[r] < basis_[*leaving])) {
          leaving = r;
          best = ratio;
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }

  void drop_row(std::size_t row) {
    Matrix<Rat> next(m_, vars_ + 1);
    std::vector<std::size_t> next_basis;
    std::size_t out = 0;
    for (std::size_t r = 0; r <= m_; ++r) {
      if (r == row) continue;
      for (std::size_t j = 0; j <= vars_; ++j) next(out, j) = t_(r, j);
      if (r < m_) next_basis.push_back(basis_[r]);
      ++out;
    }
    t_ = std::move(next);
    basis_ = std::move(next_basis);
    --m_;
  }

 private:
  std::size_t m_;
  std::size_t vars_;
  Matrix<Rat> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpResult simplex_max(const RatVec& objective, const RatMatrix& eq_lhs, const RatVec& eq_rhs) {
  const std::size_t m = eq_lhs.rows();
  const std::size_t n = eq_lhs.cols();
  if (objective.size() != n) throw DimensionError("objective length differs from variable count");
  if (eq_rhs.size() != m) throw DimensionError("rhs length differs from constraint count");

  // Columns: n originals, then m artificials.
  Tableau tab(m, n + m);
  for (std::size_t r = 0; r < m; ++r) {
    const bool flip = eq_rhs[r] < 0;
    for (std::size_t j = 0; j < n; ++j) tab.at(r, j) = flip ? Rat(-eq_lhs(r, j)) : eq_lhs(r, j);
    tab.at(r, n + r) = 1;
    tab.rhs(r) = flip ? Rat(-eq_rhs[r]) : eq_rhs[r];
    tab.basic(r) = n + r;
  }

  // Phase 1: maximize -(sum of artificials).
  RatVec phase1(n + m);
  for (std::size_t j = n; j < n + m; ++j) phase1[j] = -1;
  tab.set_objective(phase1, n + m);
  tab.optimize(n + m);
  if (tab.rhs(tab.rows()) != 0) return LpResult{LpStatus::Infeasible, 0, {}};

  // Drive zero-level artificials out of the basis; drop redundant rows.
  for (std::size_t r = 0; r < tab.rows();) {
    if (tab.basic(r) < n) {
      ++r;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < n; ++j) {
      if (tab.at(r, j) != 0) {
        col = j;
        break;
      }
    }
    if (col) {
      tab.pivot(r, *col);
      ++r;
    } else {
      tab.drop_row(r);
    }
  }

  // Phase 2 over the original columns only.
  RatVec cost(n + m);
  for (std::size_t j = 0; j < n; ++j) cost[j] = objective[j];
  tab.set_objective(cost, n);
  if (!tab.optimize(n)) return LpResult{LpStatus::Unbounded, 0, {}};

  LpResult res;
  res.status = LpStatus::Optimal;
  res.optimum = tab.rhs(tab.rows());
  res.witness.assign(n, Rat(0));
  for (std::size_t r = 0; r < tab.rows(); ++r) res.witness[tab.basic(r)] = tab.rhs(r);
  return res;
}

}  // namespace polyiso
