#pragma once

// Quadratic-form geometry and discrete Gaussian sampling over Z^n.

#include <cstdint>
#include <optional>
#include <vector>

#include "polyiso/exact.hpp"
#include "polyiso/real.hpp"
#include "polyiso/rng.hpp"

namespace polyiso {

inline constexpr mpfr_prec_t kDefaultPrecision = 128;
inline constexpr unsigned kDefaultTailCut = 7;

/// Upper-triangular B with B^t B = Q, entries at `precision` bits.
struct Cholesky {
  std::size_t n = 0;
  mpfr_prec_t precision = kDefaultPrecision;
  std::vector<Real> entries;  ///< Row-major n*n; zero below the diagonal.
  /// B[i][i] rounded upward, a certified upper bound on the true diagonal.
  std::vector<Real> diag_upper;

  const Real& operator()(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
};

/// Exact value of a finite MPFR number.
Rat to_rat(const Real& x);

/// Throws DefinitenessError when Q is not symmetric positive definite.
Cholesky cholesky(const RatMatrix& Q, mpfr_prec_t precision = kDefaultPrecision);

/// max_i B[i][i], rounded up: the longest Gram-Schmidt vector of the basis B.
Real gso_max_norm(const Cholesky& B);

/// Upward-rounded ||B*_Q|| * sqrt(ln(2n+4)/pi).
Real min_sigma(const RatMatrix& Q, mpfr_prec_t precision = kDefaultPrecision);

/// Exact lambda_i(Q)^2 for 1 <= i <= n. Only n <= 4 is supported.
Rat successive_minimum(const RatMatrix& Q, std::size_t i);

/// (x - c)^t Q (x - c), exact.
Rat sq_norm(const RatMatrix& Q, const RatVec& x_minus_c);

/// exp(-pi ||x - c||_Q^2 / s^2).
Real rho(const RatMatrix& Q, const Rat& s, const RatVec& c, const IntVec& x,
         mpfr_prec_t precision = kDefaultPrecision);

/// Sum of rho_{Q,s}(x) over all x in Z^n with ||x||_Q <= tau * s.
Real rho_lattice_sum(const RatMatrix& Q, const Rat& s, unsigned tau = kDefaultTailCut,
                     mpfr_prec_t precision = kDefaultPrecision);

struct GaussianParams {
  RatMatrix Q;
  Rat s;
  RatVec c;  ///< Empty means the origin.
  mpfr_prec_t precision = kDefaultPrecision;
  unsigned tail_cut = kDefaultTailCut;
};

/// Samples D_{Q,s,c}: randomized nearest plane over the Cholesky factor,
/// one 1-D table-inversion draw per coordinate (last coordinate first),
/// followed by an acceptance test that removes the dependence of the output
/// probability on the intermediate centers.
class GaussianSampler {
 public:
  /// Throws ParameterError unless s >= min_sigma(Q) and the params are in range.
  explicit GaussianSampler(GaussianParams params);

  IntVec sample(Rng& rng);

  const GaussianParams& params() const noexcept { return params_; }
  const Cholesky& factor() const noexcept { return chol_; }
  std::uint64_t rejections() const noexcept { return rejections_; }

 private:
  struct Table {
    Real center;
    Int first;
    std::vector<Real> cumulative;
    Real total;
  };

  const Table& table_for(std::size_t i, const Real& center);
  Real uniform(Rng& rng) const;

  GaussianParams params_;
  Cholesky chol_;
  std::vector<Real> sigma_;   ///< s / B[i][i]
  std::vector<Real> alpha_;   ///< pi / sigma_i^2
  std::vector<Real> centered_total_;  ///< rho_{sigma_i}(Z), truncated
  std::vector<std::optional<Table>> cache_;
  std::uint64_t rejections_ = 0;
};

/// One draw; builds a throwaway sampler.
IntVec sample(const GaussianParams& params, Rng& rng);

}  // namespace polyiso
