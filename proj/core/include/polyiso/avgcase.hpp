#pragma once

// Extract and the class sampler D_s([P]).

#include <cstdint>
#include <optional>

#include "polyiso/exact.hpp"
#include "polyiso/gaussian.hpp"
#include "polyiso/polytope.hpp"
#include "polyiso/rng.hpp"

namespace polyiso {

struct PolyTimeResult {
  RatMatrix P1;  ///< n x d; column k is U (v_k - b_P).
  UnimodularMatrix U;
};

/// U is the unique unimodular matrix with Y U^{-1} in canonical lower HNF.
/// Throws SingularMatrixError when Y is singular.
PolyTimeResult polytime(const LatticePolytope& v_ord, const IntMatrix& Y);

struct ExtractResult {
  LatticePolytope R;  ///< Lex-ordered.
  UnimodularMatrix U;
  IntVec Z;
};

/// Runs the four extraction steps and checks R = U P + Z before returning.
ExtractResult extract(const LatticePolytope& v_ord, const IntMatrix& Y, const IntVec& z);

struct ClassSample {
  ExtractResult result;
  IntMatrix Y;
  IntVec z;
  std::size_t draws = 0;  ///< Gaussian vectors drawn while building Y.
};

struct ClassSamplerOptions {
  mpfr_prec_t precision = kDefaultPrecision;
  unsigned tail_cut = kDefaultTailCut;
  /// Caller vouches for s >= lambda_n(Q); required when n > 4.
  bool assume_s_valid = false;
};

/// Throws ParameterError unless s >= max{lambda_n(Q), min_sigma(Q)}.
void check_class_parameter(const RatMatrix& Q, const Rat& s, const ClassSamplerOptions& options);

/// Reusable sampler for D_s([P]) with representative P.
class ClassSampler {
 public:
  ClassSampler(const LatticePolytope& P, const Rat& s, ClassSamplerOptions options = {});

  ClassSample sample(Rng& rng);

  const LatticePolytope& representative() const noexcept { return p_ord_; }
  const RatMatrix& form() const noexcept { return q_; }

 private:
  LatticePolytope p_ord_;
  RatMatrix q_;
  GaussianSampler gauss_;
};

ClassSample sample_class(const LatticePolytope& P, const Rat& s, Rng& rng, ClassSamplerOptions options = {});

}  // namespace polyiso
