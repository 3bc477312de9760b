#pragma once

// Owning wrapper around an MPFR floating-point value.

#include <mpfr.h>

#include <string>

#include "polyiso/exact.hpp"

namespace polyiso {

class Real {
 public:
  explicit Real(mpfr_prec_t precision = 128);
  Real(const Rat& q, mpfr_prec_t precision, mpfr_rnd_t rnd = MPFR_RNDN);
  Real(long v, mpfr_prec_t precision);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Scientific notation with the given number of significant digits.
  std::string to_string(int digits = 20) const;

  /// Sign of (this - q), computed exactly.
  int cmp(const Rat& q) const { return mpfr_cmp_q(value_, q.get_mpq_t()); }
  int cmp(const Real& r) const { return mpfr_cmp(value_, r.value_); }

  friend bool operator<(const Real& a, const Real& b) { return a.cmp(b) < 0; }
  friend bool operator==(const Real& a, const Real& b) { return a.cmp(b) == 0; }

 private:
  mpfr_t value_;
};

}  // namespace polyiso
