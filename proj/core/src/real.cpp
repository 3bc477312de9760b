#include "polyiso/real.hpp"

#include <cstdio>
#include <vector>

namespace polyiso {

Real::Real(mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

Real::Real(const Rat& q, mpfr_prec_t precision, mpfr_rnd_t rnd) {
  mpfr_init2(value_, precision);
  mpfr_set_q(value_, q.get_mpq_t(), rnd);
}

Real::Real(long v, mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_si(value_, v, MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  // Steal the limbs and leave `other` as a fresh zero of minimal precision.
  *value_ = *other.value_;
  mpfr_init2(other.value_, MPFR_PREC_MIN);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

std::string Real::to_string(int digits) const {
  const int len = mpfr_snprintf(nullptr, 0, "%.*Re", digits - 1, value_);
  std::vector<char> buf(static_cast<std::size_t>(len) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, value_);
  return std::string(buf.data(), static_cast<std::size_t>(len));
}

}  // namespace polyiso
