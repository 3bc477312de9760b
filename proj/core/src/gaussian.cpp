#include "polyiso/gaussian.hpp"

#include <algorithm>

#include "polyiso/polytope.hpp"

namespace polyiso {

namespace {

void require_square(const RatMatrix& Q) {
  if (!Q.is_square() || Q.rows() == 0) throw DimensionError("quadratic form must be a nonempty square matrix");
}

Int isqrt_floor(const Rat& q) {
  if (q <= 0) return 0;
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Int r;
  mpz_sqrt(r.get_mpz_t(), f.get_mpz_t());
  return r;
}

// Calls visit(x) for every x in the box |x_k| <= bound[k].
template <class Visit>
void for_each_in_box(const IntVec& bound, Visit&& visit) {
  const std::size_t n = bound.size();
  IntVec x(n);
  for (std::size_t k = 0; k < n; ++k) x[k] = -bound[k];
  for (;;) {
    visit(x);
    std::size_t k = 0;
    while (k < n) {
      if (x[k] < bound[k]) {
        ++x[k];
        break;
      }
      x[k] = -bound[k];
      ++k;
    }
    if (k == n) return;
  }
}

Real exp_neg_pi_times(const Rat& t, mpfr_prec_t p) {
  Real pi(p);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  Real out(t, p);
  mpfr_mul(out.get(), out.get(), pi.get(), MPFR_RNDN);
  mpfr_neg(out.get(), out.get(), MPFR_RNDN);
  mpfr_exp(out.get(), out.get(), MPFR_RNDN);
  return out;
}

}  // namespace

Rat to_rat(const Real& x) {
  if (!mpfr_number_p(x.get())) throw PreconditionError("non-finite real has no rational value");
  Int m;
  const mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x.get());
  Rat r(m);
  if (e >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return r;
}

Cholesky cholesky(const RatMatrix& Q, mpfr_prec_t precision) {
  require_square(Q);
  if (!is_positive_definite(Q)) throw DefinitenessError("Cholesky of a matrix that is not positive definite");
  const std::size_t n = Q.rows();
  const mpfr_prec_t wp = precision + 32;

  std::vector<Real> w;
  w.reserve(n * n);
  for (std::size_t k = 0; k < n * n; ++k) w.emplace_back(wp);
  auto at = [&](std::size_t i, std::size_t j) -> Real& { return w[i * n + j]; };

  Real acc(wp);
  Real tmp(wp);
  for (std::size_t i = 0; i < n; ++i) {
    mpfr_set_q(acc.get(), Q(i, i).get_mpq_t(), MPFR_RNDN);
    for (std::size_t k = 0; k < i; ++k) {
      mpfr_sqr(tmp.get(), at(k, i).get(), MPFR_RNDN);
      mpfr_sub(acc.get(), acc.get(), tmp.get(), MPFR_RNDN);
    }
    if (mpfr_sgn(acc.get()) <= 0) throw DefinitenessError("Cholesky pivot lost positivity");
    mpfr_sqrt(at(i, i).get(), acc.get(), MPFR_RNDN);
    for (std::size_t j = i + 1; j < n; ++j) {
      mpfr_set_q(acc.get(), Q(i, j).get_mpq_t(), MPFR_RNDN);
      for (std::size_t k = 0; k < i; ++k) {
        mpfr_mul(tmp.get(), at(k, i).get(), at(k, j).get(), MPFR_RNDN);
        mpfr_sub(acc.get(), acc.get(), tmp.get(), MPFR_RNDN);
      }
      mpfr_div(at(i, j).get(), acc.get(), at(i, i).get(), MPFR_RNDN);
    }
  }

  Cholesky out;
  out.n = n;
  out.precision = precision;
  out.entries.reserve(n * n);
  for (std::size_t k = 0; k < n * n; ++k) {
    Real r(precision);
    mpfr_set(r.get(), w[k].get(), MPFR_RNDN);
    out.entries.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < n; ++i) {
    Real r(precision);
    mpfr_set(r.get(), at(i, i).get(), MPFR_RNDU);
    // Covers the rounding error accumulated at the working precision.
    mpfr_nextabove(r.get());
    out.diag_upper.push_back(std::move(r));
  }
  return out;
}

Real gso_max_norm(const Cholesky& B) {
  if (B.n == 0) throw DimensionError("empty Cholesky factor");
  Real best = B.diag_upper[0];
  for (std::size_t i = 1; i < B.n; ++i)
    if (best < B.diag_upper[i]) best = B.diag_upper[i];
  return best;
}

Real min_sigma(const RatMatrix& Q, mpfr_prec_t precision) {
  const Cholesky B = cholesky(Q, precision);
  const Real gso = gso_max_norm(B);
  Real t(static_cast<long>(2 * Q.rows() + 4), precision);
  mpfr_log(t.get(), t.get(), MPFR_RNDU);
  Real pi(precision);
  mpfr_const_pi(pi.get(), MPFR_RNDD);
  mpfr_div(t.get(), t.get(), pi.get(), MPFR_RNDU);
  mpfr_sqrt(t.get(), t.get(), MPFR_RNDU);
  mpfr_mul(t.get(), t.get(), gso.get(), MPFR_RNDU);
  return t;
}

Rat sq_norm(const RatMatrix& Q, const RatVec& x) {
  if (Q.rows() != x.size() || !Q.is_square()) throw DimensionError("vector length differs from form dimension");
  Rat acc;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Rat row;
    for (std::size_t j = 0; j < x.size(); ++j) row += Q(i, j) * x[j];
    acc += x[i] * row;
  }
  return acc;
}

Rat successive_minimum(const RatMatrix& Q, std::size_t i) {
  require_square(Q);
  const std::size_t n = Q.rows();
  if (n > 4) throw UnsupportedDimensionError("successive minima are enumerated only for n <= 4");
  if (i < 1 || i > n) throw PreconditionError("successive minimum index out of range");
  if (!is_positive_definite(Q)) throw DefinitenessError("successive minima need a positive definite form");

  const RatMatrix qinv = inverse_rational(Q);
  Rat radius_sq = Q(0, 0);
  for (std::size_t k = 1; k < n; ++k) radius_sq = std::min(radius_sq, Q(k, k));

  for (;;) {
    IntVec bound(n);
    for (std::size_t k = 0; k < n; ++k) bound[k] = isqrt_floor(radius_sq * qinv(k, k));
    std::vector<std::pair<Rat, IntVec>> ball;
    for_each_in_box(bound, [&](const IntVec& x) {
      Rat v = sq_norm(Q, to_rat(x));
      if (v > 0 && v <= radius_sq) ball.emplace_back(std::move(v), x);
    });
    std::sort(ball.begin(), ball.end());
    std::vector<RatVec> basis;
    for (const auto& [norm, x] : ball) {
      basis.push_back(to_rat(x));
      const RatMatrix m = RatMatrix::from_columns(basis, n);
      if (rank(m) < basis.size()) {
        basis.pop_back();
        continue;
      }
      if (basis.size() == i) return norm;
    }
    radius_sq *= 4;
  }
}

Real rho(const RatMatrix& Q, const Rat& s, const RatVec& c, const IntVec& x, mpfr_prec_t precision) {
  if (s <= 0) throw ParameterError("Gaussian parameter must be positive");
  const RatVec cc = c.empty() ? RatVec(x.size()) : c;
  if (cc.size() != x.size()) throw DimensionError("center length differs from point length");
  return exp_neg_pi_times(sq_norm(Q, to_rat(x) - cc) / (s * s), precision);
}

Real rho_lattice_sum(const RatMatrix& Q, const Rat& s, unsigned tau, mpfr_prec_t precision) {
  require_square(Q);
  if (s <= 0) throw ParameterError("Gaussian parameter must be positive");
  const std::size_t n = Q.rows();
  const RatMatrix qinv = inverse_rational(Q);
  const Rat limit = Rat(tau * tau) * s * s;
  IntVec bound(n);
  for (std::size_t k = 0; k < n; ++k) bound[k] = isqrt_floor(limit * qinv(k, k));
  Real total(precision);
  for_each_in_box(bound, [&](const IntVec& x) {
    const Rat v = sq_norm(Q, to_rat(x));
    if (v > limit) return;
    const Real r = exp_neg_pi_times(v / (s * s), precision);
    mpfr_add(total.get(), total.get(), r.get(), MPFR_RNDN);
  });
  return total;
}

GaussianSampler::GaussianSampler(GaussianParams params) : params_(std::move(params)) {
  require_square(params_.Q);
  const std::size_t n = params_.Q.rows();
  if (params_.s <= 0) throw ParameterError("Gaussian parameter must be positive");
  if (params_.precision < 64) throw ParameterError("precision must be at least 64 bits");
  if (params_.tail_cut < 6) throw ParameterError("tail cut must be at least 6");
  if (params_.c.empty()) params_.c.assign(n, Rat(0));
  if (params_.c.size() != n) throw DimensionError("center length differs from form dimension");

  const mpfr_prec_t p = params_.precision;
  chol_ = cholesky(params_.Q, p);
  const Real bound = min_sigma(params_.Q, p);
  if (bound.cmp(params_.s) > 0) {
    throw ParameterError("s = " + params_.s.get_str() + " is below the sampler bound " + bound.to_string(12));
  }

  Real pi(p);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  cache_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    Real sig(params_.s, p);
    mpfr_div(sig.get(), sig.get(), chol_(i, i).get(), MPFR_RNDN);
    Real a(p);
    mpfr_sqr(a.get(), sig.get(), MPFR_RNDN);
    mpfr_div(a.get(), pi.get(), a.get(), MPFR_RNDN);
    sigma_.push_back(std::move(sig));
    alpha_.push_back(std::move(a));
  }
  for (std::size_t i = 0; i < n; ++i) {
    centered_total_.push_back(table_for(i, Real(0L, p)).total);
  }
}

const GaussianSampler::Table& GaussianSampler::table_for(std::size_t i, const Real& center) {
  auto& slot = cache_[i];
  if (slot && slot->center == center) return *slot;

  const mpfr_prec_t p = params_.precision;
  Real width(static_cast<long>(params_.tail_cut), p);
  mpfr_mul(width.get(), width.get(), sigma_[i].get(), MPFR_RNDU);
  Real edge(p);
  Int lo, hi;
  mpfr_sub(edge.get(), center.get(), width.get(), MPFR_RNDD);
  mpfr_get_z(lo.get_mpz_t(), edge.get(), MPFR_RNDD);
  mpfr_add(edge.get(), center.get(), width.get(), MPFR_RNDU);
  mpfr_get_z(hi.get_mpz_t(), edge.get(), MPFR_RNDU);

  Table t{center, lo, {}, Real(p)};
  Real d(p);
  for (Int k = lo; k <= hi; ++k) {
    mpfr_set_z(d.get(), k.get_mpz_t(), MPFR_RNDN);
    mpfr_sub(d.get(), d.get(), center.get(), MPFR_RNDN);
    mpfr_sqr(d.get(), d.get(), MPFR_RNDN);
    mpfr_mul(d.get(), d.get(), alpha_[i].get(), MPFR_RNDN);
    mpfr_neg(d.get(), d.get(), MPFR_RNDN);
    mpfr_exp(d.get(), d.get(), MPFR_RNDN);
    mpfr_add(t.total.get(), t.total.get(), d.get(), MPFR_RNDN);
    t.cumulative.push_back(t.total);
  }
  slot = std::move(t);
  return *slot;
}

Real GaussianSampler::uniform(Rng& rng) const {
  const std::size_t words = (static_cast<std::size_t>(params_.precision) + 63) / 64;
  Int z;
  for (std::size_t w = 0; w < words; ++w) {
    const std::uint64_t v = rng.next();
    z <<= 32;
    z += static_cast<unsigned long>(v >> 32);
    z <<= 32;
    z += static_cast<unsigned long>(v & 0xffffffffULL);
  }
  Real u(static_cast<mpfr_prec_t>(64 * words));
  mpfr_set_z_2exp(u.get(), z.get_mpz_t(), -static_cast<mpfr_exp_t>(64 * words), MPFR_RNDN);
  return u;
}

IntVec GaussianSampler::sample(Rng& rng) {
  const std::size_t n = params_.Q.rows();
  const mpfr_prec_t p = params_.precision;
  std::vector<Real> offset;  // x_j - c_j
  offset.reserve(n);
  for (std::size_t j = 0; j < n; ++j) offset.emplace_back(p);

  for (;;) {
    IntVec x(n);
    Real ratio(1L, p);
    Real center(p);
    Real tmp(p);
    for (std::size_t step = 0; step < n; ++step) {
      const std::size_t i = n - 1 - step;
      // c'_i = c_i - sum_{j>i} B_ij (x_j - c_j) / B_ii
      mpfr_set_zero(tmp.get(), 1);
      for (std::size_t j = i + 1; j < n; ++j) {
        Real term(p);
        mpfr_mul(term.get(), chol_(i, j).get(), offset[j].get(), MPFR_RNDN);
        mpfr_add(tmp.get(), tmp.get(), term.get(), MPFR_RNDN);
      }
      mpfr_div(tmp.get(), tmp.get(), chol_(i, i).get(), MPFR_RNDN);
      mpfr_set_q(center.get(), params_.c[i].get_mpq_t(), MPFR_RNDN);
      mpfr_sub(center.get(), center.get(), tmp.get(), MPFR_RNDN);

      const Table& t = table_for(i, center);
      Real target = uniform(rng);
      mpfr_mul(target.get(), target.get(), t.total.get(), MPFR_RNDN);
      auto it = std::upper_bound(t.cumulative.begin(), t.cumulative.end(), target);
      if (it == t.cumulative.end()) --it;
      x[i] = t.first + static_cast<long>(it - t.cumulative.begin());

      mpfr_mul(ratio.get(), ratio.get(), t.total.get(), MPFR_RNDN);
      mpfr_div(ratio.get(), ratio.get(), centered_total_[i].get(), MPFR_RNDN);

      mpfr_set_z(offset[i].get(), x[i].get_mpz_t(), MPFR_RNDN);
      mpfr_sub_q(offset[i].get(), offset[i].get(), params_.c[i].get_mpq_t(), MPFR_RNDN);
    }
    if (n == 1 || uniform(rng) < ratio) return x;
    ++rejections_;
  }
}

IntVec sample(const GaussianParams& params, Rng& rng) {
  GaussianSampler sampler(params);
  return sampler.sample(rng);
}

}  // namespace polyiso
