#include "polyiso/avgcase.hpp"

#include <algorithm>

#include "polyiso/hnf.hpp"

namespace polyiso {

namespace {

bool is_lex_ordered(const LatticePolytope& p) {
  return std::is_sorted(p.vertices().begin(), p.vertices().end());
}

}  // namespace

PolyTimeResult polytime(const LatticePolytope& v_ord, const IntMatrix& Y) {
  const std::size_t n = v_ord.dim();
  if (Y.rows() != n || Y.cols() != n) throw DimensionError("Y must be n x n");
  HermiteDecomposition h = hnf_lower_canonical(Y);
  const RatMatrix u = to_rat(h.U.matrix());
  const std::vector<RatVec> centered = centered_vertices(v_ord);
  RatMatrix p1(n, centered.size());
  for (std::size_t k = 0; k < centered.size(); ++k) {
    const RatVec col = u * centered[k];
    for (std::size_t r = 0; r < n; ++r) p1(r, k) = col[r];
  }
  return PolyTimeResult{std::move(p1), std::move(h.U)};
}

ExtractResult extract(const LatticePolytope& v_ord, const IntMatrix& Y, const IntVec& z) {
  if (!is_lex_ordered(v_ord)) throw PreconditionError("extract expects a lex-ordered vertex list");
  const std::size_t n = v_ord.dim();
  if (z.size() != n) throw DimensionError("z must have length n");

  PolyTimeResult pt = polytime(v_ord, Y);
  const UnimodularMatrix& U = pt.U;

  // LexiOrder on the columns of P1, remembering which vertex lands first.
  std::vector<std::pair<RatVec, std::size_t>> cols;
  cols.reserve(v_ord.vertex_count());
  for (std::size_t k = 0; k < v_ord.vertex_count(); ++k) cols.emplace_back(pt.P1.col(k), k);
  std::sort(cols.begin(), cols.end());
  const RatVec& v1 = cols.front().first;
  const std::size_t i_first = cols.front().second;

  const IntVec shift = U.inverse().matrix().transpose() * z;  // (U^{-1})^t z
  const RatVec shift_q = to_rat(shift);

  std::vector<IntVec> r_vertices;
  r_vertices.reserve(cols.size());
  for (const auto& [col, k] : cols) {
    auto p2 = to_int(col - v1);
    if (!p2) throw ExtractionError("translated vertex is not integral");
    r_vertices.push_back(*p2 + shift);
  }

  const RatVec b = vertex_average(v_ord);
  auto z_out = to_int(shift_q - v1 - to_rat(U.matrix()) * b);
  if (!z_out) throw ExtractionError("translation Z is not integral");
  const IntVec z_alt = shift - U.matrix() * v_ord.vertex(i_first);
  if (*z_out != z_alt) throw ExtractionError("the two expressions for Z disagree");

  LatticePolytope R = LatticePolytope::assume_certified(std::move(r_vertices));
  UnimodularAffineMap map(U, *z_out);
  if (!(apply_map(v_ord, map) == R)) throw ExtractionError("R differs from U P + Z");
  return ExtractResult{std::move(R), U, std::move(*z_out)};
}

void check_class_parameter(const RatMatrix& Q, const Rat& s, const ClassSamplerOptions& options) {
  if (s <= 0) throw ParameterError("s must be positive");
  const std::size_t n = Q.rows();
  if (!options.assume_s_valid) {
    if (n > 4) {
      throw UnsupportedDimensionError("lambda_n is computed only for n <= 4; assert the bound to continue");
    }
    const Rat lambda_sq = successive_minimum(Q, n);
    if (s * s < lambda_sq) {
      throw ParameterError("s = " + s.get_str() + " is below lambda_n = sqrt(" + lambda_sq.get_str() + ")");
    }
  }
  const Real bound = min_sigma(Q, options.precision);
  if (bound.cmp(s) > 0) {
    throw ParameterError("s = " + s.get_str() + " is below the sampler bound " + bound.to_string(12));
  }
}

namespace {

GaussianSampler make_form_sampler(const RatMatrix& Q, const Rat& s, const ClassSamplerOptions& options) {
  check_class_parameter(Q, s, options);
  GaussianParams params;
  params.Q = Q;
  params.s = s;
  params.precision = options.precision;
  params.tail_cut = options.tail_cut;
  return GaussianSampler(std::move(params));
}

}  // namespace

ClassSampler::ClassSampler(const LatticePolytope& P, const Rat& s, ClassSamplerOptions options)
    : p_ord_(lex_order(P)), q_(quadratic_form(p_ord_)), gauss_(make_form_sampler(q_, s, options)) {}

ClassSample ClassSampler::sample(Rng& rng) {
  const std::size_t n = p_ord_.dim();
  std::vector<IntVec> rows;
  std::size_t draws = 0;
  while (rows.size() < n) {
    IntVec x = gauss_.sample(rng);
    ++draws;
    rows.push_back(x);
    std::vector<RatVec> cols;
    cols.reserve(rows.size());
    for (const auto& r : rows) cols.push_back(to_rat(r));
    if (rank(RatMatrix::from_columns(cols, n)) < rows.size()) rows.pop_back();
  }
  IntMatrix Y(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) Y(r, c) = rows[r][c];
  IntVec z = gauss_.sample(rng);
  ExtractResult res = extract(p_ord_, Y, z);
  return ClassSample{std::move(res), std::move(Y), std::move(z), draws};
}

ClassSample sample_class(const LatticePolytope& P, const Rat& s, Rng& rng, ClassSamplerOptions options) {
  ClassSampler sampler(P, s, options);
  return sampler.sample(rng);
}

}  // namespace polyiso
