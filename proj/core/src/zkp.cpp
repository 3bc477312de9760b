#include "polyiso/zkp.hpp"

#include <algorithm>

namespace polyiso {

namespace {

std::vector<RatVec> sorted_centered(const std::vector<IntVec>& points) {
  const Rat d(static_cast<unsigned long>(points.size()));
  RatVec b(points.front().size());
  for (const auto& v : points)
    for (std::size_t i = 0; i < b.size(); ++i) b[i] += v[i];
  for (auto& x : b) x /= d;
  std::vector<RatVec> out;
  out.reserve(points.size());
  for (const auto& v : points) out.push_back(to_rat(v) - b);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RatVec> sorted_centered_image(const RatMatrix& W, const LatticePolytope& p) {
  std::vector<RatVec> out;
  out.reserve(p.vertex_count());
  for (const auto& w : centered_vertices(p)) out.push_back(W * w);
  std::sort(out.begin(), out.end());
  return out;
}

ClassSamplerOptions sampler_options(const ProtocolOptions& o) {
  return ClassSamplerOptions{o.precision, o.tail_cut, o.assume_s_valid};
}

}  // namespace

Statement::Statement(LatticePolytope p0, LatticePolytope p1) : P0(std::move(p0)), P1(std::move(p1)) {
  if (P0.dim() != P1.dim()) throw DimensionError("statement polytopes have different dimensions");
  if (P0.vertex_count() != P1.vertex_count()) throw DimensionError("statement polytopes have different vertex counts");
}

bool is_valid_witness(const Statement& st, const UnimodularMatrix& U) {
  if (U.dim() != st.dim()) return false;
  return sorted_centered_image(to_rat(U.matrix()), st.P0) == sorted_centered(st.P1.vertices());
}

std::string to_string(RejectReason reason) {
  switch (reason) {
    case RejectReason::DimensionMismatch: return "dimension-mismatch";
    case RejectReason::MalformedCommitment: return "malformed-commitment";
    case RejectReason::BadChallenge: return "bad-challenge";
    case RejectReason::NonIntegral: return "non-integral";
    case RejectReason::NotUnimodular: return "not-unimodular";
    case RejectReason::VertexSetMismatch: return "vertex-set-mismatch";
  }
  return "unknown";
}

Rat protocol_sigma_param(const Statement& st, const ProtocolOptions& options) {
  const std::size_t n = st.dim();
  const mpfr_prec_t p = options.precision;
  const RatMatrix q0 = quadratic_form(st.P0);
  const RatMatrix q1 = quadratic_form(st.P1);

  Real x = min_sigma(q0, p);
  const Real g1 = min_sigma(q1, p);
  if (x < g1) x = g1;

  std::optional<Rat> lambda_sq;
  if (!options.assume_s_valid) {
    if (n > 4) throw UnsupportedDimensionError("lambda_n is computed only for n <= 4; assert the bound to continue");
    lambda_sq = successive_minimum(q0, n);
    const Rat other = successive_minimum(q1, n);
    if (*lambda_sq < other) lambda_sq = other;
    Real lam(*lambda_sq, p, MPFR_RNDU);
    mpfr_sqrt(lam.get(), lam.get(), MPFR_RNDU);
    if (x < lam) x = lam;
  }

  mpfr_mul_2ui(x.get(), x.get(), 32, MPFR_RNDU);
  Int num;
  mpfr_get_z(num.get_mpz_t(), x.get(), MPFR_RNDU);
  Int den(1);
  den <<= 32;
  Rat s(num, den);
  s.canonicalize();

  const Rat step(Int(1), den);
  while ((lambda_sq && s * s < *lambda_sq) || min_sigma(q0, p).cmp(s) > 0 || min_sigma(q1, p).cmp(s) > 0) {
    s += step;
  }
  return s;
}

Prover::Prover(Statement st, Witness w, const Rat& s, const ProtocolOptions& options)
    : st_(std::move(st)), w_(std::move(w)), sampler_(st_.P0, s, sampler_options(options)) {
  if (!is_valid_witness(st_, w_.U)) throw WitnessError("witness does not map P0 onto P1");
}

std::pair<Commitment, ProverState> Prover::commit(Rng& rng) {
  ClassSample cs = sampler_.sample(rng);
  Commitment com{cs.result.R};
  ProverState state{cs.result.U, cs.result.Z, cs.result.R};
  return {std::move(com), std::move(state)};
}

IntMatrix Prover::respond(const ProverState& state, int c) const { return prover_respond(state, w_, c); }

std::pair<Commitment, ProverState> prover_commit(const Statement& st, const Witness& w, const Rat& s, Rng& rng,
                                                 const ProtocolOptions& options) {
  Prover prover(st, w, s, options);
  return prover.commit(rng);
}

IntMatrix prover_respond(const ProverState& state, const Witness& w, int c) {
  if (c != 0 && c != 1) throw PreconditionError("challenge must be 0 or 1");
  if (c == 0) return state.V.matrix();
  return (state.V * w.U.inverse()).matrix();
}

int verifier_challenge(Rng& rng) { return rng.bit(); }

Verdict verify(const Statement& st, const Transcript& t) {
  const std::size_t n = st.dim();
  if (t.challenge != 0 && t.challenge != 1) {
    return Verdict::reject(RejectReason::BadChallenge, "challenge " + std::to_string(t.challenge));
  }
  if (t.response.rows() != n || t.response.cols() != n) {
    return Verdict::reject(RejectReason::DimensionMismatch, "response is not " + std::to_string(n) + "x" +
                                                                std::to_string(n));
  }
  if (t.commitment.size() != st.P0.vertex_count()) {
    return Verdict::reject(RejectReason::DimensionMismatch, "commitment has " + std::to_string(t.commitment.size()) +
                                                                " vertices, expected " +
                                                                std::to_string(st.P0.vertex_count()));
  }
  for (const auto& v : t.commitment) {
    if (v.size() != n) return Verdict::reject(RejectReason::DimensionMismatch, "commitment vertex of wrong length");
  }
  auto checked = verify_vertices(t.commitment);
  if (auto* bad = std::get_if<VertexRejection>(&checked)) {
    return Verdict::reject(RejectReason::MalformedCommitment, bad->message);
  }
  auto W = to_int(t.response);
  if (!W) return Verdict::reject(RejectReason::NonIntegral, "response has a non-integral entry");
  const Int dt = det(*W);
  if (dt != 1 && dt != -1) {
    return Verdict::reject(RejectReason::NotUnimodular, "det(W) = " + dt.get_str());
  }
  const LatticePolytope& pc = t.challenge == 0 ? st.P0 : st.P1;
  if (sorted_centered(t.commitment) != sorted_centered_image(t.response, pc)) {
    return Verdict::reject(RejectReason::VertexSetMismatch, "W (P_c - b) differs from P' - b'");
  }
  return Verdict::accept();
}

Simulator::Simulator(const Statement& st, const Rat& s, const ProtocolOptions& options)
    : from_p0_(st.P0, s, sampler_options(options)), from_p1_(st.P1, s, sampler_options(options)) {}

Transcript Simulator::simulate(int c, Rng& rng) {
  if (c != 0 && c != 1) throw PreconditionError("challenge must be 0 or 1");
  ClassSample cs = (c == 0 ? from_p0_ : from_p1_).sample(rng);
  return make_transcript(Commitment{cs.result.R}, c, cs.result.U.matrix());
}

Transcript simulate(const Statement& st, int c, const Rat& s, Rng& rng, const ProtocolOptions& options) {
  Simulator sim(st, s, options);
  return sim.simulate(c, rng);
}

Transcript make_transcript(const Commitment& com, int c, const IntMatrix& W) {
  return Transcript{com.Pprime.vertices(), c, to_rat(W)};
}

UnimodularMatrix extract_witness(const Statement& st, const Transcript& t0, const Transcript& t1) {
  if (t0.challenge != 0 || t1.challenge != 1) throw PreconditionError("need transcripts with challenges 0 and 1");
  if (t0.commitment != t1.commitment) throw ExtractionError("transcripts have different commitments");
  const Verdict v0 = verify(st, t0);
  if (!v0.accepted) throw ExtractionError("challenge-0 transcript rejected: " + to_string(*v0.reason));
  const Verdict v1 = verify(st, t1);
  if (!v1.accepted) throw ExtractionError("challenge-1 transcript rejected: " + to_string(*v1.reason));
  const IntMatrix w0 = *to_int(t0.response);
  const IntMatrix w1 = *to_int(t1.response);
  if (det(w1) == 0) throw ExtractionError("W1 is singular");
  UnimodularMatrix u = UnimodularMatrix(w1).inverse() * UnimodularMatrix(w0);
  if (!is_valid_witness(st, u)) throw ExtractionError("extracted matrix is not a witness");
  return u;
}

SessionReport run_protocol(const Statement& st, const Witness& w, const Rat& s, std::size_t rounds, Rng& rng,
                           const ProtocolOptions& options) {
  SessionReport report;
  if (rounds == 0) return report;
  Prover prover(st, w, s, options);
  Rng prover_rng = rng.substream("prover");
  Rng verifier_rng = rng.substream("verifier");
  for (std::size_t r = 0; r < rounds; ++r) {
    auto [com, state] = prover.commit(prover_rng);
    const int c = verifier_challenge(verifier_rng);
    Transcript t = make_transcript(com, c, prover.respond(state, c));
    Verdict v = verify(st, t);
    report.transcripts.push_back(std::move(t));
    report.verdicts.push_back(v);
    if (!v.accepted) {
      report.accepted = false;
      report.failed_round = r;
      break;
    }
  }
  return report;
}

}  // namespace polyiso
