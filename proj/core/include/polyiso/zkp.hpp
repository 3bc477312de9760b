#pragma once

// Three-move proof of knowledge of a unimodular isomorphism.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyiso/avgcase.hpp"
#include "polyiso/exact.hpp"
#include "polyiso/polytope.hpp"
#include "polyiso/rng.hpp"

namespace polyiso {

struct Statement {
  LatticePolytope P0;
  LatticePolytope P1;

  /// Throws DimensionError unless both polytopes share n and d.
  Statement(LatticePolytope p0, LatticePolytope p1);
  std::size_t dim() const noexcept { return P0.dim(); }
};

struct Witness {
  UnimodularMatrix U;
};

/// U (V(P0) - b_P0) = V(P1) - b_P1 as sets.
bool is_valid_witness(const Statement& st, const UnimodularMatrix& U);

struct Commitment {
  LatticePolytope Pprime;
};

struct ProverState {
  UnimodularMatrix V;
  IntVec Zprime;
  LatticePolytope Pprime;
};

/// One round as it appears on the wire. The commitment is kept as raw points
/// so the verifier can certify it on receipt; the response is rational so a
/// non-integral W can be represented and rejected.
struct Transcript {
  std::vector<IntVec> commitment;
  int challenge = 0;
  RatMatrix response;
};

enum class RejectReason {
  DimensionMismatch,
  MalformedCommitment,
  BadChallenge,
  NonIntegral,
  NotUnimodular,
  VertexSetMismatch,
};

std::string to_string(RejectReason reason);

struct Verdict {
  bool accepted = false;
  std::optional<RejectReason> reason;
  std::string detail;

  static Verdict accept() { return Verdict{true, std::nullopt, {}}; }
  static Verdict reject(RejectReason r, std::string detail) { return Verdict{false, r, std::move(detail)}; }
};

struct ProtocolOptions {
  mpfr_prec_t precision = kDefaultPrecision;
  unsigned tail_cut = kDefaultTailCut;
  bool assume_s_valid = false;
};

/// Smallest multiple of 2^-32 that is at least
/// max{lambda_n(Q0), max{||B*_Q0||, ||B*_Q1||} sqrt(ln(2n+4)/pi)}.
/// With assume_s_valid the lambda_n branch is skipped (needed for n > 4).
Rat protocol_sigma_param(const Statement& st, const ProtocolOptions& options = {});

/// Honest prover bound to one statement and witness.
class Prover {
 public:
  /// Throws WitnessError when the witness does not map P0 onto P1.
  Prover(Statement st, Witness w, const Rat& s, const ProtocolOptions& options = {});

  std::pair<Commitment, ProverState> commit(Rng& rng);
  /// W = V U^{-c}.
  IntMatrix respond(const ProverState& state, int c) const;

  const Statement& statement() const noexcept { return st_; }

 private:
  Statement st_;
  Witness w_;
  ClassSampler sampler_;
};

std::pair<Commitment, ProverState> prover_commit(const Statement& st, const Witness& w, const Rat& s, Rng& rng,
                                                 const ProtocolOptions& options = {});
IntMatrix prover_respond(const ProverState& state, const Witness& w, int c);
int verifier_challenge(Rng& rng);

/// Certifies the commitment, then checks W in GL_n(Z) and
/// V(P' - b_P') = V(W P_c - W b_Pc) by sorted comparison.
Verdict verify(const Statement& st, const Transcript& t);

/// Accepting transcript for challenge c without the witness.
class Simulator {
 public:
  Simulator(const Statement& st, const Rat& s, const ProtocolOptions& options = {});
  Transcript simulate(int c, Rng& rng);

 private:
  ClassSampler from_p0_;
  ClassSampler from_p1_;
};

Transcript simulate(const Statement& st, int c, const Rat& s, Rng& rng, const ProtocolOptions& options = {});

/// U' = W1^{-1} W0 from accepting transcripts with challenges 0 and 1 and
/// identical commitments. Throws PreconditionError unless the challenges are
/// 0 and 1, ExtractionError for any other failure.
UnimodularMatrix extract_witness(const Statement& st, const Transcript& t0, const Transcript& t1);

Transcript make_transcript(const Commitment& com, int c, const IntMatrix& W);

struct SessionReport {
  std::vector<Transcript> transcripts;
  std::vector<Verdict> verdicts;
  bool accepted = true;
  std::optional<std::size_t> failed_round;  ///< 0-based.
};

/// k sequential honest rounds; stops at the first rejection.
SessionReport run_protocol(const Statement& st, const Witness& w, const Rat& s, std::size_t rounds, Rng& rng,
                           const ProtocolOptions& options = {});

}  // namespace polyiso
