#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "polyiso/avgcase.hpp"
#include "polyiso/reduction.hpp"
#include "polyiso/textio.hpp"
#include "polyiso/uip.hpp"
#include "polyiso/zkp.hpp"

namespace polyiso::cli {

namespace {

struct Config {
  std::uint64_t seed = 0;
  long precision = kDefaultPrecision;
  unsigned tau = kDefaultTailCut;
  std::size_t cap_trees = kDefaultCap;
  std::size_t cap_maps = kDefaultCap;
  std::size_t rounds = 20;
  std::string s;
  bool assume_s_valid = false;
  bool verbose = false;

  UipOptions uip() const { return UipOptions{cap_trees, cap_maps, SearchStrategy::Auto}; }
  ProtocolOptions protocol() const {
    return ProtocolOptions{static_cast<mpfr_prec_t>(precision), tau, assume_s_valid};
  }
  ClassSamplerOptions sampler() const {
    return ClassSamplerOptions{static_cast<mpfr_prec_t>(precision), tau, assume_s_valid};
  }
};

// Streams opened by path, with "-" meaning the caller's stream.
class Streams {
 public:
  Streams(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  std::istream& input(const std::string& path) {
    if (path == "-") return in_;
    auto f = std::make_unique<std::ifstream>(path, std::ios::binary);
    if (!*f) throw Error("cannot open " + path);
    inputs_.push_back(std::move(f));
    return *inputs_.back();
  }
  std::ostream& output(const std::string& path) {
    if (path == "-") return out_;
    auto f = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
    if (!*f) throw Error("cannot write " + path);
    outputs_.push_back(std::move(f));
    return *outputs_.back();
  }

 private:
  std::istream& in_;
  std::ostream& out_;
  std::vector<std::unique_ptr<std::ifstream>> inputs_;
  std::vector<std::unique_ptr<std::ofstream>> outputs_;
};

Rat parse_s(const std::string& text) {
  Rat s;
  if (s.set_str(text, 10) != 0) throw ParameterError("--s expects an integer or p/q, got '" + text + "'");
  if (s.get_den() == 0) throw ParameterError("--s has a zero denominator");
  s.canonicalize();
  if (s <= 0) throw ParameterError("--s must be positive");
  return s;
}

Rat sigma_for(const Config& cfg, const LatticePolytope& p0, const LatticePolytope& p1) {
  if (!cfg.s.empty()) return parse_s(cfg.s);
  return protocol_sigma_param(Statement(p0, p1), cfg.protocol());
}

void write_comment_matrix(std::ostream& out, const UnimodularMatrix& u, const IntVec& z) {
  out << "# U\n";
  const IntMatrix& m = u.matrix();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << '#';
    for (std::size_t c = 0; c < m.cols(); ++c) out << ' ' << m(r, c).get_str();
    out << '\n';
  }
  out << "# Z";
  for (const auto& x : z) out << ' ' << x.get_str();
  out << '\n';
}

int cmd_decide(const Config& cfg, const std::string& a, const std::string& b, std::ostream& out) {
  const auto p = read_polytope_file(a);
  const auto pp = read_polytope_file(b);
  const auto t = find_transform(p, pp, cfg.uip());
  if (!t) {
    out << "NOT-ISOMORPHIC\n";
    return kExitNo;
  }
  out << "ISOMORPHIC\n";
  write_map(out, *t);
  return kExitYes;
}

int cmd_transforms(const Config& cfg, const std::string& a, const std::string& b, bool oracle,
                   std::ostream& out, std::ostream& err) {
  const auto p = read_polytope_file(a);
  const auto pp = read_polytope_file(b);
  const auto ts = oracle ? oracle_all_transforms(p, pp) : all_transforms(p, pp, cfg.uip());
  if (cfg.verbose) err << ts.size() << " transform(s)\n";
  write_transforms(out, ts);
  return ts.empty() ? kExitNo : kExitYes;
}

int cmd_labels(const std::string& a, std::ostream& out) {
  const auto p = read_polytope_file(a);
  const auto gw = labeled_graph(p);
  out << "LABELS " << p.vertex_count() << '\n';
  for (std::size_t v = 0; v < p.vertex_count(); ++v) {
    for (std::size_t i = 0; i < p.dim(); ++i) out << p.vertex(v)[i].get_str() << ' ';
    out << ": " << gw.labels[v].get_str() << '\n';
  }
  return kExitYes;
}

int cmd_edges(const std::string& a, std::ostream& out) {
  const auto p = read_polytope_file(a);
  const auto g = edge_graph(p);
  out << "EDGES " << g.edges().size() << '\n';
  for (const auto& [i, j] : g.edges()) out << i + 1 << ' ' << j + 1 << '\n';
  return kExitYes;
}

std::string canonical_text(const LatticePolytope& r) { return polytope_text(r); }

int cmd_sample(const Config& cfg, const std::string& a, const std::string& compare, std::size_t count,
               std::ostream& out, std::ostream& err) {
  const auto p = read_polytope_file(a);
  const std::optional<LatticePolytope> q =
      compare.empty() ? std::nullopt : std::optional<LatticePolytope>(read_polytope_file(compare));
  const Rat s = sigma_for(cfg, p, q ? *q : p);
  if (cfg.verbose) err << "s = " << s.get_str() << '\n';
  const Rng root(cfg.seed);
  if (!q) {
    ClassSampler sampler(p, s, cfg.sampler());
    Rng rng = root.substream("sample");
    for (std::size_t k = 0; k < count; ++k) {
      const auto cs = sampler.sample(rng);
      write_comment_matrix(out, cs.result.U, cs.result.Z);
      write_polytope(out, cs.result.R);
    }
    return kExitYes;
  }
  ClassSampler sa(p, s, cfg.sampler());
  ClassSampler sb(*q, s, cfg.sampler());
  Rng ra = root.substream("sample");
  Rng rb = root.substream("sample-compare");
  std::map<std::string, std::pair<std::size_t, std::size_t>> hist;
  for (std::size_t k = 0; k < count; ++k) {
    ++hist[canonical_text(sa.sample(ra).result.R)].first;
    ++hist[canonical_text(sb.sample(rb).result.R)].second;
  }
  double tv = 0;
  for (const auto& [key, c] : hist) {
    tv += std::abs(static_cast<double>(c.first) - static_cast<double>(c.second));
  }
  tv /= 2.0 * static_cast<double>(std::max<std::size_t>(count, 1));
  std::ostringstream os;
  os.precision(6);
  os << std::fixed << tv;
  out << "CLASSES " << hist.size() << '\n' << "TV " << os.str() << '\n';
  return kExitYes;
}

int cmd_reduce(const std::string& ga, const std::string& gb, const std::string& oa, const std::string& ob,
               Streams& io, std::ostream& out) {
  const auto g = read_graph_file(ga);
  const auto gp = read_graph_file(gb);
  const auto res = reduce_gip_to_uip(g, gp);
  if (const bool* answer = std::get_if<bool>(&res)) {
    out << (*answer ? "TRIVIAL ISOMORPHIC\n" : "TRIVIAL NOT-ISOMORPHIC\n");
    return *answer ? kExitYes : kExitNo;
  }
  const auto& [pa, pb] = std::get<std::pair<LatticePolytope, LatticePolytope>>(res);
  auto& fa = io.output(oa);
  write_polytope(fa, pa);
  fa.flush();
  auto& fb = io.output(ob);
  write_polytope(fb, pb);
  fb.flush();
  out << "REDUCED " << pa.dim() << ' ' << pa.vertex_count() << '\n';
  return kExitYes;
}

int cmd_prove(const Config& cfg, const std::string& a, const std::string& b, const std::string& witness,
              const std::string& in_path, const std::string& out_path, const std::string& log_path, Streams& io,
              std::ostream& err) {
  Statement st(read_polytope_file(a), read_polytope_file(b));
  Witness w{read_witness_file(witness)};
  if (w.U.dim() != st.dim()) throw DimensionError("witness dimension differs from the statement");
  const Rat s = sigma_for(cfg, st.P0, st.P1);
  Prover prover(st, w, s, cfg.protocol());
  Rng rng = Rng(cfg.seed).substream("prover");
  // The prover speaks first; opening its channel first lets a FIFO pair rendezvous.
  std::ostream& out = io.output(out_path);
  std::istream& in = io.input(in_path);
  std::ostream* log = log_path.empty() ? nullptr : &io.output(log_path);
  LineReader reader(in);
  for (std::size_t round = 0; round < cfg.rounds; ++round) {
    auto [com, state] = prover.commit(rng);
    const auto points = com.Pprime.vertices();
    write_commit(out, points);
    out.flush();
    int c = 0;
    try {
      c = read_challenge(reader);
    } catch (const ParseError& e) {
      if (!in.eof()) throw;
      err << "prover: verifier closed the session after " << round << " round(s)\n";
      return kExitNo;
    }
    const IntMatrix W = prover.respond(state, c);
    write_response(out, to_rat(W));
    out.flush();
    if (log) write_transcript(*log, make_transcript(com, c, W));
  }
  if (log) log->flush();
  return kExitYes;
}

void report(std::ostream& err, std::size_t round, const Verdict& v) {
  err << "round " << round + 1 << ": ";
  if (v.accepted) {
    err << "accept\n";
  } else {
    err << "reject (" << to_string(*v.reason) << ": " << v.detail << ")\n";
  }
}

int cmd_verify(const Config& cfg, const std::string& a, const std::string& b, const std::string& in_path,
               const std::string& out_path, const std::string& log_path, const std::string& replay,
               int fixed_challenge, Streams& io, std::ostream& err) {
  Statement st(read_polytope_file(a), read_polytope_file(b));
  if (!replay.empty()) {
    const auto ts = read_transcripts_file(replay);
    for (std::size_t k = 0; k < ts.size(); ++k) {
      const Verdict v = verify(st, ts[k]);
      report(err, k, v);
      if (!v.accepted) {
        err << "REJECT\n";
        return kExitNo;
      }
    }
    err << "ACCEPT\n";
    return kExitYes;
  }
  Rng rng = Rng(cfg.seed).substream("verifier");
  std::istream& in = io.input(in_path);
  std::ostream& out = io.output(out_path);
  std::ostream* log = log_path.empty() ? nullptr : &io.output(log_path);
  LineReader reader(in);
  for (std::size_t round = 0; round < cfg.rounds; ++round) {
    auto com = read_commit(reader);
    if (!com) {
      err << "verifier: prover closed the session after " << round << " round(s)\nREJECT\n";
      return kExitNo;
    }
    const int c = fixed_challenge >= 0 ? fixed_challenge : verifier_challenge(rng);
    write_challenge(out, c);
    out.flush();
    Transcript t;
    t.commitment = std::move(*com);
    t.challenge = c;
    t.response = read_response(reader);
    if (log) {
      write_transcript(*log, t);
      log->flush();
    }
    const Verdict v = verify(st, t);
    report(err, round, v);
    if (!v.accepted) {
      err << "REJECT\n";
      return kExitNo;
    }
  }
  err << "ACCEPT\n";
  return kExitYes;
}

int cmd_extract(const std::string& a, const std::string& b, const std::string& ta, const std::string& tb,
                const std::string& out_path, Streams& io, std::ostream& err) {
  Statement st(read_polytope_file(a), read_polytope_file(b));
  const auto first = read_transcripts_file(ta);
  const auto second = read_transcripts_file(tb);
  if (first.empty() || second.empty()) throw Error("transcript file holds no rounds");
  const Transcript* t0 = &first.front();
  const Transcript* t1 = &second.front();
  if (t0->challenge == 1 && t1->challenge == 0) std::swap(t0, t1);
  try {
    const auto u = extract_witness(st, *t0, *t1);
    auto& out = io.output(out_path);
    write_witness(out, u);
    out.flush();
    return kExitYes;
  } catch (const ExtractionError& e) {
    err << "extraction failed: " << e.what() << '\n';
    return kExitNo;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unimodular isomorphism of lattice polytopes"};
  app.name(args.empty() ? "polyiso" : args.front());
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_option("--precision", cfg.precision, "Floating-point precision in bits")->check(CLI::Range(64L, 65536L));
  app.add_option("--tau", cfg.tau, "Gaussian tail cut")->check(CLI::Range(6u, 1000u));
  app.add_option("--cap-trees", cfg.cap_trees, "Cap on enumerated spanning trees")->check(CLI::PositiveNumber);
  app.add_option("--cap-maps", cfg.cap_maps, "Cap on enumerated tree maps")->check(CLI::PositiveNumber);
  app.add_option("--rounds", cfg.rounds, "Protocol rounds");
  app.add_option("--s", cfg.s, "Gaussian parameter as an integer or p/q");
  app.add_flag("--assume-s-valid", cfg.assume_s_valid, "Skip the successive-minimum check on s");
  app.add_flag("-v,--verbose", cfg.verbose, "Report progress on stderr");

  std::string a, b, c, d;
  std::string in_path = "-", out_path = "-", log_path, replay, compare;
  std::size_t count = 1;
  int challenge = -1;

  auto* decide_cmd = app.add_subcommand("decide", "Decide whether two polytopes are unimodularly isomorphic");
  auto* transforms_cmd = app.add_subcommand("transforms", "List every unimodular affine map between two polytopes");
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force transform listing (n <= 3, d <= 10)");
  for (auto* sc : {decide_cmd, transforms_cmd, oracle_cmd}) {
    sc->add_option("A", a, "First polytope file")->required();
    sc->add_option("B", b, "Second polytope file")->required();
  }
  auto* labels_cmd = app.add_subcommand("labels", "Print vertex labels");
  auto* edges_cmd = app.add_subcommand("edges", "Print the edge graph (1-based vertex indices in lex order)");
  for (auto* sc : {labels_cmd, edges_cmd}) sc->add_option("P", a, "Polytope file")->required();

  auto* sample_cmd = app.add_subcommand("sample", "Sample class representatives");
  sample_cmd->add_option("P", a, "Polytope file")->required();
  sample_cmd->add_option("--count", count, "Number of samples");
  sample_cmd->add_option("--compare", compare, "Second representative; report the total variation instead");

  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a graph isomorphism instance to polytopes");
  reduce_cmd->add_option("GA", a, "First graph file")->required();
  reduce_cmd->add_option("GB", b, "Second graph file")->required();
  reduce_cmd->add_option("OUTA", c, "Output polytope for GA")->required();
  reduce_cmd->add_option("OUTB", d, "Output polytope for GB")->required();

  auto* prove_cmd = app.add_subcommand("prove", "Run the prover side of the protocol");
  prove_cmd->add_option("P0", a, "First polytope")->required();
  prove_cmd->add_option("P1", b, "Second polytope")->required();
  prove_cmd->add_option("WITNESS", c, "Witness matrix file")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run the verifier side of the protocol");
  verify_cmd->add_option("P0", a, "First polytope")->required();
  verify_cmd->add_option("P1", b, "Second polytope")->required();
  verify_cmd->add_option("--replay", replay, "Check stored transcripts instead of running a session");
  verify_cmd->add_option("--challenge", challenge, "Send this challenge every round")->check(CLI::Range(0, 1));

  for (auto* sc : {prove_cmd, verify_cmd}) {
    sc->add_option("--in", in_path, "Incoming messages ('-' for stdin)");
    sc->add_option("--out", out_path, "Outgoing messages ('-' for stdout)");
    sc->add_option("--transcript", log_path, "Also write the session transcript here");
  }

  auto* extract_cmd = app.add_subcommand("extract", "Recover a witness from two transcripts with a shared commitment");
  extract_cmd->add_option("P0", a, "First polytope")->required();
  extract_cmd->add_option("P1", b, "Second polytope")->required();
  extract_cmd->add_option("T0", c, "Transcript file")->required();
  extract_cmd->add_option("T1", d, "Transcript file")->required();
  extract_cmd->add_option("--out", out_path, "Witness output ('-' for stdout)");

  for (auto* sc : app.get_subcommands({})) sc->fallthrough();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitInput;
  }

  Streams io(in, out);
  try {
    if (*decide_cmd) return cmd_decide(cfg, a, b, out);
    if (*transforms_cmd) return cmd_transforms(cfg, a, b, false, out, err);
    if (*oracle_cmd) return cmd_transforms(cfg, a, b, true, out, err);
    if (*labels_cmd) return cmd_labels(a, out);
    if (*edges_cmd) return cmd_edges(a, out);
    if (*sample_cmd) return cmd_sample(cfg, a, compare, count, out, err);
    if (*reduce_cmd) return cmd_reduce(a, b, c, d, io, out);
    if (*prove_cmd) return cmd_prove(cfg, a, b, c, in_path, out_path, log_path, io, err);
    if (*verify_cmd) return cmd_verify(cfg, a, b, in_path, out_path, log_path, replay, challenge, io, err);
    if (*extract_cmd) return cmd_extract(a, b, c, d, out_path, io, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace polyiso::cli
