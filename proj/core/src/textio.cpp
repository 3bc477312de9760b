#include "polyiso/textio.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace polyiso {

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  return in;
}

void expect_keyword(const LineReader& r, const std::vector<Token>& toks, const std::string& keyword,
                    std::size_t arity) {
  if (toks.empty() || toks[0].text != keyword) {
    r.fail(1, "expected '" + keyword + "'");
  }
  if (toks.size() != arity + 1) {
    r.fail(toks.back().column, "'" + keyword + "' takes " + std::to_string(arity) + " argument(s)");
  }
}

}  // namespace

std::optional<std::string> LineReader::next() {
  std::string line;
  if (!std::getline(in_, line)) return std::nullopt;
  ++line_;
  if (in_.eof()) fail(line.size() + 1, "missing final newline");
  const auto cr = line.find('\r');
  if (cr != std::string::npos) fail(cr + 1, "carriage return (lines must end with LF only)");
  return line;
}

std::string LineReader::expect(const std::string& what) {
  auto line = next();
  if (!line) {
    ++line_;
    fail(1, "unexpected end of input, expected " + what);
  }
  return *line;
}

void LineReader::expect_end() {
  auto line = next();
  if (line) fail(1, "unexpected trailing content");
}

void LineReader::fail(std::size_t column, const std::string& what) const { throw ParseError(line_, column, what); }

std::vector<Token> split_tokens(const LineReader& r, const std::string& line) {
  std::vector<Token> out;
  if (line.empty()) r.fail(1, "empty line");
  std::size_t pos = 0;
  for (;;) {
    if (pos >= line.size() || line[pos] == ' ') r.fail(pos + 1, "expected a token (single spaces only, no trailing whitespace)");
    const std::size_t end = line.find(' ', pos);
    const std::size_t stop = end == std::string::npos ? line.size() : end;
    for (std::size_t k = pos; k < stop; ++k) {
      const char ch = line[k];
      if (ch == '\t' || ch == '\v' || ch == '\f') r.fail(k + 1, "tab or control whitespace");
    }
    out.push_back(Token{line.substr(pos, stop - pos), pos + 1});
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return out;
}

Int parse_int(const LineReader& r, const Token& t) {
  const std::string& s = t.text;
  std::size_t k = s[0] == '-' ? 1 : 0;
  if (k == s.size()) r.fail(t.column, "expected an integer, got '" + s + "'");
  for (std::size_t i = k; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') r.fail(t.column + i, "expected an integer, got '" + s + "'");
  }
  return Int(s, 10);
}

Rat parse_rat(const LineReader& r, const Token& t) {
  const auto slash = t.text.find('/');
  if (slash == std::string::npos) return Rat(parse_int(r, t));
  const Int num = parse_int(r, Token{t.text.substr(0, slash), t.column});
  const Int den = parse_int(r, Token{t.text.substr(slash + 1), t.column + slash + 1});
  if (den <= 0) r.fail(t.column + slash + 1, "denominator must be positive");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::size_t parse_count(const LineReader& r, const Token& t, std::size_t max) {
  const Int v = parse_int(r, t);
  if (v < 0 || v > Int(static_cast<unsigned long>(max))) {
    r.fail(t.column, "count " + t.text + " out of range [0, " + std::to_string(max) + "]");
  }
  return v.get_ui();
}

std::vector<IntVec> read_points_body(LineReader& r, std::size_t n, std::size_t d) {
  std::vector<IntVec> points;
  points.reserve(d);
  for (std::size_t k = 0; k < d; ++k) {
    const std::string line = r.expect("vertex " + std::to_string(k + 1) + " of " + std::to_string(d));
    const auto toks = split_tokens(r, line);
    if (toks.size() != n) {
      r.fail(toks.size() > n ? toks[n].column : line.size() + 1,
             "expected " + std::to_string(n) + " coordinates, got " + std::to_string(toks.size()));
    }
    IntVec v;
    v.reserve(n);
    for (const auto& t : toks) v.push_back(parse_int(r, t));
    points.push_back(std::move(v));
  }
  return points;
}

std::vector<IntVec> read_polytope_points(std::istream& in) {
  LineReader r(in);
  const std::string header = r.expect("header 'n d'");
  const auto toks = split_tokens(r, header);
  if (toks.size() != 2) r.fail(toks.size() > 2 ? toks[2].column : header.size() + 1, "header must be 'n d'");
  const std::size_t n = parse_count(r, toks[0]);
  const std::size_t d = parse_count(r, toks[1]);
  if (n == 0) r.fail(toks[0].column, "dimension must be positive");
  if (d == 0) r.fail(toks[1].column, "vertex count must be positive");
  auto points = read_points_body(r, n, d);
  r.expect_end();
  return points;
}

LatticePolytope read_polytope(std::istream& in) { return certify_polytope(read_polytope_points(in)); }

LatticePolytope read_polytope_file(const std::string& path) {
  auto in = open_input(path);
  return read_polytope(in);
}

void write_points_body(std::ostream& out, const std::vector<IntVec>& points) {
  for (const auto& v : points) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out << ' ';
      out << v[i].get_str();
    }
    out << '\n';
  }
}

void write_polytope(std::ostream& out, const LatticePolytope& p) {
  out << p.dim() << ' ' << p.vertex_count() << '\n';
  write_points_body(out, p.vertices());
}

std::string polytope_text(const LatticePolytope& p) {
  std::ostringstream os;
  write_polytope(os, p);
  return os.str();
}

SimpleGraph read_graph(std::istream& in) {
  LineReader r(in);
  const std::string header = r.expect("header 'p n m'");
  const auto toks = split_tokens(r, header);
  expect_keyword(r, toks, "p", 2);
  const std::size_t n = parse_count(r, toks[1], 64);
  const std::size_t m = parse_count(r, toks[2]);
  if (n == 0) r.fail(toks[1].column, "node count must be positive");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t k = 0; k < m; ++k) {
    const std::string line = r.expect("edge line 'e i j'");
    const auto et = split_tokens(r, line);
    expect_keyword(r, et, "e", 2);
    const std::size_t i = parse_count(r, et[1], n);
    const std::size_t j = parse_count(r, et[2], n);
    if (i == 0) r.fail(et[1].column, "node indices start at 1");
    if (j == 0) r.fail(et[2].column, "node indices start at 1");
    if (i == j) r.fail(et[2].column, "self-loop on node " + std::to_string(i));
    if (i > j) r.fail(et[2].column, "edge must be written with i < j");
    if (!seen.emplace(i, j).second) r.fail(et[1].column, "duplicate edge " + std::to_string(i) + " " + std::to_string(j));
    edges.emplace_back(i - 1, j - 1);
  }
  r.expect_end();
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph read_graph_file(const std::string& path) {
  auto in = open_input(path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const SimpleGraph& g) {
  out << "p " << g.node_count() << ' ' << g.edges().size() << '\n';
  for (const auto& [i, j] : g.edges()) out << "e " << i + 1 << ' ' << j + 1 << '\n';
}

void write_matrix_rows(std::ostream& out, const IntMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      out << m(r, c).get_str();
    }
    out << '\n';
  }
}

IntMatrix read_matrix_rows(LineReader& r, std::size_t rows, std::size_t cols) {
  IntMatrix m(rows, cols);
  const auto pts = read_points_body(r, cols, rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = pts[i][j];
  return m;
}

void write_map(std::ostream& out, const UnimodularAffineMap& t) {
  out << "MAP " << t.dim() << '\n';
  write_matrix_rows(out, t.U.matrix());
  write_points_body(out, {t.Z});
}

UnimodularAffineMap read_map(LineReader& r) {
  const std::string header = r.expect("'MAP n'");
  const auto toks = split_tokens(r, header);
  expect_keyword(r, toks, "MAP", 1);
  const std::size_t n = parse_count(r, toks[1], 64);
  if (n == 0) r.fail(toks[1].column, "dimension must be positive");
  const std::size_t first_row = r.line() + 1;
  IntMatrix u = read_matrix_rows(r, n, n);
  if (!is_unimodular(u)) throw ParseError(first_row, 1, "matrix is not unimodular");
  IntVec z = read_points_body(r, n, 1).front();
  return UnimodularAffineMap(UnimodularMatrix(std::move(u)), std::move(z));
}

void write_transforms(std::ostream& out, const std::vector<UnimodularAffineMap>& ts) {
  out << "TRANSFORMS " << ts.size() << '\n';
  for (const auto& t : ts) write_map(out, t);
}

std::vector<UnimodularAffineMap> read_transforms(std::istream& in) {
  LineReader r(in);
  const std::string header = r.expect("'TRANSFORMS k'");
  const auto toks = split_tokens(r, header);
  expect_keyword(r, toks, "TRANSFORMS", 1);
  const std::size_t k = parse_count(r, toks[1]);
  std::vector<UnimodularAffineMap> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.push_back(read_map(r));
  r.expect_end();
  return out;
}

void write_witness(std::ostream& out, const UnimodularMatrix& u) {
  out << u.dim() << '\n';
  write_matrix_rows(out, u.matrix());
}

UnimodularMatrix read_witness(std::istream& in) {
  LineReader r(in);
  const std::string header = r.expect("dimension line");
  const auto toks = split_tokens(r, header);
  if (toks.size() != 1) r.fail(toks[1].column, "first line must hold only the dimension");
  const std::size_t n = parse_count(r, toks[0], 64);
  if (n == 0) r.fail(toks[0].column, "dimension must be positive");
  IntMatrix u = read_matrix_rows(r, n, n);
  r.expect_end();
  if (!is_unimodular(u)) throw ParseError(2, 1, "witness matrix is not unimodular");
  return UnimodularMatrix(std::move(u));
}

UnimodularMatrix read_witness_file(const std::string& path) {
  auto in = open_input(path);
  return read_witness(in);
}

void write_commit(std::ostream& out, const std::vector<IntVec>& points) {
  out << "COMMIT " << (points.empty() ? 0 : points.front().size()) << ' ' << points.size() << '\n';
  write_points_body(out, points);
}

void write_challenge(std::ostream& out, int c) { out << "CHALLENGE " << c << '\n'; }

void write_response(std::ostream& out, const RatMatrix& w) {
  out << "RESPONSE " << w.rows() << '\n';
  for (std::size_t r = 0; r < w.rows(); ++r) {
    for (std::size_t c = 0; c < w.cols(); ++c) {
      if (c) out << ' ';
      out << w(r, c).get_str();
    }
    out << '\n';
  }
}

std::optional<std::vector<IntVec>> read_commit(LineReader& r) {
  auto header = r.next();
  if (!header) return std::nullopt;
  const auto toks = split_tokens(r, *header);
  expect_keyword(r, toks, "COMMIT", 2);
  const std::size_t n = parse_count(r, toks[1], 64);
  const std::size_t d = parse_count(r, toks[2]);
  if (n == 0) r.fail(toks[1].column, "dimension must be positive");
  if (d == 0) r.fail(toks[2].column, "vertex count must be positive");
  return read_points_body(r, n, d);
}

int read_challenge(LineReader& r) {
  const std::string line = r.expect("'CHALLENGE c'");
  const auto toks = split_tokens(r, line);
  expect_keyword(r, toks, "CHALLENGE", 1);
  if (toks[1].text != "0" && toks[1].text != "1") r.fail(toks[1].column, "challenge must be 0 or 1");
  return toks[1].text == "1" ? 1 : 0;
}

RatMatrix read_response(LineReader& r) {
  const std::string line = r.expect("'RESPONSE n'");
  const auto toks = split_tokens(r, line);
  expect_keyword(r, toks, "RESPONSE", 1);
  const std::size_t n = parse_count(r, toks[1], 64);
  if (n == 0) r.fail(toks[1].column, "dimension must be positive");
  RatMatrix w(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string row = r.expect("response row " + std::to_string(i + 1) + " of " + std::to_string(n));
    const auto rt = split_tokens(r, row);
    if (rt.size() != n) {
      r.fail(rt.size() > n ? rt[n].column : row.size() + 1,
             "expected " + std::to_string(n) + " entries, got " + std::to_string(rt.size()));
    }
    for (std::size_t j = 0; j < n; ++j) w(i, j) = parse_rat(r, rt[j]);
  }
  return w;
}

void write_transcript(std::ostream& out, const Transcript& t) {
  write_commit(out, t.commitment);
  write_challenge(out, t.challenge);
  write_response(out, t.response);
}

std::string transcript_text(const Transcript& t) {
  std::ostringstream os;
  write_transcript(os, t);
  return os.str();
}

std::vector<Transcript> read_transcripts(std::istream& in) {
  LineReader r(in);
  std::vector<Transcript> out;
  while (auto com = read_commit(r)) {
    Transcript t;
    t.commitment = std::move(*com);
    t.challenge = read_challenge(r);
    t.response = read_response(r);
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<Transcript> read_transcripts_file(const std::string& path) {
  auto in = open_input(path);
  return read_transcripts(in);
}

}  // namespace polyiso
