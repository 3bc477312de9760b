#pragma once

// Line-oriented text formats. Every reader reports problems as ParseError
// with a 1-based line and column.
//
//   polytope    n d / d rows of n integers
//   graph       p n m / m lines "e i j", 1 <= i < j <= n
//   transcript  COMMIT n d + polytope rows, CHALLENGE c, RESPONSE n + n rows
//               (response entries may be p/q so a malformed W can be rejected)
//   map         MAP n / n rows of U / one row Z
//   transforms  TRANSFORMS k / k map blocks
//   witness     n / n rows

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "polyiso/exact.hpp"
#include "polyiso/polytope.hpp"
#include "polyiso/reduction.hpp"
#include "polyiso/zkp.hpp"

namespace polyiso {

/// Reads LF-terminated lines and tracks the line number for diagnostics.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  /// Next line without its terminator; nullopt at end of input.
  std::optional<std::string> next();
  /// Like next() but end of input is an error.
  std::string expect(const std::string& what);
  /// Fails unless the input is exhausted.
  void expect_end();

  std::size_t line() const noexcept { return line_; }
  [[noreturn]] void fail(std::size_t column, const std::string& what) const;

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

/// Single-space separated tokens with 1-based starting columns.
struct Token {
  std::string text;
  std::size_t column;
};
std::vector<Token> split_tokens(const LineReader& r, const std::string& line);
Int parse_int(const LineReader& r, const Token& t);
/// Integer or p/q with q > 0.
Rat parse_rat(const LineReader& r, const Token& t);
std::size_t parse_count(const LineReader& r, const Token& t, std::size_t max = 1000000);

// Polytopes.
std::vector<IntVec> read_points_body(LineReader& r, std::size_t n, std::size_t d);
std::vector<IntVec> read_polytope_points(std::istream& in);
/// Parses and certifies. Throws ParseError or InvalidPolytopeError.
LatticePolytope read_polytope(std::istream& in);
LatticePolytope read_polytope_file(const std::string& path);
void write_points_body(std::ostream& out, const std::vector<IntVec>& points);
void write_polytope(std::ostream& out, const LatticePolytope& p);
std::string polytope_text(const LatticePolytope& p);

// Graphs (1-based on disk).
SimpleGraph read_graph(std::istream& in);
SimpleGraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const SimpleGraph& g);

// Matrices and maps.
void write_matrix_rows(std::ostream& out, const IntMatrix& m);
IntMatrix read_matrix_rows(LineReader& r, std::size_t rows, std::size_t cols);
void write_map(std::ostream& out, const UnimodularAffineMap& t);
UnimodularAffineMap read_map(LineReader& r);
void write_transforms(std::ostream& out, const std::vector<UnimodularAffineMap>& ts);
std::vector<UnimodularAffineMap> read_transforms(std::istream& in);

// Witness.
void write_witness(std::ostream& out, const UnimodularMatrix& u);
UnimodularMatrix read_witness(std::istream& in);
UnimodularMatrix read_witness_file(const std::string& path);

// Transcripts; one round is COMMIT, CHALLENGE, RESPONSE in that order.
void write_commit(std::ostream& out, const std::vector<IntVec>& points);
void write_challenge(std::ostream& out, int c);
void write_response(std::ostream& out, const RatMatrix& w);
/// nullopt at clean end of input.
std::optional<std::vector<IntVec>> read_commit(LineReader& r);
int read_challenge(LineReader& r);
RatMatrix read_response(LineReader& r);
void write_transcript(std::ostream& out, const Transcript& t);
std::string transcript_text(const Transcript& t);
std::vector<Transcript> read_transcripts(std::istream& in);
std::vector<Transcript> read_transcripts_file(const std::string& path);

}  // namespace polyiso
