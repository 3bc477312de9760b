#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "polyiso/textio.hpp"
#include "polyiso/zkp.hpp"

using namespace polyiso;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "polyiso");
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(POLYISO_DATA_DIR) + "/" + name; }

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("polyiso-cli-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                         "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& content = "") const {
    const auto p = path_ / name;
    if (!content.empty()) std::ofstream(p, std::ios::binary) << content;
    return p.string();
  }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST(Cli, DecideIsomorphic) {
  const auto r = run({"decide", data("square.txt"), data("sheared_square.txt")});
  EXPECT_EQ(r.code, cli::kExitYes);
  ASSERT_EQ(r.out.rfind("ISOMORPHIC\nMAP 2\n", 0), 0u) << r.out;
  std::istringstream in("TRANSFORMS 1\n" + r.out.substr(11));
  const auto ts = read_transforms(in);
  ASSERT_EQ(ts.size(), 1u);
  EXPECT_EQ(apply_map(read_polytope_file(data("square.txt")), ts[0]), read_polytope_file(data("sheared_square.txt")));
}

TEST(Cli, DecideNotIsomorphic) {
  const auto r = run({"decide", data("square.txt"), data("simplex2.txt")});
  EXPECT_EQ(r.code, cli::kExitNo);
  EXPECT_EQ(r.out, "NOT-ISOMORPHIC\n");
}

TEST(Cli, TransformsAndOracleAgree) {
  const auto a = run({"transforms", data("square.txt"), data("sheared_square.txt")});
  const auto b = run({"oracle", data("square.txt"), data("sheared_square.txt")});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("TRANSFORMS 8\n", 0), 0u);
}

TEST(Cli, LabelsAndEdges) {
  EXPECT_EQ(run({"labels", data("square.txt")}).out, "LABELS 4\n0 0 : 1\n0 1 : 1\n1 0 : 1\n1 1 : 1\n");
  EXPECT_EQ(run({"edges", data("square.txt")}).out, "EDGES 4\n1 2\n1 3\n2 4\n3 4\n");
}

TEST(Cli, SampleReproducible) {
  const auto a = run({"sample", data("square.txt"), "--count", "5", "--seed", "7"});
  const auto b = run({"--seed", "7", "sample", data("square.txt"), "--count", "5"});
  const auto c = run({"sample", data("square.txt"), "--count", "5", "--seed", "8"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
  EXPECT_EQ(a.out.rfind("# U\n", 0), 0u);
}

TEST(Cli, SampleCompare) {
  const auto r = run({"sample", data("square.txt"), "--compare", data("sheared_square.txt"), "--count", "50"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("CLASSES ", 0), 0u);
  EXPECT_NE(r.out.find("\nTV 0."), std::string::npos);
}

TEST(Cli, Reduce) {
  TempDir dir;
  const auto oa = dir.file("a.txt"), ob = dir.file("b.txt");
  const auto r = run({"reduce", data("c4_a.txt"), data("c4_b.txt"), oa, ob});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "REDUCED 5 14\n");
  EXPECT_EQ(run({"decide", oa, ob}).code, cli::kExitYes);
  const auto notiso = run({"reduce", data("c4_a.txt"), data("path4.txt"), oa, ob});
  EXPECT_EQ(notiso.code, 0);
  EXPECT_EQ(run({"decide", oa, ob}).code, cli::kExitNo);

  const auto e = dir.file("empty.txt", "p 3 0\n");
  const auto trivial = run({"reduce", e, e, oa, ob});
  EXPECT_EQ(trivial.code, cli::kExitYes);
  EXPECT_EQ(trivial.out, "TRIVIAL ISOMORPHIC\n");
  const auto mixed = run({"reduce", e, data("path4.txt"), oa, ob});
  EXPECT_EQ(mixed.code, cli::kExitNo);
  EXPECT_EQ(mixed.out, "TRIVIAL NOT-ISOMORPHIC\n");
}

TEST(Cli, ProveThenVerifyWithFixedChallenges) {
  for (int c = 0; c < 2; ++c) {
    std::string challenges;
    for (int k = 0; k < 3; ++k) challenges += "CHALLENGE " + std::to_string(c) + "\n";
    const auto prover = run({"prove", data("square.txt"), data("sheared_square.txt"), data("shear_witness.txt"),
                             "--rounds", "3", "--seed", "5"},
                            challenges);
    ASSERT_EQ(prover.code, 0) << prover.err;
    const auto verifier = run({"verify", data("square.txt"), data("sheared_square.txt"), "--rounds", "3",
                               "--challenge", std::to_string(c)},
                              prover.out);
    EXPECT_EQ(verifier.code, 0) << verifier.err;
    EXPECT_EQ(verifier.out, challenges);
    EXPECT_EQ(verifier.err, "round 1: accept\nround 2: accept\nround 3: accept\nACCEPT\n");
  }
}

TEST(Cli, VerifierSeesClosedSession) {
  const auto prover = run({"prove", data("square.txt"), data("sheared_square.txt"), data("shear_witness.txt"),
                           "--rounds", "2"},
                          "CHALLENGE 0\n");
  EXPECT_EQ(prover.code, cli::kExitNo);
  EXPECT_NE(prover.err.find("closed the session after 1"), std::string::npos);
}

TEST(Cli, ReplayAndExtract) {
  TempDir dir;
  const auto t0 = dir.file("t0.txt"), t1 = dir.file("t1.txt");
  for (int c = 0; c < 2; ++c) {
    const auto r = run({"prove", data("square.txt"), data("sheared_square.txt"), data("shear_witness.txt"),
                        "--rounds", "1", "--seed", "11", "--transcript", c == 0 ? t0 : t1},
                       "CHALLENGE " + std::to_string(c) + "\n");
    ASSERT_EQ(r.code, 0) << r.err;
  }
  const auto ok = run({"verify", data("square.txt"), data("sheared_square.txt"), "--replay", t0});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.err, "round 1: accept\nACCEPT\n");

  const auto w = dir.file("w.txt");
  const auto ex = run({"extract", data("square.txt"), data("sheared_square.txt"), t1, t0, "--out", w});
  EXPECT_EQ(ex.code, 0) << ex.err;
  const Statement st(read_polytope_file(data("square.txt")), read_polytope_file(data("sheared_square.txt")));
  EXPECT_TRUE(is_valid_witness(st, read_witness_file(w)));

  // Flip the challenge bit of a stored transcript.
  std::string text = slurp(t0);
  text.replace(text.find("CHALLENGE 0"), 11, "CHALLENGE 1");
  const auto flipped = dir.file("flipped.txt", text);
  const auto bad = run({"verify", data("square.txt"), data("sheared_square.txt"), "--replay", flipped});
  EXPECT_EQ(bad.code, cli::kExitNo);
  EXPECT_NE(bad.err.find("round 1: reject (vertex-set-mismatch"), std::string::npos) << bad.err;
  EXPECT_EQ(bad.err.substr(bad.err.size() - 7), "REJECT\n");

  const auto same = run({"extract", data("square.txt"), data("sheared_square.txt"), t0, t0});
  EXPECT_EQ(same.code, cli::kExitInput);
  // Challenges 0 and 1 with a shared commitment, but the first does not verify.
  std::string forged = slurp(t1);
  forged.replace(forged.find("CHALLENGE 1"), 11, "CHALLENGE 0");
  const auto rejected = run({"extract", data("square.txt"), data("sheared_square.txt"), dir.file("forged.txt", forged), t1});
  EXPECT_EQ(rejected.code, cli::kExitNo);
  EXPECT_NE(rejected.err.find("extraction failed"), std::string::npos);
}

TEST(Cli, InputErrors) {
  TempDir dir;
  const auto truncated = dir.file("trunc.txt", "2 4\n0 0\n0 1\n");
  const auto r = run({"decide", truncated, data("square.txt")});
  EXPECT_EQ(r.code, cli::kExitInput);
  EXPECT_NE(r.err.find("line 4, column 1"), std::string::npos) << r.err;
  EXPECT_EQ(run({"decide", dir.file("missing.txt"), data("square.txt")}).code, cli::kExitInput);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitInput);
  EXPECT_EQ(run({"decide", data("square.txt")}).code, cli::kExitInput);
  EXPECT_EQ(run({"sample", data("square.txt"), "--s", "1/2"}).code, cli::kExitInput);
  EXPECT_EQ(run({"sample", data("square.txt"), "--s", "abc"}).code, cli::kExitInput);
  EXPECT_EQ(run({"verify", data("square.txt"), data("simplex2.txt"), "--replay", data("square.txt")}).code,
            cli::kExitInput);
  EXPECT_EQ(run({"prove", data("square.txt"), data("simplex2.txt"), data("shear_witness.txt")}).code,
            cli::kExitInput);
}
