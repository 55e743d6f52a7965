#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "support/oracles.hpp"

using namespace tourn;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "tourn");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / ("tourn-cli-" + std::string(info->name()) + "-" + std::to_string(::getpid()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    io::write_file(path(name), text);
    return path(name);
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, GenIsReproducible) {
  ASSERT_EQ(run({"gen", "random", "--n", "10", "--seed", "7", "--out", path("a.txt")}).code, 0);
  ASSERT_EQ(run({"gen", "random", "--n", "10", "--seed", "7", "--out", path("b.txt")}).code, 0);
  EXPECT_EQ(io::read_file(path("a.txt")), io::read_file(path("b.txt")));
  EXPECT_EQ(run({"gen", "random", "--n", "10", "--out", path("c.txt")}).code, 2);
  EXPECT_EQ(run({"gen", "bogus", "--n", "10", "--seed", "1", "--out", path("c.txt")}).code, 2);
  EXPECT_EQ(run({"gen", "planted", "--n", "10", "--seed", "1", "--c", "1/4", "--out", path("c.txt")}).code, 2);
}

TEST_F(Cli, C5FreeGeneratorThenCheck) {
  ASSERT_EQ(run({"gen", "c5free", "--n", "12", "--seed", "1", "--out", path("t.txt")}).code, 0);
  const auto r = run({"check", "c5", path("t.txt")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "c5-free\n");
  EXPECT_FALSE(oracle::brute_c5(io::load_tournament(path("t.txt"))));
}

TEST_F(Cli, CheckC5OnC5AndTransitive) {
  const auto c5 = write("c5.txt", io::to_text(testsupport::c5()));
  const auto r = run({"check", "c5", c5, "--out", path("w.json")});
  EXPECT_EQ(r.code, 10);
  EXPECT_EQ(r.err, "");
  const auto doc = io::parse_json(io::read_file(path("w.json")));
  EXPECT_EQ(doc.at("type"), "c5_witness");
  EXPECT_EQ(io::witness_from_json(doc).v, (std::array<Vertex, 5>{0, 1, 2, 3, 4}));
  EXPECT_EQ(run({"pair", "verify", c5, path("w.json")}).code, 0);
  EXPECT_EQ(run({"check", "c5", write("t.txt", io::to_text(Tournament::transitive(9)))}).code, 0);
}

TEST_F(Cli, OracleAndDefaultAgree) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto t = random_tournament(5 + static_cast<int>(seed % 8), seed);
    const auto f = write("r.txt", io::to_text(t));
    const auto fast = run({"check", "c5", f});
    const auto slow = run({"check", "c5", f, "--oracle"});
    EXPECT_EQ(fast.code, slow.code);
    EXPECT_EQ(fast.out, slow.out);
  }
  EXPECT_EQ(run({"check", "c5", write("big.txt", io::to_text(Tournament::transitive(15))), "--oracle"}).code, 2);
}

TEST_F(Cli, ParseErrorsExitTwo) {
  EXPECT_EQ(run({"check", "c5", write("bad.txt", "tournament 1\n2\n00\n00\n")}).code, 2);
  EXPECT_EQ(run({"check", "c5", path("missing.txt")}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--version"}).code, 0);
}

TEST_F(Cli, OutsimplicialGeneratorThenSplit) {
  ASSERT_EQ(run({"gen", "outsimp", "--n", "40", "--seed", "3", "--out", path("d.txt")}).code, 0);
  const auto r = run({"split", path("d.txt"), "--out", path("s.json")});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.err, "");
  const auto cert = io::split_from_json(io::parse_json(io::read_file(path("s.json"))));
  EXPECT_TRUE(testsupport::split_valid(io::load_digraph(path("d.txt")), cert));
  EXPECT_EQ(run({"verify", path("d.txt"), path("s.json")}).code, 0);
}

TEST_F(Cli, SplitRejectsNonOutsimplicial) {
  const auto f = write("fork.txt", "digraph 1\n3\n011\n000\n000\n");
  const auto r = run({"split", f});
  EXPECT_EQ(r.code, 14);
  EXPECT_NE(r.err.find("0 -> 1, 0 -> 2"), std::string::npos);
}

TEST_F(Cli, StructureVerifyAndFind) {
  ASSERT_EQ(run({"gen", "planted", "--n", "150", "--seed", "2", "--noise", "1/2", "--out", path("p.txt"),
                 "--structure-out", path("s.json")})
                .code,
            0);
  EXPECT_EQ(run({"structure", "verify", path("p.txt"), path("s.json")}).out, "pass\n");
  const auto a = run({"structure", "verify", path("p.txt"), path("s.json"), "--lambda", "1/5"});
  const auto b = run({"structure", "verify", path("p.txt"), path("s.json"), "--lambda", "2/10"});
  EXPECT_EQ(a.code, b.code);
  EXPECT_EQ(a.out, b.out);
  const auto tight = run({"structure", "verify", path("p.txt"), path("s.json"), "--lambda", "1/100"});
  EXPECT_EQ(tight.code, 12);
  EXPECT_EQ(run({"structure", "verify", path("p.txt"), path("s.json"), "--mode", "plain"}).code, 0);

  const auto t100 = write("t100.txt", io::to_text(Tournament::transitive(100)));
  const auto found = run({"structure", "find", t100, "--c", "1/6", "--lambda", "1/5", "--w", "00000", "--out",
                          path("f.json")});
  EXPECT_EQ(found.code, 0);
  EXPECT_EQ(run({"structure", "verify", t100, path("f.json")}).code, 0);

  const auto rnd = write("rnd.txt", io::to_text(random_tournament(60, 1)));
  const auto none = run({"structure", "find", rnd, "--c", "1/5", "--lambda", "1/5", "--w", "00000", "--attempts",
                         "2"});
  EXPECT_EQ(none.code, 11);
  EXPECT_EQ(run({"structure", "find", rnd, "--c", "1/5", "--lambda", "1/5", "--w", "0x0"}).code, 2);
}

TEST_F(Cli, PairFindVerifyAndTamper) {
  ASSERT_EQ(run({"gen", "planted", "--n", "600", "--seed", "4", "--out", path("p.txt"), "--structure-out",
                 path("s.json")})
                .code,
            0);
  const auto r = run({"pair", "find", path("p.txt"), path("s.json"), "--out", path("pair.json")});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.err, "");
  auto doc = io::parse_json(io::read_file(path("pair.json")));
  ASSERT_EQ(doc.at("type"), "complete_pair");
  const auto p = io::pair_from_json(doc);
  EXPECT_GE(std::min(p.a.size(), p.b.size()), 20U);
  EXPECT_EQ(run({"pair", "verify", path("p.txt"), path("pair.json")}).code, 0);

  // Move one vertex from B into A: no vertex beats itself, so this must fail.
  doc["A"].push_back(doc["B"][0]);
  io::write_file(path("tampered.json"), io::dump(doc));
  EXPECT_EQ(run({"pair", "verify", path("p.txt"), path("tampered.json")}).code, 13);

  ASSERT_EQ(run({"gen", "random", "--n", "600", "--seed", "4", "--out", path("other.txt")}).code, 0);
  EXPECT_EQ(run({"pair", "verify", path("other.txt"), path("pair.json")}).code, 13);
}

TEST_F(Cli, PairFindRejectsUnverifiedStructure) {
  ASSERT_EQ(run({"gen", "planted", "--n", "100", "--seed", "4", "--out", path("p.txt"), "--structure-out",
                 path("s.json")})
                .code,
            0);
  auto doc = io::parse_json(io::read_file(path("s.json")));
  std::swap(doc["sets"][0], doc["sets"][4]);
  io::write_file(path("bad.json"), io::dump(doc));
  EXPECT_EQ(run({"pair", "find", path("p.txt"), path("bad.json")}).code, 12);
}

TEST_F(Cli, WitnessOutputReverifies) {
  bool seen = false;
  for (int seed = 0; seed < 20 && !seen; ++seed) {
    ASSERT_EQ(run({"gen", "planted", "--n", "250", "--seed", std::to_string(seed), "--noise", "1", "--out",
                   path("p.txt"), "--structure-out", path("s.json")})
                  .code,
              0);
    const auto r = run({"pair", "find", path("p.txt"), path("s.json"), "--out", path("out.json")});
    ASSERT_TRUE(r.code == 0 || r.code == 10);
    EXPECT_EQ(run({"pair", "verify", path("p.txt"), path("out.json")}).code, 0);
    seen = r.code == 10;
  }
  EXPECT_TRUE(seen);
}

TEST_F(Cli, ExperimentCsv) {
  const std::vector<std::string> args{"experiment", "eh-stats", "--kinds", "random,planted,c5free", "--n", "100,50",
                                      "--seeds", "1-3"};
  auto with_out = [&](const std::string& f) {
    auto a = args;
    a.push_back("--out");
    a.push_back(path(f));
    return a;
  };
  ASSERT_EQ(run(with_out("a.csv")).code, 0);
  ASSERT_EQ(run(with_out("b.csv")).code, 0);
  const auto csv = io::read_file(path("a.csv"));
  EXPECT_EQ(csv, io::read_file(path("b.csv")));

  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "kind,n,seed,c,lambda,outcome,sizeA,sizeB,tr_lower_bound,runtime_ms");
  std::vector<std::tuple<std::string, int, int>> keys;
  int planted = 0;
  while (std::getline(in, line)) {
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (line.back() == ',') f.push_back("");
    ASSERT_EQ(f.size(), 10U) << line;
    keys.emplace_back(f[0], std::stoi(f[1]), std::stoi(f[2]));
    if (f[0] != "planted") continue;
    ++planted;
    EXPECT_EQ(f[5], "complete_pair");
    const auto inst = gen_planted_blocks(std::stoi(f[1]), 5, Ratio(1, 5), Ratio(0), std::stoull(f[2]));
    const auto r = find_complete_pair(inst.tournament, inst.structure);
    const auto& p = std::get<CompletePair>(r);
    EXPECT_TRUE(oracle::verify_complete_pair(inst.tournament, p.a, p.b));
    EXPECT_EQ(std::to_string(p.a.size()), f[6]);
    EXPECT_EQ(std::to_string(p.b.size()), f[7]);
  }
  EXPECT_EQ(keys.size(), 18U);
  EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
  EXPECT_EQ(planted, 6);
  EXPECT_EQ(run({"experiment", "eh-stats", "--kinds", "weird", "--n", "50", "--seeds", "1", "--out", path("x.csv")})
                .code,
            2);
}
