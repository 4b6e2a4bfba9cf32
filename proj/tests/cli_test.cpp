#include "ztile/commands.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

namespace {

using ztile::IntegerSet;
using ztile::Json;

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI through the shell; stderr is merged only when asked.
Run cli(const std::string& args, bool merge_stderr = false) {
  const char* exe = std::getenv("ZTILE_CLI");
  if (!exe) return {};
  const std::string cmd = std::string("'") + exe + "' " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("ztile_cli_test_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir / name;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    if (!std::getenv("ZTILE_CLI")) GTEST_SKIP() << "ZTILE_CLI not set";
  }
};

TEST(Commands, VerifyExamples) {
  const auto a = ztile::cmd_verify(IntegerSet{0, 2}, IntegerSet{0, 1}, 4);
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.verdict(), "tiling");
  EXPECT_EQ(a.report["results"]["sands"]["D_A"], Json::array({2}));
  EXPECT_EQ(a.report["results"]["sands"]["D_B"], Json::array({1}));
  EXPECT_TRUE(a.report["results"]["routes_agree"].get<bool>());
  const auto b = ztile::cmd_verify(IntegerSet{0, 1}, IntegerSet{0, 1}, 4);
  EXPECT_EQ(b.exit_code, 1);
  EXPECT_EQ(b.verdict(), "not-tiling");
  const auto c = ztile::cmd_verify(IntegerSet{0, 4}, IntegerSet{0}, 4);
  EXPECT_EQ(c.exit_code, 1);
  EXPECT_FALSE(c.report["results"]["sands"]["applicable"].get<bool>());
}

TEST(Commands, ConditionsExamples) {
  const auto a = ztile::cmd_conditions(IntegerSet{0, 1, 2, 4, 5, 6});
  EXPECT_EQ(a.report["results"]["S_A"], Json::array({3, 8}));
  EXPECT_TRUE(a.report["results"]["T1"]["holds"].get<bool>());
  EXPECT_FALSE(a.report["results"]["T2"]["holds"].get<bool>());
  EXPECT_EQ(a.report["results"]["T2"]["witnesses"], Json::array({24}));
  EXPECT_EQ(a.exit_code, 1);
  const auto b = ztile::cmd_conditions(IntegerSet{0});
  EXPECT_EQ(b.report["results"]["S_A"], Json::array());
  EXPECT_EQ(b.report["results"]["T1"]["rhs"], 1);
  EXPECT_EQ(b.exit_code, 0);
  EXPECT_EQ(ztile::cmd_conditions(IntegerSet{0, 2}).verdict(), "T1 holds, T2 holds");
}

TEST(Commands, IdentityExamples) {
  const auto a = ztile::cmd_identity(IntegerSet{0, 1}, IntegerSet{0, 1}, 2);
  EXPECT_EQ(a.report["results"]["lhs"], "8");
  EXPECT_EQ(a.report["results"]["rhs"], "8");
  EXPECT_EQ(a.exit_code, 0);
  const auto b = ztile::cmd_identity(IntegerSet{0}, IntegerSet{0}, 1);
  EXPECT_EQ(b.report["results"]["lhs"], "1");
  const auto c = ztile::cmd_identity(IntegerSet{0, 2}, IntegerSet{0, 1}, 4);
  EXPECT_EQ(c.report["results"]["lhs"], c.report["results"]["rhs"]);
  EXPECT_EQ(c.report["results"]["A_m"].dump(), R"({"1":0,"2":2,"4":2})");
  EXPECT_EQ(c.report["results"]["power_A_d"].dump(), R"({"1":4,"2":4,"4":0})");
}

TEST(Commands, ConstantSweepAndSingle) {
  const auto a = ztile::cmd_constant(IntegerSet{0, 2}, IntegerSet{0, 1}, 4, 4, std::nullopt);
  EXPECT_EQ(a.verdict(), "constant 2");
  EXPECT_TRUE(a.report["results"]["equals_cardinality_of_A"].get<bool>());
  EXPECT_EQ(a.report["results"]["values"].size(), 17u - 2u);
  EXPECT_EQ(ztile::cmd_constant(IntegerSet{0, 2}, IntegerSet{0, 1}, 4, 4, 5).verdict(), "2");
  EXPECT_EQ(ztile::cmd_constant(IntegerSet{0, 2}, IntegerSet{0, 1}, 4, 4, 1).exit_code, 2);
  EXPECT_EQ(ztile::cmd_constant(IntegerSet{0, 2}, IntegerSet{0, 1}, 4, 3, std::nullopt).exit_code, 2);
  // a non-tiling generally gives a c-dependent value
  const auto n = ztile::cmd_constant(IntegerSet{0, 1}, IntegerSet{0, 1}, 4, 4, std::nullopt);
  EXPECT_FALSE(n.report["results"]["tiling"].get<bool>());
  EXPECT_EQ(n.exit_code, 1);
}

TEST(Commands, SearchExamples) {
  const auto a = ztile::cmd_search(IntegerSet{0, 2}, 8, 1);
  EXPECT_EQ(a.report["results"]["complements"].dump(), R"([{"modulus":4,"complement":"{0,1}"}])");
  EXPECT_EQ(a.exit_code, 0);
  const auto b = ztile::cmd_search(IntegerSet{0, 1, 3}, 30, 1);
  EXPECT_EQ(b.verdict(), "none-found");
  EXPECT_EQ(b.exit_code, 1);
  const auto c = ztile::cmd_search(IntegerSet{0}, 1, 1);
  EXPECT_EQ(c.report["results"]["complements"].dump(), R"([{"modulus":1,"complement":"{0}"}])");
  const auto d = ztile::cmd_search(IntegerSet{0, 2}, 16, 100);
  const auto e = ztile::cmd_search(IntegerSet{0, 2}, 16, 100, 3);
  EXPECT_EQ(d.report.dump(), e.report.dump());
  EXPECT_GT(d.report["results"]["complements"].size(), 2u);
}

TEST(Commands, Theorem1Examples) {
  std::vector<std::int64_t> a, b;
  for (std::int64_t i = 0; i < 30; ++i) {
    a.push_back(i);
    b.push_back(30 * i);
  }
  const auto ok = ztile::cmd_theorem1(IntegerSet(a), IntegerSet(b), 2, 3, 5);
  EXPECT_EQ(ok.verdict(), "consistent");
  EXPECT_EQ(ok.exit_code, 0);
  EXPECT_EQ(ztile::cmd_theorem1(IntegerSet{0, 1}, IntegerSet{0, 2}, 2, 3, 5).exit_code, 2);
  a.back() = 31;
  const auto bad = ztile::cmd_theorem1(IntegerSet(b), IntegerSet(a), 2, 3, 5);
  EXPECT_EQ(bad.exit_code, 2);
  EXPECT_NE(bad.report["error"].get<std::string>().find("not a tiling"), std::string::npos);
}

TEST(Commands, DecomposeAndClassify) {
  const auto d = ztile::cmd_decompose(IntegerSet{0, 1, 2}, IntegerSet{0, 3}, 6, 3);
  EXPECT_EQ(d.verdict(), "valid");
  EXPECT_EQ(d.report["results"]["parts"], Json::array({"{0}", "{0}", "{0}"}));
  EXPECT_EQ(ztile::cmd_decompose(IntegerSet{0, 3}, IntegerSet{0, 1}, 4, 2).exit_code, 2);
  const auto c = ztile::cmd_classify(IntegerSet{5, 7, 9}, 2, 3, 5);
  EXPECT_EQ(c.report["results"]["translated_b"], "{0,2,4}");
  EXPECT_EQ(c.verdict(), "classified");
  EXPECT_EQ(ztile::cmd_classify(IntegerSet{0, 7}, 2, 3, 5).verdict(), "hypothesis-fails");
}

TEST(Commands, InputsReparse) {
  const auto r = ztile::cmd_verify(IntegerSet{-3, 7}, IntegerSet{0, 1}, 4);
  EXPECT_EQ(ztile::parse_set(r.report["inputs"]["a"].get<std::string>()), (IntegerSet{-3, 7}));
  EXPECT_EQ(ztile::parse_set(r.report["inputs"]["b"].get<std::string>()), (IntegerSet{0, 1}));
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(cli("verify --a '{0,2}' --b '{0,1}' --modulus 4").status, 0);
  EXPECT_EQ(cli("verify --a '{0,1}' --b '{0,1}' --modulus 4").status, 1);
  const auto dup = cli("verify --a '{0,0}' --b '{0,1}' --modulus 4", true);
  EXPECT_EQ(dup.status, 2);
  EXPECT_NE(dup.out.find("duplicate element"), std::string::npos);
  EXPECT_EQ(std::count(dup.out.begin(), dup.out.end(), '\n'), 1);
  EXPECT_EQ(cli("verify --a '{0,2}' --modulus 4").status, 2);
  EXPECT_EQ(cli("verify --a '{0,2}' --b '{0,1}'").status, 2);
  EXPECT_EQ(cli("nonsense").status, 2);
  EXPECT_EQ(cli("").status, 2);
  EXPECT_EQ(cli("--help").status, 0);
  EXPECT_EQ(cli("theorem1 --a '{0,1}' --b '{0,2}' --p 2 --q 3 --r 5").status, 2);
  EXPECT_EQ(cli("search --a '{0,1,3}' --max-modulus 30").status, 1);
}

TEST_F(Cli, QuietPrintsVerdictOnly) {
  EXPECT_EQ(cli("--quiet verify --a '{0,2}' --b '{0,1}' --modulus 4").out, "tiling\n");
  EXPECT_EQ(cli("--quiet identity --a '{0,1}' --b '{0,1}' --n 2").out, "equal\n");
  EXPECT_EQ(cli("--quiet search --a '{0}' --max-modulus 1").out, "found\n");
}

TEST_F(Cli, ReportIsDeterministicAndMatchesLibrary) {
  const std::string args = "identity --a '{0,2,5}' --b '{0,1,7}' --n 12";
  const auto x = cli(args), y = cli(args);
  EXPECT_EQ(x.status, 0);
  EXPECT_EQ(x.out, y.out);
  EXPECT_EQ(x.out, ztile::cmd_identity(IntegerSet{0, 2, 5}, IntegerSet{0, 1, 7}, 12).report.dump(2) + "\n");
  const auto s1 = cli("search --a '{0,2}' --max-modulus 24 --limit 50 --jobs 1");
  const auto s3 = cli("search --a '{0,2}' --max-modulus 24 --limit 50 --jobs 3");
  EXPECT_EQ(s1.out, s3.out);
}

TEST_F(Cli, SetFiles) {
  const auto path = scratch("a.txt");
  std::ofstream(path) << "{ 0, 2 }\n";
  EXPECT_EQ(cli("--quiet verify --a-file '" + path.string() + "' --b '{0,1}' --modulus 4").out, "tiling\n");
  EXPECT_EQ(cli("verify --a-file /nonexistent/zzz --b '{0,1}' --modulus 4").status, 2);
  EXPECT_EQ(cli("verify --a '{0}' --a-file '" + path.string() + "' --b '{0,1}' --modulus 4").status, 2);
}

TEST_F(Cli, CorpusRoundTrip) {
  const auto one = scratch("c1.jsonl");
  ASSERT_EQ(cli("corpus --max-modulus 1 --output '" + one.string() + "'").status, 0);
  std::ifstream in1(one);
  const auto recs1 = ztile::read_corpus(in1);
  ASSERT_EQ(recs1.size(), 1u);
  EXPECT_EQ(recs1[0].modulus, 1);

  const auto twelve = scratch("c12.jsonl");
  const auto twelve_par = scratch("c12p.jsonl");
  ASSERT_EQ(cli("corpus --max-modulus 12 -o '" + twelve.string() + "'").status, 0);
  ASSERT_EQ(cli("corpus --max-modulus 12 --jobs 3 -o '" + twelve_par.string() + "'").status, 0);
  std::ifstream in(twelve), inp(twelve_par);
  const std::string text((std::istreambuf_iterator<char>(in)), {});
  const std::string text_par((std::istreambuf_iterator<char>(inp)), {});
  EXPECT_EQ(text, text_par);
  std::istringstream lines(text);
  const auto recs = ztile::read_corpus(lines);
  ASSERT_FALSE(recs.empty());
  bool saw_a = false, saw_b = false;
  for (std::size_t i = 0; i < recs.size(); ++i) {
    const auto& r = recs[i];
    EXPECT_TRUE(ztile::is_tiling(r.a, r.b, r.modulus));
    EXPECT_EQ(ztile::canonical_form(r.a, r.modulus), r.a);
    EXPECT_EQ(ztile::canonical_form(r.b, r.modulus), r.b);
    if (i) {
      const auto& p = recs[i - 1];
      EXPECT_TRUE(std::tie(p.modulus, p.a, p.b) < std::tie(r.modulus, r.a, r.b));
    }
    saw_a |= r.modulus == 4 && r.a == IntegerSet{0, 1} && r.b == IntegerSet{0, 2};
    saw_b |= r.modulus == 4 && r.a == IntegerSet{0, 2} && r.b == IntegerSet{0, 1};
  }
  EXPECT_TRUE(saw_a && saw_b);
  EXPECT_EQ(cli("corpus --max-modulus 4 -o /nonexistent/dir/out.jsonl").status, 2);
}

}  // namespace
