#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "dparity/cli.hpp"
#include "dparity/errors.hpp"

using namespace dparity;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "dparity");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("dparity_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST_CASE("curve file parsing") {
  std::istringstream one("0 -1 1 -10 -20\n");
  CHECK(cli::parse_curves(one).size() == 1);
  std::istringstream comment("# comment\n0 0 0 -1 0\n\n");
  const auto c = cli::parse_curves(comment);
  REQUIRE(c.size() == 1);
  CHECK(c[0] == WeierstrassCurve(0, 0, 0, -1, 0));
  std::istringstream short_line("0 0 0\n");
  try {
    cli::parse_curves(short_line);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
  }
  std::istringstream later("0 0 0 -1 0\n# x\n1 2 x 4 5\n");
  try {
    cli::parse_curves(later);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  std::istringstream singular("0 0 0 0 0\n");
  CHECK_THROWS_AS(cli::parse_curves(singular), ParseError);
}

TEST_CASE("completion file parsing") {
  std::istringstream in("# prime Gv Iv\n11 D2p Cp\n5 D2p D2p eta=chi\n7 1 1\n");
  const auto m = cli::parse_completions(in);
  REQUIRE(m.size() == 3);
  CHECK(m.at(11).g_v == SubgroupTag::dihedral(1));
  CHECK(m.at(11).i_v == SubgroupTag::cyclic(1));
  CHECK(m.at(5).eta_equals_chi == true);
  CHECK_FALSE(m.at(7).eta_equals_chi.has_value());
  std::istringstream bad("11 D3 Cp\n");
  CHECK_THROWS_AS(cli::parse_completions(bad), ParseError);
  std::istringstream twice("11 1 1\n11 1 1\n");
  CHECK_THROWS_AS(cli::parse_completions(twice), ParseError);
  std::istringstream composite("12 1 1\n");
  CHECK_THROWS_AS(cli::parse_completions(composite), ParseError);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == cli::kUsageError);
  CHECK(run({"frobnicate"}).code == cli::kUsageError);
  CHECK(run({"--help"}).code == cli::kAllPass);

  const auto small = run({"verify-local", "--p", "3"});
  CHECK(small.code == cli::kUsageError);
  CHECK(small.err.find("p must be ≥ 5") != std::string::npos);
  CHECK(run({"verify-local", "--p", "2", "--sweep"}).code == cli::kUsageError);
  CHECK(run({"verify-local", "--p", "9", "--sweep"}).code == cli::kUsageError);
  CHECK(run({"verify-local", "--p", "5"}).code == cli::kUsageError);
  // Inadmissible single setting: l != p with I_v = D2p.
  CHECK(run({"verify-local", "--p", "5", "--ell", "7", "--gv", "D2p", "--iv", "D2p", "--base", "good"}).code ==
        cli::kUsageError);

  const auto file = temp_file("bad.txt", "0 0 0\n");
  const auto parse = run({"reduce", file, "--ell", "2"});
  CHECK(parse.code == cli::kUsageError);
  CHECK(parse.err.find("line 1") != std::string::npos);
}

TEST_CASE("verify-local sweep and table") {
  const auto sweep = run({"verify-local", "--p", "5", "--sweep"});
  CHECK(sweep.code == cli::kAllPass);
  CHECK(sweep.out.find("equal=NO") == std::string::npos);
  CHECK(sweep.out.find(" 0 failed") != std::string::npos);

  const auto table = run({"verify-local", "--p", "7", "--emit-table"});
  CHECK(table.code == cli::kAllPass);
  CHECK(table.out.find("MISMATCH") == std::string::npos);

  const auto one = run({"verify-local", "--p", "5", "--ell", "11", "--gv", "D2p", "--iv", "Cp", "--base", "split(2)"});
  CHECK(one.code == cli::kAllPass);
  CHECK(one.out.find("w=-1 c=-1 equal=yes") != std::string::npos);
}

TEST_CASE("json report") {
  const auto path = (std::filesystem::temp_directory_path() / "dparity_test_report.json").string();
  const auto r = run({"verify-local", "--p", "5", "--ell", "5", "--gv", "D2p", "--iv", "D2p", "--base", "addgood(2)",
                      "--json", path});
  CHECK(r.code == cli::kAllPass);
  std::ifstream in(path);
  const std::string doc((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  for (const char* key : {"\"setting\"", "\"w_ratio\"", "\"c_parity\"", "\"equal\"", "\"case_trace\""})
    CHECK(doc.find(key) != std::string::npos);
}

TEST_CASE("reports are deterministic") {
  const auto a = run({"verify-local", "--p", "7", "--sweep", "--n", "3"});
  const auto b = run({"verify-local", "--p", "7", "--sweep", "--n", "3"});
  CHECK(a.out == b.out);
}

TEST_CASE("curve commands") {
  const auto curves = temp_file("curves.txt", "# 11a1\n0 -1 1 -10 -20\n");
  const auto reduce = run({"reduce", curves, "--ell", "11"});
  CHECK(reduce.code == cli::kAllPass);
  CHECK(reduce.out.find("kodaira=I5 delta=5 c=5 f=1 split=split") != std::string::npos);

  const auto completion = temp_file("completion.txt", "11 D2p Cp\n");
  const auto global = run({"verify-global", curves, "--p", "5", "--completion", completion});
  CHECK(global.code == cli::kAllPass);
  CHECK(global.out.find("W=-1 C=-1 equal=yes") != std::string::npos);

  const auto empty = temp_file("empty_completion.txt", "# nothing\n");
  CHECK(run({"verify-global", curves, "--p", "5", "--completion", empty}).code == cli::kVerdictFailure);

  const auto additive = temp_file("additive.txt", "0 0 0 -1 0\n0 0 0 -25 0\n");
  const auto surgery = run({"surgery", additive, "--p0", "2", "--v", "3"});
  CHECK(surgery.code == cli::kAllPass);
  CHECK(surgery.out.find("FAIL") == std::string::npos);
  CHECK(run({"surgery", additive, "--p0", "2", "--v", "2"}).code == cli::kUsageError);
}

TEST_CASE("group commands") {
  CHECK(run({"chars", "--p", "5"}).code == cli::kAllPass);
  CHECK(run({"chars", "--p", "4"}).code == cli::kUsageError);
  const auto red = run({"chars", "--p", "5", "--n", "2", "--verify-reduction"});
  CHECK(red.code == cli::kAllPass);
  CHECK(red.out.find(": true") != std::string::npos);
  CHECK(run({"regulator", "--p", "5"}).code == cli::kAllPass);
  CHECK(run({"regulator", "--p", "5", "--rep", "bogus"}).code == cli::kUsageError);
  const auto member = run({"regulator", "--p", "5", "--membership"});
  CHECK(member.code == cli::kAllPass);
  CHECK(member.out.find("p=5: true") != std::string::npos);
}
