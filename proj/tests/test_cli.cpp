#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "permroots/cli.hpp"

using namespace permroots;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(PERMROOTS_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t line_count(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("count") {
    auto r = run_cli({"count", "-m", "2", "--type", "1^4"});
    CHECK(r.code == 0);
    CHECK(r.out == "10\n");
    r = run_cli({"count", "-m", "2", "--type", "1^4", "-v"});
    CHECK(r.out == golden("cli_count_m2_1e4_v.txt"));
    r = run_cli({"count", "-m", "2", "--perm", "2 3 4 1"});
    CHECK(r.code == 0);
    CHECK(r.out == "0\n");
    r = run_cli({"count", "-m", "2", "--type", "1^4", "--format", "json", "-v"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["count"] == "10");
    CHECK(j["lengths"][0]["solutions"] == 3);
  }

  TEST_CASE("exists") {
    auto r = run_cli({"exists", "-m", "2", "--perm", "2 3 4 1"});
    CHECK(r.code == 0);
    CHECK(r.out == golden("cli_exists_m2_4cycle.txt"));
    r = run_cli({"exists", "-m", "2", "--type", "2^2", "--format", "json"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["has_root"] == true);
    CHECK(j["witness"][0]["bracket"] == 2);
  }

  TEST_CASE("output is a pure function of the request") {
    for (int i = 0; i < 2; ++i) {
      CHECK(run_cli({"count", "-m", "6", "--type", "1^3 2^2 3", "-v"}).out ==
            run_cli({"count", "-m", "6", "--type", "1^3 2^2 3", "-v"}).out);
    }
  }

  TEST_CASE("roots stream matches count") {
    for (const auto& [m, type] : std::vector<std::pair<std::string, std::string>>{
             {"2", "1^4"}, {"2", "2^2"}, {"3", "1^3 3^2"}, {"4", "1^2 2^2"}, {"6", "1^6"}, {"2", "4"}}) {
      const auto roots = run_cli({"roots", "-m", m, "--type", type});
      const auto count = run_cli({"count", "-m", m, "--type", type});
      CHECK(roots.code == 0);
      CHECK(std::to_string(line_count(roots.out)) + "\n" == count.out);
    }
  }

  TEST_CASE("roots limit is loud") {
    auto r = run_cli({"roots", "-m", "2", "--type", "1^6", "--limit", "5"});
    CHECK(r.code == 4);
    CHECK(line_count(r.out) == 5);
    CHECK(r.err.find("76") != std::string::npos);
    r = run_cli({"roots", "-m", "2", "--type", "1^6", "--limit", "5", "--unlimited"});
    CHECK(r.code == 0);
    CHECK(line_count(r.out) == 76);
  }

  TEST_CASE("table") {
    auto r = run_cli({"table", "-m", "2", "--n", "0..5"});
    CHECK(r.code == 0);
    CHECK(r.out == golden("cli_table_m2_0_5.csv"));
    r = run_cli({"table", "-m", "2", "--n", "3..4", "--format", "json"});
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.size() == 2);
    CHECK(j[1]["r_total"] == "12");
    CHECK(j[1]["p_den"] == "2");
    r = run_cli({"table", "-m", "2", "--n", "0..41"});
    CHECK(r.code == 4);
    r = run_cli({"table", "-m", "2", "--n", "0..41", "--max-order", "41"});
    CHECK(r.code == 0);
  }

  TEST_CASE("prob and verify") {
    auto r = run_cli({"prob", "-q", "2", "-r", "1", "-J", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("j=1 n=2..3  1/2 1/2  equal") != std::string::npos);
    CHECK(r.out.find("all checks passed") != std::string::npos);
    r = run_cli({"verify", "-q", "3", "-r", "2", "-J", "4", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["passed"] == true);
    CHECK(j["structure"]["partial_sums_match"] == true);
    CHECK(run_cli({"prob", "-q", "4"}).code == 2);
  }

  TEST_CASE("selftest") {
    auto r = run_cli({"selftest", "--max-n", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("selftest passed") != std::string::npos);
    CHECK(run_cli({"selftest", "--max-n", "9"}).code == 4);
  }

  TEST_CASE("exit codes") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"count", "--type", "1^4"}).code == 2);
    CHECK(run_cli({"count", "-m", "2"}).code == 2);
    CHECK(run_cli({"count", "-m", "2", "--type", "1^4", "--perm", "1"}).code == 2);
    CHECK(run_cli({"count", "-m", "0", "--type", "1^4"}).code == 2);
    CHECK(run_cli({"count", "-m", "2", "--type", "2 2"}).code == 3);
    CHECK(run_cli({"count", "-m", "2", "--perm", "1 1"}).code == 3);
    CHECK(run_cli({"table", "-m", "2", "--n", "a..3"}).code == 3);
    CHECK(run_cli({"exists", "-m", "2", "--perm", "2 1"}).code == 0);
    CHECK(run_cli({"--help"}).code == 0);
  }
}
