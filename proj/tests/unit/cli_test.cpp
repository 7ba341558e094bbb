#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mmu/algebra.hpp"
#include "mmu_cli/cli.hpp"
#include "mmu_cli/json_io.hpp"

using namespace mmu;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("mmu_cli_test_" + name);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("unit listings") {
  Result r = run_cli({"unit", "--n", "2", "--q", "2", "--r", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "n = 2:\n  (2, 0, 0): -1/2\n  (2, 1, 0): -1/2\n  (2, 1, 1): 1/2\n");
  r = run_cli({"unit", "--n", "1", "--q", "2", "--r", "0"});
  CHECK(r.out.find("  (1, 0): 1\n") != std::string::npos);

  r = run_cli({"unit", "--n", "3", "--q", "2", "--r", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = cli::json::parse(r.out);
  CHECK(j["classes"].size() == 6);
  CHECK(j["classes"][5]["coeff"] == "1/4");
  CHECK(cli::alg_from_json(j["element"]) == eta_r(Field::get(2), 3, 2));
}

TEST_CASE("output is reproducible") {
  const auto a = run_cli({"kovacs", "--n", "3", "--corank", "1", "--samples", "2,3,4,5,7"});
  const auto b = run_cli({"kovacs", "--n", "3", "--corank", "1", "--samples", "2,3,4,5,7"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out ==
        "n = 3:\n"
        "  (3, 0, 0, 0): 1/q^3\n"
        "  (3, 1, 0, 0): 1/q^3\n"
        "  (3, 1, 1, 1): -1/q^3\n"
        "  (3, 2, 1, 0): 1/q^3\n"
        "  (3, 2, 1, 1): -1/q^3\n"
        "  (3, 2, 2, 2): 1/q^2\n");
}

TEST_CASE("classes") {
  const auto r = run_cli({"classes", "--n", "4", "--format", "json"});
  CHECK(cli::json::parse(r.out)["count"] == 12);
}

TEST_CASE("verify passes, fails and falls back") {
  Result r = run_cli({"verify", "--n", "2", "--q", "2", "--r", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);

  r = run_cli({"verify", "--n", "4", "--q", "2", "--r", "3", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(cli::json::parse(r.out)["unit_law"]["mode"] == "kuhn-criterion");

  // A coefficient file with one entry changed.
  cli::json j = cli::to_json(eta_r(Field::get(2), 2, 1));
  j["terms"][0]["coeff"] = "1/2";
  const auto path = temp_file("corrupt.json");
  std::ofstream(path) << j.dump();
  r = run_cli({"verify", "--input", path.string()});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL unit-law") != std::string::npos);

  std::ofstream(path) << cli::to_json(eta_r(Field::get(2), 2, 1)).dump();
  CHECK(run_cli({"verify", "--input", path.string()}).code == 0);

  std::ofstream(path) << "{not json";
  CHECK(run_cli({"verify", "--input", path.string()}).code == 2);
  std::filesystem::remove(path);
}

TEST_CASE("module-level commands") {
  CHECK(run_cli({"lemmas", "--suite", "all", "--n", "3", "--q", "2"}).code == 0);
  CHECK(run_cli({"lemmas", "--suite", "idempotents", "--n", "2", "--q", "3"}).code == 0);
  const Result s = run_cli({"simples", "--n", "2", "--q", "2"});
  CHECK(s.code == 0);
  CHECK(s.out.find("sum of dim^2 = 16") != std::string::npos);
  CHECK(run_cli({"schurweyl", "--n", "2", "--m", "2", "--q", "2"}).code == 0);
  CHECK(run_cli({"multiplicity", "--bound", "5", "--seed", "11", "--vectors", "5"}).code == 0);
}

TEST_CASE("usage and budget errors") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"unit", "--n", "two"}).code == 2);
  CHECK(run_cli({"unit", "--q", "6"}).code == 2);
  CHECK(run_cli({"unit", "--n", "2", "--r", "5"}).code == 2);
  CHECK(run_cli({"lemmas", "--suite", "nope"}).code == 2);
  CHECK(run_cli({"kovacs", "--samples", "2,x"}).code == 2);
  CHECK(run_cli({"unit", "--r", "1", "--corank", "1"}).code == 2);
  CHECK(run_cli({"simples", "--n", "2", "--q", "3"}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);

  CHECK(run_cli({"unit", "--n", "4", "--q", "2", "--budget", "100"}).code == 3);
  setenv("MMU_BUDGET", "100", 1);
  CHECK(run_cli({"unit", "--n", "4", "--q", "2"}).code == 3);
  setenv("MMU_BUDGET", "abc", 1);
  CHECK(run_cli({"unit", "--n", "2"}).code == 2);
  unsetenv("MMU_BUDGET");
}

TEST_CASE("output file") {
  const auto path = temp_file("out.txt");
  const Result r = run_cli({"classes", "--n", "2", "--output", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str().find("4 semi-idempotent classes") != std::string::npos);
  std::filesystem::remove(path);
}

}
