#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const char* bin = std::getenv("QPI_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "QPI_BIN must point at the qpi binary");
  const std::string cmd = std::string(bin) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof(buf), pipe)) result.output.append(buf, n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("verify: exit 0 and a verified JSON report") {
  const RunResult r = run_cli("verify pi2 --order 60 --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"status\":\"verified\"") != std::string::npos);
  CHECK(r.output.find("\"id\":\"pi2\"") != std::string::npos);
}

TEST_CASE("verify: unknown identities exit 2") {
  CHECK(run_cli("verify nosuch").exit_code == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("bogus-subcommand").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("expand prints the printed qid coefficient list") {
  const RunResult r = run_cli("expand qid.lhs --order 11");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1, 2, -1, 0, 3, -6, 3, 8, -16, 8, 10\n");
}

TEST_CASE("expand accepts a phi spec as JSON") {
  const RunResult r = run_cli(
      R"(expand --phi '{"upper":[[1,"-2"]],"lower":[],"base":1,"argument":[2,3],"order":6}')");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1, -2, -2, 4, 0, 0\n");
}

TEST_CASE("expand without a name exits 2") {
  CHECK(run_cli("expand").exit_code == 2);
  CHECK(run_cli("expand no-such-series").exit_code == 2);
}

TEST_CASE("verify-all at a reduced order") {
  const RunResult r = run_cli("verify-all --order 8 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output.rfind("id,order,status,first_mismatch,elapsed_ms\n", 0) == 0);
  CHECK(r.output.find("red-grid,8,verified") != std::string::npos);
}

TEST_CASE("wz-check emits a JSON grid report") {
  const RunResult r = run_cli("wz-check --a 1/2 --nmax 2 --kmax 2 --order 30");
  CHECK(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["all_equal"] == true);
  CHECK(j["a"] == "1/2");
  CHECK(j["checked"] == 9);
}

TEST_CASE("limit emits CSV rows per epsilon") {
  const RunResult r = run_cli("limit pi --eps 0.1,0.03 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output.rfind("eps,value,abs_error\n", 0) == 0);
  CHECK(r.output.find("0.1,") != std::string::npos);
  CHECK(run_cli("limit nosuch --eps 0.1").exit_code == 2);
}

TEST_CASE("classical prints a single-line result") {
  const RunResult r = run_cli("classical guillera --terms 40");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("abs_error=") != std::string::npos);
  CHECK(run_cli("classical nosuch").exit_code == 2);
}

TEST_CASE("arith emits the t2 table") {
  const RunResult r = run_cli("arith --max 5");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "n,t2_brute,t2_formula,match\n0,1,1,1\n1,1,1,1\n2,0,0,1\n3,1,1,1\n4,1,1,1\n5,1,1,1\n");
}

TEST_CASE("emitted report JSON round-trips byte-identically") {
  const RunResult r = run_cli("verify gauss-psi --order 50 --format json");
  CHECK(r.exit_code == 0);
  std::string text = r.output;
  while (!text.empty() && text.back() == '\n') text.pop_back();
  const nlohmann::json parsed = nlohmann::json::parse(text);
  CHECK(parsed.dump() == text);
}

TEST_CASE("environment variable provides the default order") {
  const char* bin = std::getenv("QPI_BIN");
  REQUIRE(bin != nullptr);
  const std::string cmd = std::string("QPI_DEFAULT_ORDER=7 ") + bin + " expand psi.sum 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof(buf), pipe)) output.append(buf, n);
  pclose(pipe);
  CHECK(output == "1, 1, 0, 1, 0, 0, 1\n");
}

TEST_CASE("config file supplies defaults, flags win") {
  const std::string path = "qpi_test_config.json";
  {
    std::ofstream out(path);
    out << R"({"order": 4})";
  }
  CHECK(run_cli("expand psi.sum --config " + path).output == "1, 1, 0, 1\n");
  CHECK(run_cli("expand psi.sum --config " + path + " --order 2").output == "1, 1\n");
  std::remove(path.c_str());
}

TEST_CASE("output lands in a file with --out") {
  const std::string path = "qpi_test_out.csv";
  const RunResult r = run_cli("arith --max 2 --out " + path);
  CHECK(r.exit_code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string first;
  std::getline(in, first);
  CHECK(first == "n,t2_brute,t2_formula,match");
  in.close();
  std::remove(path.c_str());
}
