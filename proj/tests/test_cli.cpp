#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(FC_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string line;
  while (std::getline(is, line)) out.push_back(line);
  return out;
}

} // namespace

TEST_CASE("symbol command: format contract") {
  const RunResult r = run("symbol --p 3 --alpha 1.5 --resolution 10");
  CHECK(r.exit_code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 11);  // header + 10 rows
  CHECK(rows[0] == "theta,f_p3_alpha1.5");
  double prev = -1.0;
  for (size_t i = 1; i < rows.size(); ++i) {
    const double theta = std::strtod(rows[i].c_str(), nullptr);
    CHECK(theta > prev);
    prev = theta;
  }
}

TEST_CASE("symbol command: multiple alphas and json format") {
  const RunResult r = run("symbol --p 3 --alpha 1.2 --alpha 1.8 --resolution 5 --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"schema_version\": 1") != std::string::npos);
  CHECK(r.out.find("f_p3_alpha1.2") != std::string::npos);
  CHECK(r.out.find("f_p3_alpha1.8") != std::string::npos);
}

TEST_CASE("determinism: identical bytes for identical configs") {
  const std::string cfg = "eigs --p 3 --n 24 --alpha 1.5";
  const RunResult a = run(cfg);
  const RunResult b = run(cfg);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  const RunResult c = run("verify --suite splines --seed 7");
  const RunResult d = run("verify --suite splines --seed 7");
  CHECK(c.out == d.out);
}

TEST_CASE("bounds command verdicts") {
  const RunResult odd = run("bounds --p 3 --alpha 1.3 --resolution 32 --out /dev/null");
  CHECK(odd.exit_code == 0);
  CHECK(odd.out.find("\"sandwich_holds\": true") != std::string::npos);
  const RunResult even = run("bounds --p 4 --alpha 1.3 --resolution 32 --out /dev/null");
  CHECK(even.exit_code == 0);
  CHECK(even.out.find("\"lower_bound_holds_above_a\": true") != std::string::npos);
  CHECK(even.out.find("threshold_a") != std::string::npos);
}

TEST_CASE("eigs command report") {
  const RunResult r = run("eigs --p 3 --n 31 --alpha 1.8 --out /dev/null");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"outlier_budget\": 8") != std::string::npos);
  CHECK(r.out.find("matrix_deviation") != std::string::npos);
}

TEST_CASE("convergence command rows") {
  const RunResult r = run("convergence --solution poly33 --p 2 --alpha 1.2");
  CHECK(r.exit_code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 6);  // header + n = 4,8,16,32,64
  CHECK(rows[0] == "alpha,p,n,error,order");
  // first row has an empty order field
  CHECK(rows[1].back() == ',');
  // n=8 row reproduces the stored reference error to 1%
  const auto& n8 = rows[2];
  const size_t pos = n8.find(",8,");
  REQUIRE(pos != std::string::npos);
  const double err = std::strtod(n8.c_str() + pos + 3, nullptr);
  CHECK(err == doctest::Approx(1.5675e-04).epsilon(0.01));
}

TEST_CASE("verify command") {
  const RunResult r = run("verify --suite splines --seed 42");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"passed\": true") != std::string::npos);
  CHECK(r.out.find("splines.partition_of_unity.p2") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("symbol --p 3").exit_code == 2);          // missing required alpha
  CHECK(run("nonsense").exit_code == 2);              // unknown subcommand
  CHECK(run("symbol --p 42 --alpha 1.5").exit_code == 2);  // out-of-range degree
  CHECK(run("verify --suite bogus").exit_code == 2);  // invalid suite value
}
