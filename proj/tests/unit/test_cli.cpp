#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "sobolev/scalar.hpp"
#include "sobolev/solver.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " SOBOLEV_CLI_PATH " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(cell);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

using nlohmann::json;

TEST_CASE("constant") {
  Run r = run("constant --k 1 --weight poly:1");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["mu"] == "12");
  CHECK(j["lambda"].get<double>() == doctest::Approx(0.28867513).epsilon(1e-8));
  CHECK(j["method"] == "pipeline");
  CHECK(j["outside_theorem_scope"] == false);
  for (const char* key : {"k", "weight", "mu", "mu_float", "lambda", "method", "mode", "diagnostics",
                          "outside_theorem_scope", "notes"})
    CHECK(j.contains(key));

  r = run("constant --k 2 --weight dirac:1/2");
  CHECK(json::parse(r.out)["mu"] == "192");

  r = run("constant --k 1 --weight hardy:1");
  j = json::parse(r.out);
  CHECK(j["lambda"].get<double>() == 1.0);
  CHECK(j["outside_theorem_scope"] == true);
}

TEST_CASE("exact mu reparses to the library value") {
  const Run r = run("constant --k 3 --weight chi:1/3,1/2");
  const std::string mu = json::parse(r.out)["mu"];
  const auto spec = sobolev::make_problem(3, sobolev::parse_weight("chi:1/3,1/2"));
  CHECK(sobolev::Scalar::parse_rational(mu) == sobolev::solve(spec).mu);
}

TEST_CASE("float mode") {
  const Run r = run("constant --k 1 --weight pow:1/2 --mode float");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["mode"] == "float");
  CHECK(j["mu_float"].get<double>() == doctest::Approx(4.5).epsilon(1e-12));
}

TEST_CASE("minimizer samples") {
  Run r = run("minimizer --k 1 --weight poly:1 --samples 3");
  REQUIRE(r.code == 0);
  auto rows = csv(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == std::vector<std::string>{"x", "u", "u_k"});
  CHECK(std::stod(rows[2][0]) == 0.5);
  CHECK(std::stod(rows[2][1]) == 1.5);
  CHECK(std::stod(rows[1][1]) == 0.0);
  CHECK(std::stod(rows[3][1]) == 0.0);

  r = run("minimizer --k 1 --weight hardy:1 --samples 5");
  rows = csv(r.out);
  CHECK(std::stod(rows[1][1]) == 0.0);
  CHECK(rows[1][2] == "inf");

  for (const char* spec : {"dirac:1/3", "chi:1/4,1/2", "pow:1/2"}) {
    r = run(std::string("minimizer --k 2 --samples 11 --weight ") + spec);
    rows = csv(r.out);
    CHECK(std::stod(rows[1][1]) == 0.0);
    CHECK(std::abs(std::stod(rows.back()[1])) < 1e-12);
  }
}

TEST_CASE("verify") {
  Run r = run("verify --k 2 --weight poly:1 --galerkin-degree 6 --grid 199");
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["verdict"] == "agree");
  CHECK(j["galerkin"]["gap"].get<double>() == 0.0);
  CHECK(j["max_principle"] == "pass");
  for (const char* spec : {"chi:0,1/2", "pow:1/2", "dirac:1/2"}) {
    r = run(std::string("verify --k 1 --weight ") + spec);
    CAPTURE(spec);
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["verdict"] == "agree");
  }
  j = json::parse(run("verify --k 1 --weight pow:1/2").out);
  CHECK(std::abs(j["galerkin"]["relative_gap"].get<double>()) < 1e-6);
  j = json::parse(run("verify --k 3 --weight poly:1").out);
  CHECK(j["sign_iteration"] == "skipped");
}

TEST_CASE("verify reports disagreement with exit code 4") {
  // A grid this coarse cannot reach the 5% finite-difference tolerance for the beam.
  const Run r = run("verify --k 2 --weight dirac:1/10 --grid 9");
  CHECK(r.code == 4);
  CHECK(json::parse(r.out)["verdict"] == "disagree");
}

TEST_CASE("sweep") {
  Run r = run("sweep --k 1 --param dirac --from 0.1 --to 0.9 --step 0.1");
  REQUIRE(r.code == 0);
  auto rows = csv(r.out);
  REQUIRE(rows.size() == 10);
  CHECK(rows[0] == std::vector<std::string>{"param", "mu", "lambda"});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double a = std::stod(rows[i][0]);
    CHECK(std::stod(rows[i][1]) == doctest::Approx(1 / (a * (1 - a))).epsilon(1e-14));
    CHECK(rows[i][1] == rows[rows.size() - i][1]);
  }
  r = run("sweep --k 1 --param chi-width --center 1/2 --from 0.4 --to 0.05 --step 0.05");
  rows = csv(r.out);
  REQUIRE(rows.size() == 9);
  for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
    CHECK(std::stod(rows[i][0]) < std::stod(rows[i + 1][0]));
    CHECK(std::stod(rows[i][1]) < std::stod(rows[i + 1][1]));
    CHECK(std::stod(rows[i][1]) > 4);
  }
  r = run("sweep --k 2 --param pow --from 0 --to 0.9 --step 0.3 --format json");
  CHECK(json::parse(r.out)["rows"].size() == 4);
}

TEST_CASE("exit codes for bad input") {
  CHECK(run("constant --k 1 --weight poly:x-1").code == 2);
  CHECK(run("constant --k 1 --weight bogus").code == 2);
  CHECK(run("constant --k 0 --weight poly:1").code == 2);
  CHECK(run("constant --k 2 --weight hardy:1").code == 2);
  CHECK(run("constant --k 1").code == 2);
  CHECK(run("constant --k 1 --weight poly:1 --samples 1").code == 2);
  CHECK(run("constant --k 1 --weight poly:1 --grid 5").code == 2);
  CHECK(run("constant --k 1 --weight poly:1 --mode fast").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("sweep --k 1 --param dirac --from 0 --to 0.5 --step 0.1").code == 2);
}

TEST_CASE("solver errors exit with 3") {
  // u_k of the Hardy extremizer is infinite at 0 and JSON has no encoding for it.
  CHECK(run("minimizer --k 1 --weight hardy:1 --samples 5 --format json").code == 3);
}

TEST_CASE("config file precedence") {
  const std::string path = "sobolev_test_config.txt";
  {
    std::ofstream f(path);
    f << "# defaults\nk = 2\nweight = poly:1\nmode = exact\n";
  }
  const std::string env = "SOBOLEV_CONFIG=" + path;
  Run r = run("constant", env);
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["mu"] == "720");
  r = run("constant --k 1", env);
  CHECK(json::parse(r.out)["mu"] == "12");
  {
    std::ofstream f(path);
    f << "colour = blue\n";
  }
  CHECK(run("constant --k 1 --weight poly:1", env).code == 2);
  std::remove(path.c_str());
}

TEST_CASE("output file") {
  const std::string path = "sobolev_test_out.json";
  REQUIRE(run("constant --k 1 --weight chi:0,1/2 --out " + path).code == 0);
  std::ifstream in(path);
  json j;
  in >> j;
  CHECK(j["mu"] == "48/5");
  std::remove(path.c_str());
}
