#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "json.hpp"

#include "divlab/pseudodiv_example.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(DIVLAB_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("divpoly emits ascending coefficients") {
  RunResult r = run("divpoly --b 1 --c 1 --m 3");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["degree"] == "4");
  CHECK(j["coefficients"] == json::array({"-1", "12", "6", "0", "3"}));
}

TEST_CASE("divpoly preimage matches the embedded table") {
  RunResult r = run("divpoly --curve paper-sec6 --m 4 --preimage-x 10");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["degree"] == "16");
  const auto& expect = divlab::pseudodiv_example::phi4_coeffs();
  REQUIRE(j["coefficients"].size() == expect.size());
  for (size_t i = 0; i < expect.size(); ++i)
    CHECK(j["coefficients"][i].get<std::string>() == divlab::to_string(expect[i]));
}

TEST_CASE("divpoly m=1 preimage is x - x0") {
  RunResult r = run("divpoly --b -171 --c 810 --m 1 --preimage-x 0");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["coefficients"] == json::array({"0", "1"}));
}

TEST_CASE("bound reports B and the prime budget") {
  RunResult r = run("bound --curve paper-sec6 --m 4 --group-order 16");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  double B = std::stod(j["B"].get<std::string>());
  double budget = std::stod(j["prime_budget"].get<std::string>());
  CHECK(B == doctest::Approx(1.1426e6).epsilon(1e-3));
  CHECK(budget == doctest::Approx(1.4370e10).epsilon(1e-3));
  CHECK(j["density_threshold"] == "0.0625");
}

TEST_CASE("bound m=2 exits with code 2") {
  RunResult r = run("bound --curve paper-sec6 --m 2");
  CHECK(r.exit_code == 2);
}

TEST_CASE("schmidt --check cross-validates") {
  RunResult r = run("schmidt --b -171 --c 810 --m 4 --check");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["oracle_match"] == true);
  CHECK(j["schmidt_disc"] == j["oracle_disc"]);
}

TEST_CASE("height subcommand") {
  RunResult r = run("height --rational 3/2");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(std::stod(j["h"].get<std::string>()) == doctest::Approx(std::log(3.0)).epsilon(1e-11));

  RunResult q = run("height --quad -1,2,7");
  REQUIRE(q.exit_code == 0);
  json jq = json::parse(q.out);
  CHECK(std::stod(jq["h"].get<std::string>()) ==
        doctest::Approx(0.5 * std::log(27.0)).epsilon(1e-9));
  CHECK(jq["min_poly_bound_holds"] == true);
}

TEST_CASE("local-test single prime") {
  RunResult r = run("local-test --curve paper-sec6 --x 10 --y 10 --m 4 --p 11");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["solvable"] == false);
}

TEST_CASE("sweep CSV columns and summary") {
  std::string csv_path = "/tmp/divlab_test_sweep.csv";
  RunResult r = run("--out " + csv_path +
                    " sweep --curve paper-sec6 --x 10 --y 10 --m 4 --limit 20 --group-order 16");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("solvable=5 unsolvable=3") != std::string::npos);
  CHECK(r.out.find("threshold=0.0625") != std::string::npos);
  std::ifstream f(csv_path);
  REQUIRE(f.good());
  std::string header;
  std::getline(f, header);
  CHECK(header == "prime,mode,solvable,certificate");
  std::vector<long> unsolvable;
  std::string line;
  while (std::getline(f, line)) {
    std::stringstream ss(line);
    std::string prime, mode, solvable, cert;
    std::getline(ss, prime, ',');
    std::getline(ss, mode, ',');
    std::getline(ss, solvable, ',');
    std::getline(ss, cert, ',');
    CHECK(mode == "abscissa");
    CHECK((solvable == "0" || solvable == "1"));
    if (solvable == "0") unsolvable.push_back(std::stol(prime));
  }
  CHECK(unsolvable == std::vector<long>{2, 5, 11});
  std::remove(csv_path.c_str());
}

TEST_CASE("sweep exits 4 when the point is off the curve") {
  RunResult r = run("sweep --curve paper-sec6 --x 10 --y 11 --m 4 --limit 20");
  CHECK(r.exit_code == 4);
}

TEST_CASE("cocycle failing set via CLI") {
  RunResult r = run("cocycle --group paper-sec6 --values 2w,0");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["failing_count"] == "4");
  CHECK(j["failing"].size() == 4);

  RunResult z = run("cocycle --group paper-sec6 --values zero");
  json jz = json::parse(z.out);
  CHECK(jz["failing_count"] == "0");

  RunResult cb = run("cocycle --group paper-sec6 --values coboundary:1,3");
  json jc = json::parse(cb.out);
  CHECK(jc["failing_count"] == "0");
}

TEST_CASE("h1loc via CLI") {
  RunResult r = run("h1loc --group paper-sec6");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["h1loc_order"] == "1");
  CHECK(j["h1_order"] == "64");

  RunResult c = run("h1loc --group cyclic:eta:25");
  json jc = json::parse(c.out);
  CHECK(jc["h1loc_order"] == "1");
}

TEST_CASE("galois-verify via CLI") {
  RunResult r = run("galois-verify --p 5 --r 2");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["order_rigidity"] == true);

  RunResult bad = run("galois-verify --p 3 --r 1");
  json jb = json::parse(bad.out);
  CHECK(jb["order_rigidity"] == false);
  CHECK(jb.contains("witness"));
}

TEST_CASE("descent lift via CLI") {
  RunResult r = run("descent --curve paper-sec6 --s 4 --t 1");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["delta"] == "7");
  CHECK(j["lift"]["x"] == "-1 + 2*sqrt(7)");
  CHECK(j["lift"]["four_mul"]["x"] == "10");
}

TEST_CASE("all builtin curves resolve") {
  for (const char* name :
       {"paper-sec6", "torsion7-a", "torsion7-b", "torsion5-a", "torsion5-b"}) {
    RunResult r = run(std::string("divpoly --curve ") + name + " --m 3");
    CHECK(r.exit_code == 0);
  }
  CHECK(run("divpoly --curve no-such-curve --m 3").exit_code == 2);
}

TEST_CASE("config file round trip and validation") {
  std::string path = "/tmp/divlab_test_cfg.json";
  {
    std::ofstream f(path);
    f << R"({"b": "-171", "c": "810", "label": "file-curve"})";
  }
  RunResult r = run("divpoly --config " + path + " --m 3");
  CHECK(r.exit_code == 0);
  {
    std::ofstream f(path);
    f << R"({"b": "-171", "c": "810", "alpha": "9", "beta": "6", "gamma": "-15"})";
  }
  RunResult bad = run("divpoly --config " + path + " --m 3");
  CHECK(bad.exit_code == 2);  // both forms present
  {
    std::ofstream f(path);
    f << R"({"b": "0", "c": "0"})";
  }
  RunResult sing = run("divpoly --config " + path + " --m 3");
  CHECK(sing.exit_code == 2);  // singular
  std::remove(path.c_str());
}

TEST_CASE("outputs are byte-identical across runs") {
  for (const std::string args :
       {std::string("divpoly --curve paper-sec6 --m 4 --preimage-x 10"),
        std::string("bound --curve paper-sec6 --m 5"),
        std::string("sweep --curve paper-sec6 --x 10 --y 10 --m 4 --limit 50")}) {
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("enumeration cap override via DIVLAB_CAP") {
  RunResult r = run("h1loc --group gens:4:1,1,0,1");  // cyclic mod 4, fine by default
  CHECK(r.exit_code == 0);
  std::string cmd = std::string("DIVLAB_CAP=2 ") + DIVLAB_BIN + " h1loc --group cyclic:eta:25";
  int status = std::system((cmd + " >/dev/null 2>&1").c_str());
  CHECK(WEXITSTATUS(status) == 3);  // closure cap exceeded
}

TEST_CASE("paper-example full run emits 11 PASS lines") {
  RunResult r = run("paper-example");
  CHECK(r.exit_code == 0);
  size_t pass_lines = 0;
  std::stringstream ss(r.out);
  std::string line;
  while (std::getline(ss, line))
    if (line.rfind("PASS", 0) == 0) ++pass_lines;
  CHECK(pass_lines == 11);
  CHECK(r.out.find("solvable=123 unsolvable=45") != std::string::npos);
}

TEST_CASE("paper-example is the top-level gate") {
  RunResult r = run("paper-example --limit 60");
  CHECK(r.exit_code == 0);
  size_t lines = 0;
  std::stringstream ss(r.out);
  std::string line;
  bool partial_seen = false;
  while (std::getline(ss, line)) {
    if (line.rfind("PASS", 0) == 0 || line.rfind("FAIL", 0) == 0 || line.rfind("PARTIAL", 0) == 0)
      ++lines;
    if (line.rfind("PARTIAL sweep", 0) == 0) partial_seen = true;
  }
  CHECK(lines == 11);
  CHECK(partial_seen);

  RunResult bad = run("paper-example --b -170 --limit 30");
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("FAIL preimage-coefficients") != std::string::npos);
}
