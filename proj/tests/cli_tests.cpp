#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "qstirling/triangle.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

// Runs the CLI binary with the given arguments, capturing stdout (stderr too
// when merge_stderr is set).
RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  const std::string cmd =
      std::string(QSTIRLING_BIN) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("table csv contains the oracle cell 4,2,7") {
  const auto r = run_cli("table --family tilde2 --psi classical --n 4 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output.rfind("n,k,value\n", 0) == 0);
  CHECK(r.output.find("4,2,7\n") != std::string::npos);
}

TEST_CASE("cigl2 at q=1 gives the classical row 3") {
  const auto r = run_cli("table --family cigl2 --q 1 --n 3 --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["rows"][3] == nlohmann::json({"0", "1", "3", "1"}));
}

TEST_CASE("tilde1 at q:2 row 3 expands x(x-1)(x-3)") {
  const auto r = run_cli("table --family tilde1 --psi q:2 --n 3 --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["rows"][3] == nlohmann::json({"0", "3", "-4", "1"}));
}

TEST_CASE("table argument validation exits 2") {
  CHECK(run_cli("table --family tilde2 --q 2 --n 3").exit_code == 2);
  CHECK(run_cli("table --family carlitz2 --psi classical --n 3").exit_code == 2);
  CHECK(run_cli("table --family bogus --psi classical --n 3").exit_code == 2);
  CHECK(run_cli("table --psi classical --n 3").exit_code == 2);  // missing family
}

TEST_CASE("emitted tables round-trip byte-identically") {
  const auto csv = run_cli("table --family tilde2 --psi q:3/5 --n 6 --format csv");
  CHECK(csv.exit_code == 0);
  const auto t = qstirling::Triangle::from_csv(csv.output, qstirling::TriangleFamily::tilde2,
                                               "q:3/5");
  CHECK(t.to_csv() == csv.output);

  const auto json = run_cli("table --family tilde1 --psi classical --n 5 --format json");
  CHECK(json.exit_code == 0);
  CHECK(qstirling::Triangle::from_json(json.output).to_json() == json.output);
}

TEST_CASE("bell sequences through the CLI") {
  const auto r = run_cli("bell --family carlitz --q 2 --n 4 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("2,3\n") != std::string::npos);  // B_q(2) = 1 + q = 3
  const auto bad = run_cli("bell --family carlitz --n 4");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("verify single suite exits 0") {
  const auto r = run_cli("verify --suite eq20-orthogonality --max-n 8");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  for (const auto& v : j) CHECK(v["verdict"] == "VERIFIED");
}

TEST_CASE("verify --all --max-n 6 --q 1 exits 0: classical specializations hold") {
  const auto r = run_cli("verify --all --max-n 6 --q 1");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j.size() > 20);
}

TEST_CASE("verify rejects unknown suites with the full list") {
  const auto r = run_cli("verify --suite nonsense --max-n 4", /*merge_stderr=*/true);
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("eq20-orthogonality") != std::string::npos);
  CHECK(r.output.find("eq16-dobinski") != std::string::npos);
}

TEST_CASE("dobinski renders B_5 to ten decimal places") {
  const auto r = run_cli(
      "dobinski --psi classical --n 5 --convention times --tol 1/1000000000000 "
      "--rcap 60 --digits 10");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["decimal"] == "52.0000000000");
  CHECK(j["exact"] == "52");
  CHECK(j["within_bound"] == true);
}

TEST_CASE("dobinski n = 0 approximates 1") {
  const auto r = run_cli("dobinski --psi classical --n 0 --convention times --digits 6");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["decimal"] == "1.000000");
  CHECK(j["exact"] == "1");
}

TEST_CASE("dobinski at q:1/2 reports the exact row sum alongside") {
  const auto r = run_cli(
      "dobinski --psi q:1/2 --n 3 --convention times --q17-factor off --digits 8");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["exact"] == "9/2");
  CHECK(j["tail_bound"] != "inf");
  CHECK(j.contains("within_bound"));
}

TEST_CASE("expand emits falling polynomials and newton coefficients") {
  const auto falling = run_cli("expand --psi q:2 --falling 3");
  CHECK(falling.exit_code == 0);
  CHECK(nlohmann::json::parse(falling.output) == nlohmann::json({"0", "3", "-4", "1"}));

  const auto newton = run_cli(R"(expand --newton --poly '["0","0","1"]' --nodes '["0","1"]')");
  CHECK(newton.exit_code == 0);
  CHECK(nlohmann::json::parse(newton.output) == nlohmann::json({"0", "1", "1"}));

  CHECK(run_cli("expand --psi classical --falling 2 --rising 2").exit_code == 2);
  CHECK(run_cli("expand --newton --poly '[\"1\"]'").exit_code == 2);
}

TEST_CASE("custom psi sequences come from JSON files") {
  const std::string path = "cli_test_psi.json";
  {
    std::ofstream out(path);
    out << R"(["2","7/2","5"])";
  }
  const auto r = run_cli("table --family tilde2 --psi custom:" + path + " --n 3 --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["rows"][3] == nlohmann::json({"0", "4", "11/2", "1"}));

  // Exhausting the supplied values is a computation error: exit 1.
  const auto deep = run_cli("table --family tilde2 --psi custom:" + path + " --n 9");
  CHECK(deep.exit_code == 1);
  std::remove(path.c_str());
}

TEST_CASE("non-convergent dobinski series exit 1 with a structured message") {
  // q = 0 freezes every psi value at 1, so the alternating series never decays.
  const auto r = run_cli("dobinski --psi q:0 --n 2");
  CHECK(r.exit_code == 1);
  const auto j = nlohmann::json::parse(r.output);
  REQUIRE(j.contains("error"));
  CHECK(j["error"].get<std::string>().find("converge") != std::string::npos);
}

TEST_CASE("--out writes the same bytes to a file") {
  const std::string path = "cli_test_out.json";
  const auto direct = run_cli("table --family inv2 --q 2 --n 4 --format json");
  const auto filed = run_cli("table --family inv2 --q 2 --n 4 --format json --out " + path);
  CHECK(filed.exit_code == 0);
  CHECK(filed.output.empty());
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(content == direct.output);
  std::remove(path.c_str());
}
