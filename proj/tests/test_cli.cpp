#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "salemforge/cli.hpp"

using namespace salemforge;

namespace {

const std::string kData = std::string(SALEMFORGE_DATA_DIR) + "/";

struct Run {
  int code;
  std::string out, err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "salemforge");
  std::ostringstream out, err;
  int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<long> coeffs(const nlohmann::json& j) {
  std::vector<long> v;
  for (const auto& c : j) v.push_back(std::stol(c.get<std::string>()));
  return v;
}

std::vector<long> mul(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

bool has_float(const nlohmann::json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured())
    for (const auto& x : j)
      if (has_float(x)) return true;
  return false;
}

std::filesystem::path temp_path(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_CASE("coxeter factor at n = 19") {
  Run r = run({"coxeter", "factor", "--n", "19"});
  REQUIRE(r.code == 0);
  nlohmann::json j = r.json();
  CHECK(j["config"]["command"] == "coxeter factor");
  const auto& f = j["result"]["formula_route"];
  REQUIRE(f["cyclotomic_part"].size() == 2);
  CHECK(f["cyclotomic_part"][0]["d"] == 2);
  CHECK(f["cyclotomic_part"][1]["d"] == 5);
  std::vector<long> salem = coeffs(f["salem_candidate"]);
  CHECK(salem.size() == 15);
  // (x + 1)(x^4 + x^3 + x^2 + x + 1) times the Salem factor is E_19
  CHECK(mul(mul(salem, {1, 1}), {1, 1, 1, 1, 1}) == coeffs(f["e_n"]));
  for (std::size_t i = 0; i < salem.size(); ++i) CHECK(salem[i] == salem[salem.size() - 1 - i]);
  CHECK(j["result"]["routes_agree"] == true);
  CHECK(j["result"]["matrix_route"]["salem_candidate"] == f["salem_candidate"]);
}

TEST_CASE("poly and oracle") {
  Run p = run({"coxeter", "poly", "--n", "12"});
  REQUIRE(p.code == 0);
  CHECK(p.json()["result"]["degree"] == 12);
  Run o = run({"coxeter", "oracle", "--n", "12"});
  REQUIRE(o.code == 0);
  CHECK(o.json()["result"]["match"] == true);
  CHECK(o.json()["result"]["e_n_matrix"] == p.json()["result"]["e_n"]);
}

TEST_CASE("toric check") {
  Run r = run({"toric", "check", kData + "fans/plane.json"});
  REQUIRE(r.code == 0);
  nlohmann::json j = r.json()["result"];
  CHECK(j["smooth"] == true);
  CHECK(j["complete"] == true);
  CHECK(j["N"] == 3);

  auto bad = temp_path("salemforge_bad_fan.json");
  std::ofstream(bad) << R"({"dim": 2, "max_cones": [[[1, 0], [1, 2]], [[1, 2], [-1, -1]], [[-1, -1], [1, 0]]]})";
  Run b = run({"toric", "check", bad.string()});
  CHECK(b.code == 1);
  CHECK(b.json()["error"]["type"] == "FanError");
  CHECK(b.json()["result"]["failure"]["condition"] == "determinant");
  std::filesystem::remove(bad);
}

TEST_CASE("usage errors") {
  CHECK(run({"coxeter", "poly", "--n", "19", "--frobnicate"}).code == 64);
  CHECK(run({"coxeter", "explode", "--n", "19"}).code == 64);
  CHECK(run({"coxeter", "poly"}).code == 64);
  CHECK(run({}).code == 64);
  CHECK(run({"coxeter", "poly", "--n", "19", "--precision", "8"}).code == 64);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("precondition and consistency exits") {
  Run d = run({"mcmullen", "data", "--n", "20"});
  CHECK(d.code == 1);
  CHECK(d.json()["error"]["type"] == "PreconditionError");
  CHECK_FALSE(d.json().contains("result"));
  CHECK_FALSE(d.err.empty());

  Run c = run({"mcmullen", "certificate", "--n", "20"});
  CHECK(c.code == 2);
  CHECK(c.json().contains("result"));
  CHECK(c.json()["error"]["type"] == "ConsistencyError");
  CHECK(run({"mcmullen", "certificate", "--n", "19"}).code == 0);

  CHECK(run({"toric", "check", kData + "fans/missing.json"}).code == 1);
}

TEST_CASE("reports are deterministic and float-free") {
  Run a = run({"mcmullen", "data", "--n", "19"});
  Run b = run({"mcmullen", "data", "--n", "19"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK_FALSE(has_float(a.json()));
  Run p = run({"product", "classify", kData + "specs/s19_plane.json"});
  REQUIRE(p.code == 0);
  CHECK_FALSE(has_float(p.json()));
  CHECK(p.json()["result"]["siegel_count"] == 3);
}

TEST_CASE("config, --out and the precision override") {
  auto path = temp_path("salemforge_cli_out.json");
  Run r = run({"coxeter", "poly", "--n", "25", "--precision", "300", "--bound", "10", "--out", path.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  nlohmann::json j = nlohmann::json::parse(in);
  CHECK(j["config"]["precision_bits"] == 300);
  CHECK(j["config"]["relation_bound"] == 10);
  CHECK(j["config"]["output"] == path.string());
  std::filesystem::remove(path);

  setenv("SALEMFORGE_PRECISION", "512", 1);
  CHECK(run({"coxeter", "poly", "--n", "13"}).json()["config"]["precision_bits"] == 512);
  CHECK(run({"coxeter", "poly", "--n", "13", "--precision", "128"}).json()["config"]["precision_bits"] == 128);
  setenv("SALEMFORGE_PRECISION", "12", 1);
  CHECK(run({"coxeter", "poly", "--n", "13"}).code == 64);
  unsetenv("SALEMFORGE_PRECISION");
}

TEST_CASE("mau build and audit round trip") {
  auto path = temp_path("salemforge_mau.json");
  Run b = run({"mau", "build", "--length", "2", "--out", path.string()});
  REQUIRE(b.code == 0);
  Run a = run({"mau", "audit", path.string()});
  CHECK(a.code == 0);
  CHECK(a.json()["result"]["outcome"] == "NoRelationFound");
  std::filesystem::remove(path);
}
