#include <filesystem>
#include <fstream>
#include <sstream>

#include "cannonball/cli.hpp"
#include "cannonball/pyramidal.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace cannonball;
using json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome call(std::vector<std::string> args) {
  args.insert(args.begin(), "cannonball");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

u128 as_u128(const json& v) { return v.is_string() ? parse_u128(v.get<std::string>()) : u128{v.get<std::uint64_t>()}; }

}  // namespace

TEST_CASE("cli examples") {
  auto r = call({"decompose", "--m", "16"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"terms\":[1,1,3],\"values\":[1,1,14]}\n");

  r = call({"class-count", "--Z", "70", "--s", "1"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["count"] == 1);

  r = call({"verify-range", "--lo", "1", "--hi", "100000", "--k", "8", "--threads", "1"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["failures"] == json::array());
}

TEST_CASE("cli exit codes") {
  CHECK(call({}).code == cli::kUsage);
  CHECK(call({"frobnicate"}).code == cli::kUsage);
  CHECK(call({"decompose", "--m", "16", "--bogus", "1"}).code == cli::kUsage);
  CHECK(call({"decompose"}).code == cli::kUsage);
  CHECK(call({"decompose", "--m", "0"}).code == cli::kPrecondition);
  CHECK(call({"exp-sum", "--q", "0", "--a", "1"}).code == cli::kPrecondition);
  CHECK(call({"polygon", "--Z", "5", "--weights", "1", "1"}).code == cli::kPrecondition);
  CHECK(call({"mean-value", "--N", "5000", "--j", "3"}).code == cli::kResource);
  CHECK(call({"mean-value", "--N", "5000", "--j", "3", "--upper"}).code == cli::kOk);
  CHECK(call({"--help"}).code == cli::kOk);
}

TEST_CASE("cli determinism with one thread") {
  const std::vector<std::vector<std::string>> commands = {
      {"decompose", "--m", "123456789"},
      {"verify-range", "--lo", "1", "--hi", "20000", "--k", "4", "--chunk-size", "5000"},
      {"decompose-large", "--m", "2e28"},
      {"polygon", "--Z", "70"},
      {"polygon-svg", "--Z", "30"},
      {"singular-series", "--m-min", "100", "--m-max", "1000", "--points", "4", "--s", "9", "--Q", "20"},
      {"curve-count", "--p", "13"},
      {"lehmer", "--p", "101", "--L", "7", "--b0", "1", "--b1", "3"},
      {"weyl", "--alpha", "0.21", "--N", "200", "--a", "1", "--q", "5"},
      {"predict", "--m-min", "1000", "--m-max", "5000", "--points", "3", "--Q", "20", "--s", "9", "--format", "csv"},
  };
  for (auto cmd : commands) {
    cmd.push_back("--threads");
    cmd.push_back("1");
    const auto a = call(cmd), b = call(cmd);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("cli decomposition round trip") {
  for (std::uint64_t m : {1ULL, 16ULL, 4900ULL, 99'999ULL, 123'456'789ULL, 987'654'321'012ULL}) {
    const auto r = call({"decompose", "--m", std::to_string(m)});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    u128 sum = 0;
    for (std::size_t i = 0; i < j["terms"].size(); ++i) {
      CHECK(core::pyramidal_value(j["terms"][i].get<std::uint64_t>()) == as_u128(j["values"][i]));
      sum += as_u128(j["values"][i]);
    }
    CHECK(sum == m);
    CHECK(j["terms"].size() <= 8);
  }
  const auto r = call({"decompose-large", "--m", "25000000000000000000000000017"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  u128 sum = 0;
  for (const auto& v : j["values"]) sum += as_u128(v);
  CHECK(sum == parse_u128("25000000000000000000000000017"));
  CHECK(j["violations"].empty());
}

TEST_CASE("cli writes --out files") {
  const auto path = std::filesystem::temp_directory_path() / "cannonball_cli_test.svg";
  const auto r = call({"polygon-svg", "--Z", "70", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str().find("<svg") != std::string::npos);
  std::filesystem::remove(path);
}
