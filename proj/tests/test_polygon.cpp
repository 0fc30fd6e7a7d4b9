#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cannonball/decompose.hpp"
#include "cannonball/errors.hpp"
#include "cannonball/polygon.hpp"
#include "doctest.h"

using namespace cannonball;
using namespace cannonball::polygon;

namespace {

WeightFunction ones(std::size_t k, unsigned s) { return {std::vector<std::int64_t>(k, 1), s}; }

std::size_t count_substr(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("weight from decomposition") {
  core::Decomposition d{16, 8, {1, 1, 3}};
  CHECK(weight_from_decomposition(d).w == std::vector<std::int64_t>{3, 1, 1});
  CHECK(weight_from_decomposition({4900, 8, {24}}).w == std::vector<std::int64_t>(24, 1));
  CHECK(weight_from_decomposition({1, 8, {1}}).w == std::vector<std::int64_t>{1});
  CHECK(weight_from_decomposition(d).s == 3);
}

TEST_CASE("validate weight") {
  CHECK(validate_weight({{3, 1, 1}, 8}, 8, 4).valid);
  const auto bad = validate_weight({{1, 2}, 8}, 8, 3);
  CHECK_FALSE(bad.valid);
  REQUIRE(bad.violations.size() == 1);
  CHECK(bad.violations[0].find("non-increasing") != std::string::npos);
  CHECK(validate_weight(ones(24, 1), 1, 70).valid);
  const auto many = validate_weight({{-1, 9}, 8}, 8, 2);
  CHECK(many.violations.size() == 4);
}

TEST_CASE("build polygon") {
  const auto p70 = build_polygon(ones(24, 1), 70);
  CHECK(p70.sides.size() == 25);
  CHECK(p70.closure_residual < 1e-9 * 70);
  CHECK(p70.squared_radii.back() == 4900);

  const auto p4 = build_polygon({{3, 1, 1}, 8}, 4);
  CHECK(p4.sides == std::vector<std::uint64_t>{1, 1, 1, 2, 3, 4});
  CHECK(p4.vertices.size() == 6);
  CHECK(p4.closure_residual < 1e-9 * 4);

  CHECK_THROWS_AS(build_polygon({{1}, 1}, 1), DegenerateInstanceError);
  CHECK_THROWS_AS(build_polygon({{3, 1, 1}, 8}, 5), InvalidClassError);
  CHECK_THROWS_AS(build_polygon({{}, 8}, 5), PreconditionError);
  CHECK_THROWS_AS(build_polygon({{1, 2}, 8}, 3), PreconditionError);
  CHECK_THROWS_AS(build_polygon({{3, 1, 1}, 8}, 4, {true}), PreconditionError);
}

TEST_CASE("exact radius recursion and closure on random classes") {
  std::mt19937_64 rng(2024);
  int built = 0;
  while (built < 200) {
    const std::uint64_t Z = 2 + rng() % 499;
    const auto w = weight_from_decomposition(core::decompose8(Z * Z));
    std::vector<bool> bits(w.side_count());
    for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = (rng() & 1) != 0;
    try {
      const auto poly = build_polygon(w, Z, bits);
      for (std::size_t j = 0; j + 1 < poly.squared_radii.size(); ++j)
        REQUIRE(poly.squared_radii[j + 1] - poly.squared_radii[j] == static_cast<u128>(poly.sides[j]) * poly.sides[j]);
      REQUIRE(poly.squared_radii.back() == static_cast<u128>(Z) * Z);
      REQUIRE(poly.closure_residual < 1e-9 * static_cast<double>(Z));
      ++built;
    } catch (const DegenerateInstanceError&) {
    }
  }
}

TEST_CASE("at most 2^n accepted instances per class") {
  const WeightFunction w{{3, 1, 1}, 8};
  const std::size_t n = w.side_count();
  std::size_t accepted = 0;
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    std::vector<bool> bits(n);
    for (std::size_t i = 0; i < n; ++i) bits[i] = ((mask >> i) & 1) != 0;
    try {
      build_polygon(w, 4, bits);
      ++accepted;
    } catch (const DegenerateInstanceError&) {
    }
  }
  CHECK(accepted > 0);
  CHECK(accepted <= (1ULL << (n + 1)));
}

TEST_CASE("every final side has a multiplicity 8 class") {
  for (std::uint64_t Z = 1; Z <= 300; ++Z) {
    const auto d = core::decompose8(Z * Z);
    const auto v = validate_weight(weight_from_decomposition(d), 8, Z);
    REQUIRE_MESSAGE(v.valid, "Z = " << Z);
  }
}

TEST_CASE("class count") {
  CHECK(class_count(1, 1) == 1);
  CHECK(class_count(70, 1) == 1);
  CHECK(class_count(2, 8) == 1);
}

TEST_CASE("svg output") {
  const auto svg70 = svg_string(build_polygon(ones(24, 1), 70));
  CHECK(count_substr(svg70, "<line ") == 25);
  CHECK(count_substr(svg70, "<circle ") == 1);
  CHECK(svg70.find("version=\"1.1\"") != std::string::npos);
  const auto poly4 = build_polygon({{3, 1, 1}, 8}, 4);
  CHECK(count_substr(svg_string(poly4), "<line ") == 6);

  const auto path = std::filesystem::temp_directory_path() / "cannonball_test.svg";
  emit_svg(poly4, path);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == svg_string(poly4));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(svg_string(PolygonInstance{}), PreconditionError);
}
