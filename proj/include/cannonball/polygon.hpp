#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "cannonball/decompose.hpp"
#include "cannonball/wide.hpp"

namespace cannonball::polygon {

/// w[i - 1] sides of length i; multiplicity bound s.
struct WeightFunction {
  std::vector<std::int64_t> w;
  unsigned s = 0;

  std::int64_t at(std::size_t i) const { return i >= 1 && i <= w.size() ? w[i - 1] : 0; }
  std::int64_t sup_norm() const;
  /// sum of w(i) i^2
  i128 weighted_square_sum() const;
  std::uint64_t side_count() const;  // sides other than the final one
};

WeightFunction weight_from_decomposition(const core::Decomposition& d);

struct WeightVerdict {
  bool valid = true;
  std::vector<std::string> violations;
};

WeightVerdict validate_weight(const WeightFunction& w, unsigned s, std::uint64_t Z);

struct Point {
  double x = 0, y = 0;
};

struct PolygonInstance {
  std::vector<std::uint64_t> sides;     // non-decreasing, final side Z last
  std::vector<bool> orientations;       // one per non-final side
  std::vector<Point> vertices;          // O first; the final side closes back to O
  std::vector<u128> squared_radii;      // |v_j|^2, j = 0..sides-1
  double closure_residual = 0;          // | |last vertex| - Z |
};

inline constexpr double kAngleTolerance = 1e-9;

/// Empty orientations means every bit is 0 (counter-clockwise turns).
PolygonInstance build_polygon(const WeightFunction& w, std::uint64_t Z, const std::vector<bool>& orientations = {});

/// Number of weight functions of multiplicity <= s with final side Z.
BigCount class_count(std::uint64_t Z, unsigned s);

std::string svg_string(const PolygonInstance& poly);
void emit_svg(const PolygonInstance& poly, const std::filesystem::path& path);

}  // namespace cannonball::polygon
