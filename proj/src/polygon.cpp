#include "cannonball/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "cannonball/errors.hpp"
#include "cannonball/representation.hpp"

namespace cannonball::polygon {

std::int64_t WeightFunction::sup_norm() const { return w.empty() ? 0 : *std::max_element(w.begin(), w.end()); }

i128 WeightFunction::weighted_square_sum() const {
  i128 sum = 0;
  for (std::size_t i = 1; i <= w.size(); ++i) sum += static_cast<i128>(w[i - 1]) * static_cast<i128>(i * i);
  return sum;
}

std::uint64_t WeightFunction::side_count() const {
  std::uint64_t n = 0;
  for (auto v : w) n += v > 0 ? static_cast<std::uint64_t>(v) : 0;
  return n;
}

WeightFunction weight_from_decomposition(const core::Decomposition& d) {
  WeightFunction out;
  out.s = static_cast<unsigned>(d.terms.size());
  const std::uint64_t k = d.terms.empty() ? 0 : *std::max_element(d.terms.begin(), d.terms.end());
  out.w.assign(k, 0);
  // w(i) = #{terms with index >= i}
  for (auto n : d.terms)
    for (std::uint64_t i = 1; i <= n; ++i) ++out.w[i - 1];
  return out;
}

WeightVerdict validate_weight(const WeightFunction& w, unsigned s, std::uint64_t Z) {
  WeightVerdict v;
  auto fail = [&](std::string msg) {
    v.valid = false;
    v.violations.push_back(std::move(msg));
  };
  if (std::any_of(w.w.begin(), w.w.end(), [](std::int64_t x) { return x < 0; })) fail("w(i) >= 0");
  // finite support holds by representation
  if (w.sup_norm() > static_cast<std::int64_t>(s)) fail("sup norm <= s");
  for (std::size_t i = 1; i < w.w.size(); ++i) {
    if (w.w[i] > w.w[i - 1]) {
      fail("w non-increasing (w(" + std::to_string(i) + ") < w(" + std::to_string(i + 1) + "))");
      break;
    }
  }
  if (static_cast<i128>(Z) * static_cast<i128>(Z) != w.weighted_square_sum()) fail("Z^2 = sum w(i) i^2");
  return v;
}

namespace {

// angle between rays v->a and v->b
double vertex_angle(Point v, Point a, Point b) {
  const double ax = a.x - v.x, ay = a.y - v.y, bx = b.x - v.x, by = b.y - v.y;
  return std::atan2(std::abs(ax * by - ay * bx), ax * bx + ay * by);
}

}  // namespace

PolygonInstance build_polygon(const WeightFunction& w, std::uint64_t Z, const std::vector<bool>& orientations) {
  if (w.w.empty() || w.side_count() == 0) throw PreconditionError("empty weight function");
  const auto verdict = validate_weight(w, std::max<unsigned>(w.s, static_cast<unsigned>(w.sup_norm())), Z);
  for (const auto& msg : verdict.violations) {
    if (msg.starts_with("Z^2")) throw InvalidClassError("Z^2 != sum w(i) i^2 for Z = " + std::to_string(Z));
    throw PreconditionError("not a cannonball weight function: " + msg);
  }

  PolygonInstance poly;
  for (std::size_t i = 1; i <= w.w.size(); ++i)
    for (std::int64_t c = 0; c < w.w[i - 1]; ++c) poly.sides.push_back(i);
  const std::size_t n = poly.sides.size();
  if (!orientations.empty() && orientations.size() != n)
    throw PreconditionError("expected " + std::to_string(n) + " orientation bits, got " +
                            std::to_string(orientations.size()));
  poly.orientations = orientations.empty() ? std::vector<bool>(n, false) : orientations;
  poly.sides.push_back(Z);

  poly.vertices.push_back({0, 0});
  poly.squared_radii.push_back(0);
  Point v{poly.orientations[0] ? -1.0 : 1.0, 0.0};
  poly.vertices.push_back(v);
  poly.squared_radii.push_back(1);
  for (std::size_t j = 1; j < n; ++j) {
    const double len = static_cast<double>(poly.sides[j]);
    const double r = std::hypot(v.x, v.y);
    // unit normal to the radius; bit 0 turns counter-clockwise
    const double sign = poly.orientations[j] ? -1.0 : 1.0;
    const double nx = -v.y / r * sign, ny = v.x / r * sign;
    v = {v.x + len * nx, v.y + len * ny};
    poly.vertices.push_back(v);
    poly.squared_radii.push_back(poly.squared_radii.back() + static_cast<u128>(poly.sides[j]) * poly.sides[j]);
  }
  poly.closure_residual = std::abs(std::hypot(v.x, v.y) - static_cast<double>(Z));

  const auto& P = poly.vertices;
  const std::size_t count = P.size();
  for (std::size_t k = 0; k < count; ++k) {
    const double angle = vertex_angle(P[k], P[(k + count - 1) % count], P[(k + 1) % count]);
    if (angle < kAngleTolerance || angle > std::numbers::pi - kAngleTolerance)
      throw DegenerateInstanceError(k, "degenerate vertex " + std::to_string(k) + " (angle " +
                                           std::to_string(angle) + " rad)");
  }
  return poly;
}

BigCount class_count(std::uint64_t Z, unsigned s) {
  if (Z == 0 || s == 0) throw PreconditionError("class_count needs Z >= 1 and s >= 1");
  return core::count_representations(Z * Z, s, core::CountMode::kMultiset);
}

std::string svg_string(const PolygonInstance& poly) {
  if (poly.vertices.size() < 2) throw PreconditionError("polygon has no sides");
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  for (const auto& p : poly.vertices) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double extent = std::max({max_x - min_x, max_y - min_y, 1.0});
  const double scale = 800.0 / extent;
  const double pad = 40.0;
  // SVG y grows downwards
  auto sx = [&](double x) { return pad + (x - min_x) * scale; };
  auto sy = [&](double y) { return pad + (max_y - y) * scale; };
  const double width = (max_x - min_x) * scale + 2 * pad, height = (max_y - min_y) * scale + 2 * pad;

  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
                "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"%.3f\" height=\"%.3f\" "
                "viewBox=\"0 0 %.3f %.3f\">\n",
                width, height, width, height);
  out += buf;
  out += "<g stroke=\"black\" stroke-width=\"1.5\" fill=\"none\">\n";
  const std::size_t count = poly.vertices.size();
  for (std::size_t k = 0; k < count; ++k) {
    const auto& a = poly.vertices[k];
    const auto& b = poly.vertices[(k + 1) % count];
    std::snprintf(buf, sizeof buf, "<line x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\"/>\n", sx(a.x), sy(a.y),
                  sx(b.x), sy(b.y));
    out += buf;
  }
  out += "</g>\n<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
  for (std::size_t k = 0; k < count; ++k) {
    const auto& a = poly.vertices[k];
    const auto& b = poly.vertices[(k + 1) % count];
    std::snprintf(buf, sizeof buf, "<text x=\"%.3f\" y=\"%.3f\">%llu</text>\n", sx((a.x + b.x) / 2),
                  sy((a.y + b.y) / 2), static_cast<unsigned long long>(poly.sides[k]));
    out += buf;
  }
  out += "</g>\n";
  std::snprintf(buf, sizeof buf, "<circle cx=\"%.3f\" cy=\"%.3f\" r=\"4\" fill=\"red\"/>\n", sx(0), sy(0));
  out += buf;
  std::snprintf(buf, sizeof buf, "<text x=\"%.3f\" y=\"%.3f\" font-family=\"sans-serif\" font-size=\"13\">O</text>\n",
                sx(0) + 6, sy(0) - 6);
  out += buf;
  out += "</svg>\n";
  return out;
}

void emit_svg(const PolygonInstance& poly, const std::filesystem::path& path) {
  const std::string text = svg_string(poly);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  f << text;
  if (!f) throw std::runtime_error("write to " + path.string() + " failed");
}

}  // namespace cannonball::polygon
