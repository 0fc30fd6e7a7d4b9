#include "cannonball/pyramidal.hpp"

#include <cmath>

#include "cannonball/errors.hpp"

namespace cannonball::core {

u128 pyramidal_value(std::uint64_t n) {
  // n(n+1)(2n+1)/6 with the division distributed so intermediates stay exact
  u128 a = n, b = static_cast<u128>(n) + 1, c = 2 * static_cast<u128>(n) + 1;
  if (a % 2 == 0) a /= 2; else b /= 2;
  if (a % 3 == 0) a /= 3; else if (b % 3 == 0) b /= 3; else c /= 3;
  if (mul_overflows(a, b) || mul_overflows(a * b, c))
    throw ArithmeticRangeError("S_n exceeds 128 bits for n = " + std::to_string(n));
  return a * b * c;
}

std::optional<Pyramidal> pyramidal_floor(u128 m) {
  if (m == 0) return std::nullopt;
  // S_n ~ (n + 1/2)^3 / 3
  const long double seed = std::cbrt(3.0L * static_cast<long double>(m)) - 0.5L;
  std::uint64_t n = seed < 1 ? 1 : static_cast<std::uint64_t>(seed);
  while (n > 1 && pyramidal_value(n) > m) --n;
  while (pyramidal_value(n + 1) <= m) ++n;
  return Pyramidal{n, pyramidal_value(n)};
}

bool is_pyramidal(u128 m) {
  const auto fl = pyramidal_floor(m);
  return fl && fl->value == m;
}

std::vector<std::uint64_t> pyramidal_values_upto(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 1;; ++n) {
    const u128 v = pyramidal_value(n);
    if (v > limit) break;
    out.push_back(static_cast<std::uint64_t>(v));
  }
  return out;
}

i128 pyramidal_signed(i128 x) { return (2 * x * x * x + 3 * x * x + x) / 6; }

u128 triangular(u128 n) { return n % 2 == 0 ? (n / 2) * (n + 1) : n * ((n + 1) / 2); }

std::uint64_t pyramidal_mod(std::uint64_t x, std::uint64_t m) {
  if (m == 1) return 0;
  // reduce x(x+1)(2x+1)/6 modulo m via modulus 6m
  const u128 big = static_cast<u128>(m) * 6;
  const u128 xr = x % big;
  const u128 prod = xr * ((xr + 1) % big) % big * ((2 * xr + 1) % big) % big;
  return static_cast<std::uint64_t>((prod / 6) % m);
}

}  // namespace cannonball::core
