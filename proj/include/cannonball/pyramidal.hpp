#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cannonball/wide.hpp"

namespace cannonball::core {

/// A square pyramidal number S_n = 1^2 + ... + n^2 together with its index.
struct Pyramidal {
  std::uint64_t index = 0;
  u128 value = 0;

  friend bool operator==(const Pyramidal&, const Pyramidal&) = default;
};

/// S_n = (2n^3 + 3n^2 + n) / 6. Throws ArithmeticRangeError when the result
/// does not fit 128 bits.
u128 pyramidal_value(std::uint64_t n);

/// Largest n with S_n <= m (cube-root seed plus local correction).
/// Returns nullopt for m == 0.
std::optional<Pyramidal> pyramidal_floor(u128 m);

bool is_pyramidal(u128 m);

/// All S_n with 1 <= n and S_n <= limit, ascending.
std::vector<std::uint64_t> pyramidal_values_upto(std::uint64_t limit);

// The polynomial forms used across the project. All take a real-valued or
// residue argument and agree with S_x on integers.
//   f(x) = (2x^3+3x^2+x)/6      (= S_x, also written g(x))
//   gt(x) = 2x^3+3x^2+x         (= 6 S_x)
//   T(x) = x(x+1)/2             (triangular)
i128 pyramidal_signed(i128 x);
u128 triangular(u128 n);

/// S_x mod m for any x >= 0, without forming S_x.
std::uint64_t pyramidal_mod(std::uint64_t x, std::uint64_t m);

}  // namespace cannonball::core
