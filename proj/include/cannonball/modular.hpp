#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cannonball/wide.hpp"

namespace cannonball::core {

/// Deterministic Miller-Rabin for 64-bit n (witnesses 2..37).
bool is_prime(std::uint64_t n);

/// Least prime in [lo, hi]. Throws NotFoundError when there is none and
/// ArithmeticRangeError when hi does not fit 64 bits.
std::uint64_t prime_in_interval(u128 lo, u128 hi);

/// Roots in F_p of c[3] x^3 + c[2] x^2 + c[1] x + c[0], ascending.
std::vector<std::uint64_t> cubic_roots_mod_p(const std::array<std::uint64_t, 4>& coeffs, std::uint64_t p);

}  // namespace cannonball::core
