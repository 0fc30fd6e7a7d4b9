#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace cannonball {

using u128 = unsigned __int128;
using i128 = __int128;

// Exact counts (representation counts, congruence counts) are u128.
using BigCount = u128;

std::string to_string(u128 v);
std::string to_string(i128 v);

// Parses a non-negative decimal integer; accepts scientific shorthand such as
// "2e28" or "1.3e7" when the value is an integer. Throws PreconditionError.
u128 parse_u128(std::string_view text);

u128 isqrt(u128 n);
u128 icbrt(u128 n);

// floor(log2) style helper for checked multiplication
bool mul_overflows(u128 a, u128 b);

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);

}  // namespace cannonball
