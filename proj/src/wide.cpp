#include "cannonball/wide.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cannonball/errors.hpp"

namespace cannonball {

std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string to_string(i128 v) {
  if (v < 0) return "-" + to_string(static_cast<u128>(-(v + 1)) + 1);
  return to_string(static_cast<u128>(v));
}

namespace {

u128 checked_mul_add(u128 acc, unsigned mul, unsigned add) {
  constexpr u128 kMax = ~static_cast<u128>(0);
  if (acc > (kMax - add) / mul) throw ArithmeticRangeError("integer literal exceeds 128 bits");
  return acc * mul + add;
}

}  // namespace

u128 parse_u128(std::string_view text) {
  if (text.empty()) throw PreconditionError("empty integer");
  // mantissa digits, optional fraction, optional exponent
  u128 mantissa = 0;
  int frac_digits = 0;
  bool seen_dot = false;
  bool any_digit = false;
  std::size_t i = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c >= '0' && c <= '9') {
      mantissa = checked_mul_add(mantissa, 10, static_cast<unsigned>(c - '0'));
      any_digit = true;
      if (seen_dot) ++frac_digits;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  if (!any_digit) throw PreconditionError("not an integer: " + std::string(text));
  int exponent = 0;
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') throw PreconditionError("not an integer: " + std::string(text));
    ++i;
    if (i == text.size()) throw PreconditionError("not an integer: " + std::string(text));
    for (; i < text.size(); ++i) {
      const char c = text[i];
      if (c < '0' || c > '9') throw PreconditionError("not an integer: " + std::string(text));
      exponent = exponent * 10 + (c - '0');
      if (exponent > 60) throw ArithmeticRangeError("exponent too large: " + std::string(text));
    }
  }
  int shift = exponent - frac_digits;
  for (; shift > 0; --shift) mantissa = checked_mul_add(mantissa, 10, 0);
  for (; shift < 0; ++shift) {
    if (mantissa % 10 != 0) throw PreconditionError("not an integer: " + std::string(text));
    mantissa /= 10;
  }
  return mantissa;
}

u128 isqrt(u128 n) {
  if (n == 0) return 0;
  u128 x = static_cast<u128>(std::sqrt(static_cast<long double>(n)));
  while (x > 0 && (x > (~static_cast<u128>(0)) / x || x * x > n)) --x;
  while ((x + 1) <= (~static_cast<u128>(0)) / (x + 1) && (x + 1) * (x + 1) <= n) ++x;
  return x;
}

u128 icbrt(u128 n) {
  if (n == 0) return 0;
  u128 x = static_cast<u128>(std::cbrt(static_cast<long double>(n)));
  auto cube_le = [n](u128 y) {
    if (y == 0) return true;
    if (y > (~static_cast<u128>(0)) / y) return false;
    const u128 sq = y * y;
    if (sq > (~static_cast<u128>(0)) / y) return false;
    return sq * y <= n;
  };
  while (x > 0 && !cube_le(x)) --x;
  while (cube_le(x + 1)) ++x;
  return x;
}

bool mul_overflows(u128 a, u128 b) { return a != 0 && b > (~static_cast<u128>(0)) / a; }

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  i128 old_r = static_cast<i128>(a % m), r = static_cast<i128>(m);
  i128 old_s = 1, s = 0;
  while (r != 0) {
    const i128 q = old_r / r;
    i128 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw PreconditionError("value not invertible modulo m");
  i128 inv = old_s % static_cast<i128>(m);
  if (inv < 0) inv += m;
  return static_cast<std::uint64_t>(inv);
}

}  // namespace cannonball
