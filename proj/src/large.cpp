#include "cannonball/large.hpp"

#include <cmath>
#include <tuple>

#include "cannonball/decompose.hpp"
#include "cannonball/errors.hpp"
#include "cannonball/modular.hpp"
#include "cannonball/pyramidal.hpp"

namespace cannonball::core {

namespace {

constexpr u128 kScale = 1'000'000;

u128 scaled(double v) { return static_cast<u128>(std::llround(v * 1e6)); }

// (t - eps) p^3 <= m <= (t + eps) p^3, with t +- eps rounded to 1e-6
bool in_window(u128 m, std::uint64_t p, double t, double eps) {
  const u128 p3 = static_cast<u128>(p) * p * p;
  return scaled(t - eps) * p3 <= kScale * m && kScale * m <= scaled(t + eps) * p3;
}

i128 six_term_base(std::uint64_t x) {
  const i128 X = x;
  return 2 * X * X * X + 6 * X * X + 7 * X + 3;
}

std::uint64_t f_mod(std::uint64_t v, std::uint64_t p) { return pyramidal_mod(v, p); }

std::uint64_t mod_signed(i128 v, std::uint64_t p) {
  i128 r = v % static_cast<i128>(p);
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

}  // namespace

std::pair<unsigned, unsigned> residue_table(unsigned L_mod4) {
  switch (L_mod4 & 3U) {
    case 0: return {0, 0};
    case 1: return {0, 2};
    case 2: return {2, 2};
    default: return {0, 1};
  }
}

i128 curve_constant(u128 m, std::uint64_t p) {
  if (p == 0) throw PreconditionError("p must be positive");
  return static_cast<i128>(m) - six_term_base(p - 1);
}

std::optional<PairCandidate> next_pair(std::uint64_t p, i128 L, unsigned ell0, unsigned r0, std::uint64_t lo,
                                       std::uint64_t hi, std::uint64_t ell_start, bool exact, std::uint64_t budget,
                                       std::uint64_t& scanned) {
  const std::uint64_t x = p - 1;
  const i128 cap = 6 * static_cast<i128>(x) * x * x;
  std::uint64_t ell = std::max(ell_start, lo + 1);
  ell += (ell0 + 4 - ell % 4) % 4;
  for (; ell < hi; ell += 4) {
    if (scanned >= budget) return std::nullopt;
    ++scanned;
    // f(r) = target (mod p)  <=>  2r^3 + 3r^2 + r - 6 target = 0
    const std::uint64_t target = mod_signed(L - static_cast<i128>(f_mod(ell, p)), p);
    const std::uint64_t c0 = (p - mulmod(6 % p, target, p)) % p;
    for (std::uint64_t r : cubic_roots_mod_p({c0, 1, 3, 2}, p)) {
      // the root is a residue; every lift r + kp inside the window qualifies
      for (std::uint64_t rr = r; rr < hi; rr += p) {
        if (rr <= lo || rr % 4 != r0) continue;
        if (exact) {
          const i128 D = L - pyramidal_signed(ell) - pyramidal_signed(rr);
          if (D <= 0 || D >= cap || D % (4 * static_cast<i128>(p)) != 0) continue;
        }
        return PairCandidate{ell, rr};
      }
    }
  }
  return std::nullopt;
}

LargeDecompositionTrace decompose_large(u128 m, const LargeOptions& options) {
  LargeDecompositionTrace tr;
  tr.m = m;
  tr.t = options.t;
  tr.delta = options.delta;
  tr.alpha = options.alpha;
  tr.epsilon = options.epsilon;

  // widen epsilon in steps of 0.25 while no prime fits, keeping t - eps > 0
  std::optional<std::uint64_t> prime;
  for (double eps = options.epsilon; options.t - eps > 0; eps += 0.25) {
    const long double lo_real = std::cbrt(static_cast<long double>(m) / (options.t + eps));
    const long double hi_real = std::cbrt(static_cast<long double>(m) / (options.t - eps));
    u128 lo = static_cast<u128>(std::max(1.0L, std::floor(lo_real) - 1));
    u128 hi = static_cast<u128>(std::ceil(hi_real) + 1);
    if (hi > UINT64_MAX) throw ArithmeticRangeError("m too large for 64-bit primes");
    while (lo <= hi && !in_window(m, static_cast<std::uint64_t>(lo), options.t, eps)) ++lo;
    while (hi >= lo && hi > 0 && !in_window(m, static_cast<std::uint64_t>(hi), options.t, eps)) --hi;
    if (lo <= hi) {
      try {
        prime = prime_in_interval(lo, hi);
        tr.epsilon = eps;
        tr.epsilon_widened = eps != options.epsilon;
        break;
      } catch (const NotFoundError&) {
      }
    }
  }
  if (!prime) throw SearchExhaustedError("no prime p with (t - eps) p^3 <= m <= (t + eps) p^3; m is too small");
  if (*prime < 11) throw SearchExhaustedError("m is below the range of the construction (p = " + std::to_string(*prime) + ")");

  tr.p = *prime;
  tr.x = tr.p - 1;
  tr.L = curve_constant(m, tr.p);
  if (tr.L <= 0) throw SearchExhaustedError("L = m - (2x^3+6x^2+7x+3) is not positive");
  std::tie(tr.ell0, tr.r0) = residue_table(static_cast<unsigned>(tr.L % 4));

  const double pd = static_cast<double>(tr.p);
  const auto lo = static_cast<std::uint64_t>(std::max(0.0, std::floor((options.alpha - options.delta) * pd)));
  const auto hi = static_cast<std::uint64_t>(std::ceil((options.alpha + options.delta) * pd));

  std::uint64_t start = 0;
  while (true) {
    const auto cand =
        next_pair(tr.p, tr.L, tr.ell0, tr.r0, lo, hi, start, true, options.scan_budget, tr.candidates_scanned);
    if (!cand) throw SearchExhaustedError("no admissible (ell, r) within " + std::to_string(options.scan_budget) +
                                          " candidates for m = " + to_string(m));
    start = cand->ell + 1;
    const i128 D = tr.L - pyramidal_signed(cand->ell) - pyramidal_signed(cand->r);
    const u128 M = static_cast<u128>(D / (4 * static_cast<i128>(tr.p)));
    std::array<u128, 3> abc;
    try {
      abc = three_triangular(M, tr.x);
    } catch (const NotFoundError&) {
      continue;
    }
    tr.ell = cand->ell;
    tr.r = cand->r;
    tr.M = M;
    tr.a = abc[0];
    tr.b = abc[1];
    tr.c = abc[2];
    break;
  }
  const u128 x = tr.x;
  tr.terms = {x + tr.a + 1, x - tr.a, x + tr.b + 1, x - tr.b, x + tr.c + 1, x - tr.c, tr.ell, tr.r};
  if (const auto bad = verify_trace(tr); !bad.empty())
    throw InternalError("large decomposition self-check failed: " + bad.front());
  return tr;
}

std::vector<std::string> verify_trace(const LargeDecompositionTrace& tr) {
  std::vector<std::string> bad;
  const std::uint64_t p = tr.p;
  if (!is_prime(p)) bad.emplace_back("p is prime");
  if (tr.x + 1 != p) bad.emplace_back("x = p - 1");
  if (!in_window(tr.m, p, tr.t, tr.epsilon)) bad.emplace_back("(t - eps) p^3 <= m <= (t + eps) p^3");
  if (tr.L != curve_constant(tr.m, p)) bad.emplace_back("L = m - (2x^3+6x^2+7x+3)");
  if (tr.ell % 4 != tr.ell0 || tr.r % 4 != tr.r0) bad.emplace_back("ell = ell0, r = r0 (mod 4)");
  const double pd = static_cast<double>(p);
  const double lo = (tr.alpha - tr.delta) * pd, hi = (tr.alpha + tr.delta) * pd;
  for (double v : {static_cast<double>(tr.ell), static_cast<double>(tr.r)})
    if (!(v > lo && v < hi)) bad.emplace_back("ell, r in ((alpha - delta) p, (alpha + delta) p)");
  const i128 fl = pyramidal_signed(tr.ell), fr = pyramidal_signed(tr.r);
  if (mod_signed(fl + fr - tr.L, p) != 0) bad.emplace_back("f(ell) + f(r) = L (mod p)");
  const i128 D = tr.L - fl - fr;
  if (D % (4 * static_cast<i128>(p)) != 0) bad.emplace_back("(4x + 4) | L - f(ell) - f(r)");
  const i128 X = tr.x;
  if (!(D > 0 && D < 6 * X * X * X)) bad.emplace_back("0 < L - f(ell) - f(r) < 6x^3");
  if (D != static_cast<i128>(tr.M) * 4 * static_cast<i128>(p)) bad.emplace_back("M = (L - f(ell) - f(r)) / 4p");
  if (triangular(tr.a) + triangular(tr.b) + triangular(tr.c) != tr.M) bad.emplace_back("T_a + T_b + T_c = M");
  if (!(tr.a < tr.x && tr.b < tr.x && tr.c < tr.x)) bad.emplace_back("a, b, c < x");
  u128 sum = 0;
  bool positive = true;
  for (u128 n : tr.terms) {
    if (n == 0) positive = false;
    sum += static_cast<u128>(pyramidal_signed(static_cast<i128>(n)));
  }
  if (!positive) bad.emplace_back("all indices >= 1");
  if (sum != tr.m) bad.emplace_back("eight pyramidal values sum to m");
  return bad;
}

}  // namespace cannonball::core
