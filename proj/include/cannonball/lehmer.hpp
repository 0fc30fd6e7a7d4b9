#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cannonball/wide.hpp"

namespace cannonball::lehmer {

/// Points (x1, x2) of f(x1) + f(x2) = L over F_p with x_j = b_j (mod 4) and
/// x_j in the box [(t_j - g_j) p, (t_j + g_j) p).
struct LehmerQuery {
  std::uint64_t p = 0;
  std::uint64_t L = 0;
  unsigned b0 = 0, b1 = 0;
  double t0 = 0.5, t1 = 0.5;
  double g0 = 0.5, g1 = 0.5;
};

/// Throws PreconditionError unless p is a prime >= 5, b_j < 4 and
/// 0 <= t_j +- g_j <= 1.
void validate(const LehmerQuery& q);

std::vector<std::pair<std::uint64_t, std::uint64_t>> lehmer_points(const LehmerQuery& q);

enum class CountMethod { kAuto, kTable, kStream };

inline constexpr std::uint64_t kTableLimit = 10'000'000;

struct LehmerResult {
  std::uint64_t F = 0;
  double main_term = 0;  // g0 g1 (p + 1) / 4
  double bound = 0;      // 6.0009 sqrt(p) log^2 p
  double margin = 0;     // bound - |F - main_term|
};

LehmerResult lehmer_distribution_F(const LehmerQuery& q, CountMethod method = CountMethod::kAuto);

/// First (ell, r) in (0, p)^2, ascending in ell, with ell = ell0 and
/// r = r0 (mod 4) and f(ell) + f(r) = L (mod p). Throws NotFoundError.
std::pair<std::uint64_t, std::uint64_t> find_curve_pair(std::uint64_t p, std::uint64_t L, unsigned ell0, unsigned r0);

struct LehmerPair {
  std::uint64_t ell = 0, r = 0;
  unsigned ell0 = 0, r0 = 0;
  i128 L = 0;
};

/// A pair meeting every final condition of the eight-term construction for m
/// and p (congruences, residues, window, 4p | L - f(ell) - f(r) and
/// 0 < L - f(ell) - f(r) < 6x^3). Throws NotFoundError when the scan budget
/// runs out and InternalError when a returned pair fails its re-check.
LehmerPair find_lehmer_pair(u128 m, std::uint64_t p, std::uint64_t scan_budget = 10'000);

/// Names of the final conditions that (ell, r) violates for (m, p).
std::vector<std::string> pair_violations(u128 m, std::uint64_t p, std::uint64_t ell, std::uint64_t r);

}  // namespace cannonball::lehmer
