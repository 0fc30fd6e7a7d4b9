#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cannonball/wide.hpp"

namespace cannonball::core {

struct LargeOptions {
  double t = 3.17;
  double epsilon = 0.5;
  // the (ell, r) window is ((alpha - delta) p, (alpha + delta) p)
  double delta = 0.5;
  double alpha = 0.5;
  std::uint64_t scan_budget = 10'000;
};

struct LargeDecompositionTrace {
  u128 m = 0;
  std::uint64_t p = 0;
  std::uint64_t x = 0;
  i128 L = 0;
  std::uint64_t ell = 0, r = 0;
  unsigned ell0 = 0, r0 = 0;
  u128 a = 0, b = 0, c = 0;
  u128 M = 0;  // (L - f(ell) - f(r)) / (4p)
  double t = 0, epsilon = 0, delta = 0, alpha = 0;
  bool epsilon_widened = false;
  std::uint64_t candidates_scanned = 0;
  std::array<u128, 8> terms{};  // pyramidal indices, in construction order
};

/// Residue pair (ell0, r0) for L mod 4.
std::pair<unsigned, unsigned> residue_table(unsigned L_mod4);

/// L = m - (2x^3 + 6x^2 + 7x + 3) with x = p - 1.
i128 curve_constant(u128 m, std::uint64_t p);

struct PairCandidate {
  std::uint64_t ell = 0, r = 0;
};

/// Next (ell, r) with ell >= ell_start, ell = ell0, r = r0 (mod 4), both in
/// the open window (lo, hi), and f(ell) + f(r) = L (mod p). When `exact` is
/// set, also requires 4p | L - f(ell) - f(r) and 0 < L - f(ell) - f(r) < 6x^3.
/// `scanned` counts ell values tried; the search stops after `budget` of them.
std::optional<PairCandidate> next_pair(std::uint64_t p, i128 L, unsigned ell0, unsigned r0, std::uint64_t lo,
                                       std::uint64_t hi, std::uint64_t ell_start, bool exact, std::uint64_t budget,
                                       std::uint64_t& scanned);

/// Eight-term decomposition of a large m through the prime-modulus
/// construction. Throws SearchExhaustedError when m is too small for the
/// construction or the scan budget runs out.
LargeDecompositionTrace decompose_large(u128 m, const LargeOptions& options = {});

/// Every trace invariant that fails, by name. Empty means the trace is sound.
std::vector<std::string> verify_trace(const LargeDecompositionTrace& trace);

}  // namespace cannonball::core
