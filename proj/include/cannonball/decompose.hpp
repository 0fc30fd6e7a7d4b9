#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cannonball/wide.hpp"

namespace cannonball::core {

/// Multiset of pyramidal indices (sorted ascending) whose values sum to target.
struct Decomposition {
  u128 target = 0;
  unsigned budget = 0;
  std::vector<std::uint64_t> terms;

  std::vector<u128> values() const;
};

/// Exact check: every index >= 1, at most budget terms, values sum to target.
bool is_valid(const Decomposition& d);

struct GreedyOptions {
  double c = 1.3e7;
  // the exhaustive fallback is only attempted up to this m
  std::uint64_t fallback_limit = 100'000'000;
};

/// At most eight pyramidal values summing to m.
Decomposition decompose8(std::uint64_t m, const GreedyOptions& options = {});

/// Fewest pyramidal values summing to m, at most max_terms of them.
/// Throws SearchExhaustedError if max_terms is not enough.
Decomposition decompose_minimal(std::uint64_t m, unsigned max_terms);

/// a >= b >= c >= 0 with T_a + T_b + T_c = M and a < bound. Throws
/// NotFoundError when the bound (or the work budget) rules out every split.
std::array<u128, 3> three_triangular(u128 M, u128 bound, std::uint64_t work_budget = 50'000'000);

}  // namespace cannonball::core
