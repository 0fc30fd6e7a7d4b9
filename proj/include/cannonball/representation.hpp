#pragma once

#include <cstdint>
#include <vector>

#include "cannonball/wide.hpp"

namespace cannonball::core {

enum class CountMode { kOrdered, kMultiset };

/// Number of representations of m by pyramidal values S_n, n >= 1.
///   kOrdered:  s-tuples (n_1..n_s) with sum S_{n_i} = m
///   kMultiset: multisets of at most s values (order ignored)
BigCount count_representations(std::uint64_t m, unsigned s, CountMode mode);

/// Ordered counts C_s(v) for every 0 <= v <= limit. Uses 64-bit accumulators
/// and repeats in 128-bit arithmetic when any addition would overflow.
std::vector<BigCount> ordered_count_table(std::uint64_t limit, unsigned s);

/// Multiset counts (at most s parts) for every 0 <= v <= limit.
std::vector<BigCount> multiset_count_table(std::uint64_t limit, unsigned s);

/// Least k such that m is a sum of k pyramidal values.
unsigned min_terms(std::uint64_t m);

/// min_terms for every v in [0, limit] (entry 0 is 0).
std::vector<std::uint8_t> min_terms_table(std::uint64_t limit);

}  // namespace cannonball::core
