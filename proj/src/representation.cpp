#include "cannonball/representation.hpp"

#include <algorithm>
#include <limits>

#include "cannonball/errors.hpp"
#include "cannonball/pyramidal.hpp"

namespace cannonball::core {
namespace {

constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 28;

void check_limit(std::uint64_t limit) {
  if (limit >= kDenseLimit)
    throw ResourceError("count table over [0, " + std::to_string(limit) + "] exceeds the dense-table budget");
}

template <typename Acc>
bool ordered_table_impl(std::uint64_t limit, unsigned s, const std::vector<std::uint64_t>& values,
                        std::vector<Acc>& cur) {
  cur.assign(limit + 1, 0);
  for (auto v : values) cur[v] = 1;
  std::vector<Acc> next(limit + 1);
  for (unsigned step = 1; step < s; ++step) {
    std::fill(next.begin(), next.end(), 0);
    for (auto p : values) {
      const Acc* src = cur.data();
      Acc* dst = next.data() + p;
      const std::uint64_t len = limit + 1 - p;
      for (std::uint64_t i = 0; i < len; ++i) {
        if constexpr (std::is_same_v<Acc, std::uint64_t>) {
          if (__builtin_add_overflow(dst[i], src[i], &dst[i])) return false;
        } else {
          const Acc before = dst[i];
          dst[i] += src[i];
          if (dst[i] < before) throw ArithmeticRangeError("representation count exceeds 128 bits");
        }
      }
    }
    cur.swap(next);
  }
  return true;
}

}  // namespace

std::vector<BigCount> ordered_count_table(std::uint64_t limit, unsigned s) {
  if (s == 0) throw PreconditionError("s must be >= 1");
  check_limit(limit);
  const auto values = pyramidal_values_upto(limit);
  std::vector<std::uint64_t> narrow;
  if (ordered_table_impl(limit, s, values, narrow)) return {narrow.begin(), narrow.end()};
  std::vector<u128> wide;
  ordered_table_impl(limit, s, values, wide);
  return wide;
}

std::vector<BigCount> multiset_count_table(std::uint64_t limit, unsigned s) {
  if (s == 0) throw PreconditionError("s must be >= 1");
  check_limit(limit);
  const auto values = pyramidal_values_upto(limit);
  // layer j holds multisets with exactly j parts drawn from the values seen so far
  std::vector<std::vector<u128>> layer(s + 1, std::vector<u128>(limit + 1, 0));
  layer[0][0] = 1;
  for (auto p : values) {
    for (unsigned j = 1; j <= s; ++j) {
      const auto& prev = layer[j - 1];
      auto& cur = layer[j];
      for (std::uint64_t v = p; v <= limit; ++v) cur[v] += prev[v - p];
    }
  }
  std::vector<BigCount> total(limit + 1, 0);
  for (unsigned j = 0; j <= s; ++j)
    for (std::uint64_t v = 0; v <= limit; ++v) total[v] += layer[j][v];
  return total;
}

BigCount count_representations(std::uint64_t m, unsigned s, CountMode mode) {
  if (m == 0) throw PreconditionError("m must be >= 1");
  if (s == 0) throw PreconditionError("s must be >= 1");
  const auto table = mode == CountMode::kOrdered ? ordered_count_table(m, s) : multiset_count_table(m, s);
  return table[m];
}

std::vector<std::uint8_t> min_terms_table(std::uint64_t limit) {
  check_limit(limit);
  const auto values = pyramidal_values_upto(limit);
  constexpr std::uint8_t kUnset = std::numeric_limits<std::uint8_t>::max();
  std::vector<std::uint8_t> dist(limit + 1, kUnset);
  dist[0] = 0;
  // breadth-first layering: layer k+1 = layer k + one pyramidal value
  std::vector<std::uint64_t> frontier{0};
  std::uint8_t k = 0;
  std::uint64_t remaining = limit;
  while (!frontier.empty() && remaining != 0) {
    ++k;
    std::vector<std::uint64_t> next;
    for (auto base : frontier) {
      for (auto p : values) {
        const std::uint64_t v = base + p;
        if (v > limit) break;
        if (dist[v] == kUnset) {
          dist[v] = k;
          next.push_back(v);
          --remaining;
        }
      }
    }
    frontier.swap(next);
  }
  return dist;
}

unsigned min_terms(std::uint64_t m) {
  if (m == 0) throw PreconditionError("m must be >= 1");
  return min_terms_table(m)[m];
}

}  // namespace cannonball::core
