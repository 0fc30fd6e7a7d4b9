#include "cannonball/range_verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <string>
#include <thread>

#include "cannonball/errors.hpp"
#include "cannonball/pyramidal.hpp"

namespace cannonball::core {

std::uint64_t default_table_bit_budget() {
  if (const char* env = std::getenv("CANNONBALL_MEM_BUDGET_BYTES")) {
    try {
      return std::stoull(env) * 8;
    } catch (const std::exception&) {
      throw PreconditionError("CANNONBALL_MEM_BUDGET_BYTES is not an integer");
    }
  }
  return std::uint64_t{1} << 31;
}

SumTable::SumTable(std::uint64_t limit, unsigned terms)
    : limit_(limit), terms_(terms), words_(limit / 64 + 1, 0) {
  if (terms > 3) throw PreconditionError("SumTable supports at most 3 terms");
  const auto values = pyramidal_values_upto(limit);
  set(0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::uint64_t a = values[i];
    if (terms >= 1) set(a);
    if (terms < 2) continue;
    for (std::size_t j = i; j < values.size() && a + values[j] <= limit; ++j) {
      const std::uint64_t ab = a + values[j];
      set(ab);
      if (terms < 3) continue;
      for (std::size_t l = j; l < values.size() && ab + values[l] <= limit; ++l) set(ab + values[l]);
    }
  }
}

namespace {

// Is r a sum of at most depth+3 values, the first `depth` of them each <= cap?
bool representable(std::uint64_t r, unsigned depth, std::size_t cap_index, const std::vector<std::uint64_t>& values,
                   const SumTable& table) {
  if (table.contains(r)) return true;
  if (depth == 0) return false;
  auto it = std::upper_bound(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(cap_index) + 1, r);
  for (std::ptrdiff_t idx = (it - values.begin()) - 1; idx >= 0; --idx) {
    const std::uint64_t p = values[static_cast<std::size_t>(idx)];
    // remaining terms are all <= p
    if (r - p > static_cast<std::uint64_t>(depth - 1 + 3) * p) break;
    if (representable(r - p, depth - 1, static_cast<std::size_t>(idx), values, table)) return true;
  }
  return false;
}

}  // namespace

RangeReport verify_range(std::uint64_t lo, std::uint64_t hi, unsigned k, const RangeOptions& options) {
  if (lo < 1 || lo > hi) throw PreconditionError("verify_range needs 1 <= lo <= hi");
  if (k == 0) throw PreconditionError("k must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t budget = options.table_bit_budget != 0 ? options.table_bit_budget : default_table_bit_budget();
  if (hi + 1 > budget)
    throw ResourceError("bit table for hi = " + std::to_string(hi) + " needs " + std::to_string(hi + 1) +
                        " bits, budget is " + std::to_string(budget) +
                        "; the table must cover [0, hi] for every chunk, so raise CANNONBALL_MEM_BUDGET_BYTES "
                        "or lower hi and run the range as several verify-range calls");

  const SumTable table(hi, std::min(k, 3U));
  const auto values = pyramidal_values_upto(hi);
  const unsigned depth = k > 3 ? k - 3 : 0;

  const unsigned threads = std::max(1U, options.threads);
  const std::uint64_t span = hi - lo + 1;
  std::vector<std::vector<std::uint64_t>> per_worker(threads);
  auto worker = [&](unsigned w) {
    const std::uint64_t begin = lo + span * w / threads;
    const std::uint64_t end = lo + span * (w + 1) / threads;  // exclusive
    for (std::uint64_t m = begin; m < end; ++m) {
      if (!representable(m, depth, values.empty() ? 0 : values.size() - 1, values, table))
        per_worker[w].push_back(m);
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    for (auto& t : pool) t.join();
  }

  RangeReport report{lo, hi, k, {}, 0.0};
  for (auto& part : per_worker) report.failures.insert(report.failures.end(), part.begin(), part.end());
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace cannonball::core
