#pragma once

#include <cstdint>
#include <vector>

namespace cannonball::core {

/// Outcome of checking that every m in [lo, hi] is a sum of at most k
/// pyramidal values.
struct RangeReport {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  unsigned k = 0;
  std::vector<std::uint64_t> failures;  // ascending
  double seconds = 0.0;
};

struct RangeOptions {
  unsigned threads = 1;
  // Bit-table budget in bits. 0 means "use the default" (2^31 bits, or
  // CANNONBALL_MEM_BUDGET_BYTES * 8 when that variable is set).
  std::uint64_t table_bit_budget = 0;
};

std::uint64_t default_table_bit_budget();

RangeReport verify_range(std::uint64_t lo, std::uint64_t hi, unsigned k, const RangeOptions& options = {});

/// Packed bitset of the sums of at most `terms` pyramidal values in [0, limit].
class SumTable {
 public:
  SumTable(std::uint64_t limit, unsigned terms);

  bool contains(std::uint64_t v) const { return v <= limit_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0; }
  std::uint64_t limit() const { return limit_; }
  unsigned terms() const { return terms_; }

 private:
  void set(std::uint64_t v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }

  std::uint64_t limit_;
  unsigned terms_;
  std::vector<std::uint64_t> words_;
};

}  // namespace cannonball::core
