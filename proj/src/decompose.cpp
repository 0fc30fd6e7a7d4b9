#include "cannonball/decompose.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "cannonball/errors.hpp"
#include "cannonball/pyramidal.hpp"

namespace cannonball::core {

std::vector<u128> Decomposition::values() const {
  std::vector<u128> out;
  out.reserve(terms.size());
  for (auto n : terms) out.push_back(pyramidal_value(n));
  return out;
}

bool is_valid(const Decomposition& d) {
  if (d.terms.size() > d.budget) return false;
  u128 sum = 0;
  for (auto n : d.terms) {
    if (n == 0) return false;
    sum += pyramidal_value(n);
  }
  return sum == d.target;
}

namespace {

// Nonincreasing indices, each <= cap, summing to r with at most `left` terms.
bool search(std::uint64_t r, unsigned left, std::uint64_t cap, std::vector<std::uint64_t>& out) {
  if (r == 0) return true;
  if (left == 0) return false;
  const auto top = pyramidal_floor(r);
  std::uint64_t n = std::min<std::uint64_t>(cap, top->index);
  if (left == 1) {
    if (static_cast<u128>(r) != pyramidal_value(n)) return false;
    out.push_back(n);
    return true;
  }
  if (left == 2) {
    // two pointers over S_i + S_j = r, i >= j
    std::uint64_t j = 1;
    for (std::uint64_t i = n; i >= j; --i) {
      const u128 si = pyramidal_value(i);
      if (si > r) continue;
      while (si + pyramidal_value(j) < r) ++j;
      if (j > i) break;
      if (si + pyramidal_value(j) == r) {
        out.push_back(i);
        out.push_back(j);
        return true;
      }
    }
    return false;
  }
  for (; n >= 1; --n) {
    const auto v = static_cast<std::uint64_t>(pyramidal_value(n));
    // the remaining terms are all <= v
    if (r - v > static_cast<std::uint64_t>(left - 1) * v) break;
    out.push_back(n);
    if (search(r - v, left - 1, n, out)) return true;
    out.pop_back();
  }
  return false;
}

Decomposition finish(std::uint64_t m, unsigned budget, std::vector<std::uint64_t> terms) {
  Decomposition d{m, budget, std::move(terms)};
  std::sort(d.terms.begin(), d.terms.end());
  if (!is_valid(d)) throw InternalError("decomposition of " + std::to_string(m) + " failed its re-check");
  return d;
}

}  // namespace

Decomposition decompose_minimal(std::uint64_t m, unsigned max_terms) {
  if (m == 0) return finish(0, max_terms, {});
  for (unsigned k = 1; k <= max_terms; ++k) {
    std::vector<std::uint64_t> terms;
    if (search(m, k, UINT64_MAX, terms)) return finish(m, max_terms, std::move(terms));
  }
  throw SearchExhaustedError(std::to_string(m) + " needs more than " + std::to_string(max_terms) + " terms");
}

Decomposition decompose8(std::uint64_t m, const GreedyOptions& options) {
  if (m == 0) throw PreconditionError("decompose8 needs m >= 1");
  if (is_pyramidal(m)) return finish(m, 8, {pyramidal_floor(m)->index});

  std::vector<std::uint64_t> terms;
  std::uint64_t cur = m;
  for (int step = 0; step < 4 && cur > 0; ++step) {
    const auto top = *pyramidal_floor(cur);
    std::uint64_t n = top.index;
    const double c = std::min(options.c, static_cast<double>(cur) / 10.0);
    if (n > 1 && static_cast<double>(cur - static_cast<std::uint64_t>(top.value)) < c) --n;
    terms.push_back(n);
    cur -= static_cast<std::uint64_t>(pyramidal_value(n));
  }
  if (cur == 0) return finish(m, 8, std::move(terms));
  std::vector<std::uint64_t> tail;
  if (search(cur, 8 - static_cast<unsigned>(terms.size()), UINT64_MAX, tail)) {
    terms.insert(terms.end(), tail.begin(), tail.end());
    return finish(m, 8, std::move(terms));
  }
  // Greedy closing failed: back off by up to three indices at each of the
  // four greedy steps before giving up on the greedy shape.
  terms.clear();
  auto backtrack = [&](auto&& self, std::uint64_t r, int step) -> bool {
    if (step == 4 || r == 0) return search(r, 8 - static_cast<unsigned>(terms.size()), UINT64_MAX, terms);
    const std::uint64_t top = pyramidal_floor(r)->index;
    for (std::uint64_t back = 0; back < 4 && back < top; ++back) {
      const std::uint64_t n = top - back;
      const std::size_t mark = terms.size();
      terms.push_back(n);
      if (self(self, r - static_cast<std::uint64_t>(pyramidal_value(n)), step + 1)) return true;
      terms.resize(mark);
    }
    return false;
  };
  if (backtrack(backtrack, m, 0)) return finish(m, 8, std::move(terms));
  if (m > options.fallback_limit)
    throw ResourceError("greedy decomposition of " + std::to_string(m) +
                        " failed and the exhaustive fallback is limited to m <= " +
                        std::to_string(options.fallback_limit));
  return decompose_minimal(m, 8);
}

namespace {

std::optional<u128> triangular_root(u128 v) {
  // v = T_c  <=>  8v + 1 = (2c + 1)^2
  const u128 s = isqrt(8 * v + 1);
  if (s * s != 8 * v + 1) return std::nullopt;
  return (s - 1) / 2;
}

}  // namespace

std::array<u128, 3> three_triangular(u128 M, u128 bound, std::uint64_t work_budget) {
  if (bound == 0) throw NotFoundError("three_triangular: bound must be positive");
  u128 a = (isqrt(8 * M + 1) - 1) / 2;  // largest T_a <= M
  if (a >= bound) a = bound - 1;
  std::uint64_t work = 0;
  for (;; --a) {
    const u128 ta = triangular(a);
    const u128 rest = M - ta;
    if (rest > 2 * ta) break;  // b, c <= a would be impossible from here on
    u128 b = std::min(a, (isqrt(8 * rest + 1) - 1) / 2);
    for (; 2 * triangular(b) >= rest; --b) {
      if (++work > work_budget)
        throw NotFoundError("three_triangular: work budget exhausted for M = " + to_string(M));
      if (const auto c = triangular_root(rest - triangular(b)); c && *c <= b) return {a, b, *c};
      if (b == 0) break;
    }
    if (a == 0) break;
  }
  throw NotFoundError("no T_a + T_b + T_c = " + to_string(M) + " with a < " + to_string(bound));
}

}  // namespace cannonball::core
