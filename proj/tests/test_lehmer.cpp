#include <algorithm>
#include <random>
#include <set>

#include "cannonball/arith.hpp"
#include "cannonball/errors.hpp"
#include "cannonball/large.hpp"
#include "cannonball/lehmer.hpp"
#include "cannonball/modular.hpp"
#include "cannonball/pyramidal.hpp"
#include "doctest.h"

using namespace cannonball;
using namespace cannonball::lehmer;
using Points = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

namespace {

// every (x1, x2) in F_p^2 with f(x1) + f(x2) = L and the residues
Points brute_points(std::uint64_t p, std::uint64_t L, unsigned b0, unsigned b1) {
  Points out;
  for (std::uint64_t x1 = 0; x1 < p; ++x1)
    for (std::uint64_t x2 = 0; x2 < p; ++x2)
      if (x1 % 4 == b0 && x2 % 4 == b1 && (core::pyramidal_value(x1) + core::pyramidal_value(x2)) % p == L % p)
        out.emplace_back(x1, x2);
  return out;
}

}  // namespace

TEST_CASE("lehmer points") {
  LehmerQuery q{5, 0, 0, 0};
  auto pts = lehmer_points(q);
  std::sort(pts.begin(), pts.end());
  CHECK(pts == Points{{0, 0}, {0, 4}, {4, 0}, {4, 4}});
  q.g0 = q.g1 = 0;
  CHECK(lehmer_points(q).empty());
  LehmerQuery q11{5, 0, 1, 1};
  auto p11 = lehmer_points(q11);
  std::sort(p11.begin(), p11.end());
  CHECK(p11 == brute_points(5, 0, 1, 1));
  for (std::uint64_t p : {7ULL, 13ULL, 29ULL})
    for (std::uint64_t L = 0; L < p; L += 3)
      for (unsigned b0 = 0; b0 < 4; ++b0)
        for (unsigned b1 = 0; b1 < 4; ++b1) {
          auto got = lehmer_points({p, L, b0, b1});
          std::sort(got.begin(), got.end());
          REQUIRE(got == brute_points(p, L, b0, b1));
        }
  CHECK_THROWS_AS(lehmer_points({5, 0, 0, 0, 0.8, 0.5, 0.3, 0.1}), PreconditionError);
  CHECK_THROWS_AS(lehmer_points({9, 0, 0, 0}), PreconditionError);
}

TEST_CASE("lehmer distribution") {
  const auto full = lehmer_distribution_F({5, 0, 0, 0});
  CHECK(full.F == 4);
  const auto empty = lehmer_distribution_F({5, 0, 0, 0, 0.5, 0.5, 0, 0});
  CHECK(empty.F == 0);
  CHECK(empty.main_term == 0);

  // residue classes over the full box partition the curve
  for (std::uint64_t p = 5; p <= 199; ++p) {
    if (!core::is_prime(p)) continue;
    for (std::uint64_t L : std::vector<std::uint64_t>{0, 1, 2, p / 2, p - 1}) {
      std::uint64_t total = 0;
      for (unsigned b0 = 0; b0 < 4; ++b0)
        for (unsigned b1 = 0; b1 < 4; ++b1) total += lehmer_distribution_F({p, L, b0, b1}).F;
      REQUIRE(total == arith::curve_count(p, (p - L % p) % p).count);
    }
  }

  // monotone in each half-width; streaming agrees with the table
  const std::uint64_t p = 10007;
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 5; ++trial) {
    const std::uint64_t L = rng() % p;
    const unsigned b0 = rng() % 4, b1 = rng() % 4;
    std::uint64_t prev = 0;
    for (double g = 0; g <= 0.5; g += 0.05) {
      const LehmerQuery q{p, L, b0, b1, 0.5, 0.5, g, 0.3};
      const auto r = lehmer_distribution_F(q);
      CHECK(r.F >= prev);
      prev = r.F;
      CHECK(r.margin >= 0);
    }
    const LehmerQuery q{p, L, b0, b1, 0.4, 0.6, 0.35, 0.2};
    CHECK(lehmer_distribution_F(q, CountMethod::kStream).F == lehmer_distribution_F(q, CountMethod::kTable).F);
  }
}

TEST_CASE("curve pair search") {
  const std::uint64_t p = 101;
  const auto grid = brute_points(p, 0, 0, 0);
  std::set<std::pair<std::uint64_t, std::uint64_t>> admissible;
  for (auto [l, r] : grid)
    if (l > 0 && r > 0) admissible.insert({l, r});
  const auto pair = find_curve_pair(p, 0, 0, 0);
  CHECK(admissible.count(pair) == 1);
  CHECK(pair == *admissible.begin());
}

TEST_CASE("lehmer pairs for the eight-term construction") {
  CHECK_THROWS_AS(find_lehmer_pair(1000, 5), PreconditionError);
  std::mt19937_64 rng(17);
  int checked = 0;
  while (checked < 10) {
    const std::uint64_t p = core::prime_in_interval(1000 + rng() % 99000, 200000);
    const u128 p3 = static_cast<u128>(p) * p * p;
    const u128 m = p3 * 317 / 100 + rng() % 1000;
    const auto pr = find_lehmer_pair(m, p);
    CHECK(pair_violations(m, p, pr.ell, pr.r).empty());
    CHECK(pair_violations(m, p, pr.ell + 4, pr.r).size() > 0);
    ++checked;
  }
}
