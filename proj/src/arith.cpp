#include "cannonball/arith.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "cannonball/errors.hpp"
#include "cannonball/modular.hpp"

namespace cannonball::arith {

namespace {

// e(k / q) for k = 0..q-1
std::vector<cplx> roots_of_unity(std::uint64_t q) {
  std::vector<cplx> out(q);
  for (std::uint64_t k = 0; k < q; ++k) {
    const long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(k) / q;
    out[k] = {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
  }
  return out;
}

// histogram of S_n mod q over 1 <= n <= span
std::vector<std::uint64_t> residue_histogram(std::uint64_t q, std::uint64_t span) {
  std::vector<std::uint64_t> hist(q, 0);
  std::uint64_t s = 0;
  for (std::uint64_t n = 1; n <= span; ++n) {
    s = static_cast<std::uint64_t>((static_cast<u128>(s) + static_cast<u128>(n % q) * (n % q)) % q);
    ++hist[s];
  }
  return hist;
}

cplx twisted_sum(const std::vector<std::uint64_t>& hist, const std::vector<cplx>& roots, std::uint64_t a) {
  const std::uint64_t q = hist.size();
  cplx sum = 0;
  const std::uint64_t ar = a % q;
  if (q <= (std::uint64_t{1} << 32)) {
    for (std::uint64_t r = 0; r < q; ++r)
      if (hist[r] != 0) sum += static_cast<double>(hist[r]) * roots[ar * r % q];
    return sum;
  }
  for (std::uint64_t r = 0; r < q; ++r)
    if (hist[r] != 0) sum += static_cast<double>(hist[r]) * roots[mulmod(ar, r, q)];
  return sum;
}

cplx ipow(cplx z, unsigned s) {
  cplx out = 1;
  for (; s != 0; s >>= 1U, z *= z)
    if (s & 1U) out *= z;
  return out;
}

std::uint64_t neg_mod(std::uint64_t v, std::uint64_t q) { return v % q == 0 ? 0 : q - v % q; }

// z_a = (V(q, a) / 6q)^s for every a coprime to q, indexed by a
std::vector<std::pair<std::uint64_t, cplx>> local_terms(std::uint64_t q, unsigned s, const std::vector<cplx>& roots) {
  const auto hist = residue_histogram(q, 6 * q);
  std::vector<std::pair<std::uint64_t, cplx>> out;
  for (std::uint64_t a = 1; a <= q; ++a) {
    if (std::gcd(a, q) != 1) continue;
    out.emplace_back(a, ipow(twisted_sum(hist, roots, a) / (6.0 * static_cast<double>(q)), s));
  }
  return out;
}

cplx combine(const std::vector<std::pair<std::uint64_t, cplx>>& terms, const std::vector<cplx>& roots, std::uint64_t q,
             std::uint64_t m, bool pair_conjugates) {
  cplx sum = 0;
  const std::uint64_t mr = m % q;
  for (const auto& [a, z] : terms) {
    const cplx term = z * roots[neg_mod(mulmod(a % q, mr, q), q)];
    if (!pair_conjugates || q <= 2) {
      sum += term;
    } else if (2 * a < q) {
      sum += 2.0 * term.real();
    }
  }
  return sum;
}

}  // namespace

cplx exp_sum_V_raw(std::uint64_t q, std::uint64_t a) {
  if (q == 0) throw PreconditionError("q must be >= 1");
  return twisted_sum(residue_histogram(q, 6 * q), roots_of_unity(q), a);
}

ExpSumResult exp_sum_V(std::uint64_t q, std::uint64_t a) {
  if (q == 0 || a == 0 || a > q) throw PreconditionError("exp_sum_V needs 1 <= a <= q");
  if (std::gcd(a, q) != 1) throw PreconditionError("exp_sum_V needs gcd(a, q) = 1");
  return {exp_sum_V_raw(q, a), q, a, 6 * q};
}

cplx V_of_q(std::uint64_t q, unsigned s, std::uint64_t m, bool pair_conjugates) {
  if (q == 0) throw PreconditionError("q must be >= 1");
  const auto roots = roots_of_unity(q);
  return combine(local_terms(q, s, roots), roots, q, m, pair_conjugates);
}

namespace {

double tail_bound(unsigned s, std::uint64_t Q) {
  const double e = 5.0 * s / 21.0 - 2.0;
  if (s < 9) return std::numeric_limits<double>::infinity();
  return std::pow(6.0, s) / (e * std::pow(static_cast<double>(Q), e));
}

}  // namespace

std::vector<SingularSeriesPartial> singular_series_partial(const std::vector<std::uint64_t>& ms, unsigned s,
                                                           std::uint64_t Q) {
  if (Q == 0) throw PreconditionError("Q must be >= 1");
  if (s < 2) throw PreconditionError("s must be >= 2");
  std::vector<SingularSeriesPartial> out;
  for (auto m : ms) out.push_back({m, s, Q, 0.0, tail_bound(s, Q)});
  // ascending q keeps the summation order fixed
  for (std::uint64_t q = 1; q <= Q; ++q) {
    const auto roots = roots_of_unity(q);
    const auto terms = local_terms(q, s, roots);
    for (auto& rec : out) rec.value += combine(terms, roots, q, rec.m, true);
  }
  return out;
}

SingularSeriesPartial singular_series_partial(std::uint64_t m, unsigned s, std::uint64_t Q) {
  return singular_series_partial(std::vector<std::uint64_t>{m}, s, Q).front();
}

BigCount congruence_count_M(std::uint64_t m, std::uint64_t q, unsigned s, std::uint64_t span) {
  if (q == 0 || s == 0) throw PreconditionError("congruence_count_M needs q >= 1 and s >= 1");
  if (q > (1U << 16)) throw ResourceError("congruence_count_M supports q <= 65536");
  u128 total = 1;
  for (unsigned i = 0; i < s; ++i) {
    if (mul_overflows(total, span)) throw ArithmeticRangeError("span^s exceeds 128 bits");
    total *= span;
  }
  const auto hist64 = residue_histogram(q, span);
  const std::vector<u128> hist(hist64.begin(), hist64.end());
  std::vector<u128> acc = hist;
  for (unsigned step = 1; step < s; ++step) {
    std::vector<u128> next(q, 0);
    for (std::uint64_t i = 0; i < q; ++i) {
      if (acc[i] == 0) continue;
      for (std::uint64_t j = 0; j < q; ++j) {
        const std::uint64_t k = i + j >= q ? i + j - q : i + j;
        next[k] += acc[i] * hist[j];
      }
    }
    acc.swap(next);
  }
  return acc[m % q];
}

unsigned default_level(std::uint64_t p) { return p >= 5 ? 3 : 4; }

LocalDensity local_density(std::uint64_t m, std::uint64_t p, unsigned s, unsigned k) {
  if (!core::is_prime(p)) throw PreconditionError("local_density needs a prime p");
  if (k == 0 || s == 0) throw PreconditionError("local_density needs k >= 1 and s >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > kLocalDensityModulusBudget)
      throw ResourceError("local density modulus " + std::to_string(p) + "^" + std::to_string(k) +
                          " exceeds the budget " + std::to_string(kLocalDensityModulusBudget));
  }
  LocalDensity out{p, k, s, m, 0.0};
  if (p >= 5) {
    // S_n mod p^k has period p^k, so G(t) / q = V(q, t) / 6q
    const auto roots = roots_of_unity(q);
    const auto hist = residue_histogram(q, q);
    const std::uint64_t mr = m % q;
    cplx sum = 0;
    for (std::uint64_t t = 0; t < q; ++t) {
      const cplx g = twisted_sum(hist, roots, t) / static_cast<double>(q);
      sum += ipow(g, s) * roots[neg_mod(mulmod(t, mr, q), q)];
    }
    out.value = sum.real();
  } else {
    cplx sum = 1;
    std::uint64_t pr = 1;
    for (unsigned r = 1; r <= k; ++r) {
      pr *= p;
      sum += V_of_q(pr, s, m);
    }
    out.value = sum.real();
  }
  return out;
}

double local_density_half_period(std::uint64_t m, std::uint64_t p, unsigned s, unsigned k) {
  if (!core::is_prime(p)) throw PreconditionError("local_density_half_period needs a prime p");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) q *= p;
  const BigCount count = congruence_count_M(m, q, s, q);
  return static_cast<double>(static_cast<long double>(count) * std::pow(static_cast<long double>(q), 1.0L - s));
}

EulerProduct euler_product_estimate(std::uint64_t m, unsigned s, std::uint64_t p_max, unsigned k) {
  EulerProduct out;
  for (std::uint64_t p = 2; p <= p_max; ++p) {
    if (!core::is_prime(p)) continue;
    unsigned level = k == 0 ? default_level(p) : k;
    auto fits = [&](unsigned lv) {
      std::uint64_t q = 1;
      for (unsigned i = 0; i < lv; ++i) {
        q *= p;
        if (q > kEulerLevelBudget) return false;
      }
      return true;
    };
    while (level > 1 && !fits(level)) --level;
    if (!fits(level)) throw ResourceError("prime " + std::to_string(p) + " exceeds the local density budget");
    out.factors.push_back(local_density(m, p, s, level));
    out.value *= out.factors.back().value;
  }
  return out;
}

std::string to_string(CurveCase c) {
  switch (c) {
    case CurveCase::kReducible: return "reducible";
    case CurveCase::kBoundary: return "boundary";
    default: return "elliptic";
  }
}

CurveCountRecord curve_count(std::uint64_t p, std::uint64_t B) {
  if (p < 5 || !core::is_prime(p)) throw PreconditionError("curve_count needs a prime p >= 5");
  CurveCountRecord rec;
  rec.p = p;
  rec.B = B % p;
  std::vector<std::uint64_t> hist(p, 0);
  ++hist[0];  // x = 0
  const auto rest = residue_histogram(p, p - 1);
  for (std::uint64_t v = 0; v < p; ++v) hist[v] += rest[v];
  // f(y) = -B - f(x)
  const std::uint64_t target = neg_mod(rec.B, p);
  for (std::uint64_t v = 0; v < p; ++v) {
    const std::uint64_t w = target >= v ? target - v : target + p - v;
    rec.count += hist[v] * hist[w];
  }
  rec.b0 = mulmod(12, rec.B, p);
  rec.shifted_b0 = (rec.b0 + p - 217 % p) % p;
  if (rec.b0 == 0) {
    rec.curve_case = CurveCase::kReducible;
  } else if ((mulmod(27, mulmod(rec.b0, rec.b0, p), p) + 4) % p == 0) {
    // Z^3 - 3Z - (2 + 27 B0^2) has a repeated root
    rec.curve_case = CurveCase::kBoundary;
  }
  for (std::uint64_t t = 0; t < p; ++t)
    if (mulmod(mulmod(t, t, p), t, p) == p - 1) ++rec.points_at_infinity;
  const double dev = static_cast<double>(rec.count) - static_cast<double>(p + 1);
  rec.lower_margin = dev + 2.0 * std::sqrt(static_cast<double>(p));
  rec.upper_margin = static_cast<double>(p) - dev;
  rec.corrected_lower_margin = rec.lower_margin + rec.points_at_infinity;
  return rec;
}

namespace {

// v >= -2 sqrt(p)
bool above_lower(std::int64_t v, std::uint64_t p) { return v >= 0 || static_cast<std::uint64_t>(v * v) <= 4 * p; }

}  // namespace

bool within_stated_bound(const CurveCountRecord& rec) {
  const std::int64_t dev = static_cast<std::int64_t>(rec.count) - static_cast<std::int64_t>(rec.p + 1);
  return above_lower(dev, rec.p) && dev <= static_cast<std::int64_t>(rec.p);
}

bool within_corrected_bound(const CurveCountRecord& rec) {
  const std::int64_t dev = static_cast<std::int64_t>(rec.count) - static_cast<std::int64_t>(rec.p + 1);
  return above_lower(dev + rec.points_at_infinity, rec.p) && dev <= static_cast<std::int64_t>(rec.p);
}

}  // namespace cannonball::arith
