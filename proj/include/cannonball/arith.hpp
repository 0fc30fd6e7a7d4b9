#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "cannonball/wide.hpp"

namespace cannonball::arith {

using cplx = std::complex<double>;

struct ExpSumResult {
  cplx value;
  std::uint64_t q = 0;
  std::uint64_t a = 0;
  std::uint64_t n_terms = 0;
};

/// V(q, a) = sum_{1 <= n <= 6q} e(a S_n / q). Needs 1 <= a <= q, gcd(a, q) = 1.
ExpSumResult exp_sum_V(std::uint64_t q, std::uint64_t a);

/// Same sum without the coprimality and range checks (a is reduced mod q).
cplx exp_sum_V_raw(std::uint64_t q, std::uint64_t a);

/// V(q) = sum_{(a,q)=1} (V(q,a) / 6q)^s e(-a m / q). With pairing, the terms
/// for a and q - a are combined as twice the real part.
cplx V_of_q(std::uint64_t q, unsigned s, std::uint64_t m, bool pair_conjugates = true);

struct SingularSeriesPartial {
  std::uint64_t m = 0;
  unsigned s = 0;
  std::uint64_t Q = 0;
  cplx value;
  double tail_bound = 0;  // infinite when s < 9
};

SingularSeriesPartial singular_series_partial(std::uint64_t m, unsigned s, std::uint64_t Q);

/// Partial sums for several m sharing one set of V(q, a) evaluations.
std::vector<SingularSeriesPartial> singular_series_partial(const std::vector<std::uint64_t>& ms, unsigned s,
                                                           std::uint64_t Q);

/// #{(n_1..n_s) in [1, span]^s : S_{n_1} + ... + S_{n_s} = m (mod q)}, exact.
BigCount congruence_count_M(std::uint64_t m, std::uint64_t q, unsigned s, std::uint64_t span);

struct LocalDensity {
  std::uint64_t p = 0;
  unsigned k = 0;
  unsigned s = 0;
  std::uint64_t m = 0;
  double value = 0;
};

inline constexpr std::uint64_t kLocalDensityModulusBudget = 32768;  // admits 11^4
// euler_product_estimate lowers the level until p^k fits this
inline constexpr std::uint64_t kEulerLevelBudget = 8192;

/// Level-k approximant to T_m(p). For p >= 5 this is p^{k(1-s)} M_m(p^k);
/// for p in {2, 3} it is sum_{r <= k} V(p^r), which runs over full periods.
LocalDensity local_density(std::uint64_t m, std::uint64_t p, unsigned s, unsigned k);

/// p^{k(1-s)} #{n_i in [1, p^k] : sum S_{n_i} = m (mod p^k)} for any prime.
double local_density_half_period(std::uint64_t m, std::uint64_t p, unsigned s, unsigned k);

unsigned default_level(std::uint64_t p);

struct EulerProduct {
  double value = 1;
  std::vector<LocalDensity> factors;
};

/// prod_{p <= p_max} local_density(m, p, s, k). k = 0 picks the default level;
/// any level is lowered until p^k fits the modulus budget.
EulerProduct euler_product_estimate(std::uint64_t m, unsigned s, std::uint64_t p_max, unsigned k = 0);

enum class CurveCase { kReducible, kBoundary, kElliptic };
std::string to_string(CurveCase c);

struct CurveCountRecord {
  std::uint64_t p = 0;
  std::uint64_t B = 0;
  std::uint64_t count = 0;  // #{(x, y) in F_p^2 : f(x) + f(y) + B = 0}
  CurveCase curve_case = CurveCase::kElliptic;
  std::uint64_t b0 = 0;        // 12B mod p
  std::uint64_t shifted_b0 = 0;  // (12B - 217) mod p
  unsigned points_at_infinity = 0;  // #{t : t^3 = -1}
  double lower_margin = 0;  // (N - (p+1)) + 2 sqrt(p)
  double upper_margin = 0;  // p - (N - (p+1))
  double corrected_lower_margin = 0;  // lower_margin + points_at_infinity
};

CurveCountRecord curve_count(std::uint64_t p, std::uint64_t B);

/// -2 sqrt(p) <= N - (p+1) <= p, compared in integers.
bool within_stated_bound(const CurveCountRecord& rec);
/// Same with the lower end moved down by the points at infinity.
bool within_corrected_bound(const CurveCountRecord& rec);

}  // namespace cannonball::arith
