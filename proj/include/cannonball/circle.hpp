#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cannonball/wide.hpp"

namespace cannonball::circle {

using cplx = std::complex<double>;

/// f_N(alpha) = sum_{n <= N} e(alpha S_n).
cplx f_exp_sum(long double alpha, std::uint64_t N);
/// f_N(a/q) with exact residue phases.
cplx f_exp_sum_rational(std::uint64_t a, std::uint64_t q, std::uint64_t N);

inline constexpr double kMeanValueWorkBudget = 2e10;

/// Exact integral of |f_N|^{2^j} over [0, 1], j in {1, 2, 3}: the number of
/// solutions of S_{x_1} + ... + S_{x_h} = S_{y_1} + ... + S_{y_h}, h = 2^{j-1},
/// with every variable in [1, N]. Throws ResourceError past the work budget.
BigCount mean_value(std::uint64_t N, unsigned j);

/// Integer upper bound: exact for j <= 2; for j = 3 the Cauchy-Schwarz
/// bound N^4 * mean_value(N, 2).
BigCount mean_value_upper_bound(std::uint64_t N, unsigned j);

/// 152 N^{2^j - j + 6.3966 / log log N}
double mean_value_bound(std::uint64_t N, unsigned j);

struct WeylMargin {
  double abs_f = 0;
  double bound = 0;
  double margin = 0;
  std::uint64_t q_eff = 0;  // denominator of a / 3q in lowest terms
  double eta_eff = 0;
};

/// |f_N(alpha)| against the cubic Weyl bound applied to the leading
/// coefficient alpha / 3 of alpha S_n.
WeylMargin weyl_margin(long double alpha, std::uint64_t N, std::uint64_t a, std::uint64_t q, double eta);

/// 2X^{3/4} + 8X^{1 + 0.53305/log(2 log X)} eta^{1/4} (1/q + 1/X + q/X^3)^{1/4} (log q)^{1/4}
double weyl_bound(double X, std::uint64_t q, double eta);

/// 16 N^{1 - delta/4 + 0.53305/log log N} (log N)^{1/4}
double minor_arc_bound(std::uint64_t N, double delta);

struct ArcParameters {
  std::uint64_t m = 0;
  std::uint64_t N = 0;
  double delta = 0;
  double P = 0;

  /// N = ceil((3m)^{1/3}) + 1; delta defaults to 21 / (63 + 5s).
  static ArcParameters make(std::uint64_t m, unsigned s, std::optional<double> delta = std::nullopt);

  double width() const;  // N^{delta - 3}

  struct Arc {
    std::uint64_t q = 0, a = 0;
  };
  /// Every major arc M(q, a) containing alpha (reduced into U). At most one
  /// when the arcs are disjoint.
  std::vector<Arc> containing_arcs(double alpha) const;
  std::optional<Arc> classify(double alpha) const;
};

enum class VVariant { kV, kV1, kV2 };

/// v(theta) = int_1^N e(t^3 theta / 3) dt, v1 = (1/3) sum_{n <= N^3/3} n^{-2/3} e(theta n),
/// v2 = int_0^{N0^{1/3}} e(theta t^3) dt with N0 = N^3/3.
cplx v_family(double theta, std::uint64_t N, VVariant variant);

struct SingularIntegralValue {
  std::uint64_t m = 0;
  unsigned s = 0;
  double J1 = 0;
  double main_term = 0;  // Gamma(4/3)^s / Gamma(s/3) m^{s/3 - 1}
  double bound = 0;      // 10^{s-2} m^{(s-1)/3 - 1}
};

inline constexpr std::uint64_t kJ1Budget = 10'000;

SingularIntegralValue J1_exact(std::uint64_t m, unsigned s);
/// J1 for every m' in [1, m_max] from one convolution pass.
std::vector<SingularIntegralValue> J1_table(std::uint64_t m_max, unsigned s);

double constant_A(unsigned s);  // 3^{s/3} Gamma(4/3)^s / Gamma(s/3)
double constant_B();            // (4/125) Gamma(4/3)^9

struct PredictionReport {
  std::uint64_t m = 0;
  unsigned s = 0;
  std::uint64_t Q = 0;
  BigCount exact_ordered = 0;
  BigCount exact_multiset = 0;
  double singular_series = 0;
  double main_A = 0;
  std::optional<double> main_B;  // s = 9 only
  double ratio = 0;              // exact / (S(m, Q) m^{s/3 - 1})
  double ratio_over_A = 0;
  std::optional<double> ratio_over_B;
};

PredictionReport prediction_report(std::uint64_t m, unsigned s, std::uint64_t Q);
std::vector<PredictionReport> prediction_batch(const std::vector<std::uint64_t>& ms, unsigned s, std::uint64_t Q);

/// `points` integers log-spaced over [lo, hi], rounded, duplicates removed.
std::vector<std::uint64_t> log_spaced(std::uint64_t lo, std::uint64_t hi, unsigned points);

}  // namespace cannonball::circle
