#include "cannonball/circle.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <numeric>

#include "cannonball/arith.hpp"
#include "cannonball/errors.hpp"
#include "cannonball/pyramidal.hpp"
#include "cannonball/representation.hpp"

namespace cannonball::circle {

namespace {

constexpr long double kTwoPi = 2.0L * std::numbers::pi_v<long double>;

cplx unit(long double phase) {
  return {static_cast<double>(std::cos(kTwoPi * phase)), static_cast<double>(std::sin(kTwoPi * phase))};
}

}  // namespace

cplx f_exp_sum(long double alpha, std::uint64_t N) {
  if (N == 0) throw PreconditionError("N must be >= 1");
  const long double frac = alpha - std::floor(alpha);
  cplx sum = 0;
  u128 S = 0;
  for (std::uint64_t n = 1; n <= N; ++n) {
    S += static_cast<u128>(n) * n;
    // integer part of S first so the product stays small
    const long double phase = std::fmod(frac * static_cast<long double>(S), 1.0L);
    sum += unit(phase);
  }
  return sum;
}

cplx f_exp_sum_rational(std::uint64_t a, std::uint64_t q, std::uint64_t N) {
  if (N == 0 || q == 0) throw PreconditionError("need N >= 1 and q >= 1");
  cplx sum = 0;
  std::uint64_t r = 0;
  for (std::uint64_t n = 1; n <= N; ++n) {
    r = static_cast<std::uint64_t>((static_cast<u128>(r) + static_cast<u128>(n % q) * (n % q)) % q);
    sum += unit(static_cast<long double>(mulmod(a % q, r, q)) / q);
  }
  return sum;
}

namespace {

// (value, multiplicity) of S_a + S_b over ordered pairs a, b in [1, N]
std::vector<std::pair<std::uint64_t, std::uint64_t>> pair_sums(std::uint64_t N) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
  raw.reserve(N * (N + 1) / 2);
  std::vector<std::uint64_t> S(N + 1, 0);
  for (std::uint64_t n = 1; n <= N; ++n) S[n] = static_cast<std::uint64_t>(core::pyramidal_value(n));
  for (std::uint64_t a = 1; a <= N; ++a)
    for (std::uint64_t b = a; b <= N; ++b) raw.emplace_back(S[a] + S[b], a == b ? 1 : 2);
  std::sort(raw.begin(), raw.end());
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (const auto& [v, w] : raw) {
    if (!out.empty() && out.back().first == v)
      out.back().second += w;
    else
      out.emplace_back(v, w);
  }
  return out;
}

void check_mean_value_args(std::uint64_t N, unsigned j) {
  if (N < 3) throw PreconditionError("mean_value needs N >= 3");
  if (j < 1 || j > 3) throw PreconditionError("mean_value supports j in {1, 2, 3}");
}

}  // namespace

BigCount mean_value(std::uint64_t N, unsigned j) {
  check_mean_value_args(N, j);
  if (j == 1) return N;
  const auto r2 = pair_sums(N);
  if (j == 2) {
    u128 total = 0;
    for (const auto& [v, c] : r2) total += static_cast<u128>(c) * c;
    return total;
  }
  const double K = static_cast<double>(r2.size());
  if (K * K / 2 > kMeanValueWorkBudget)
    throw ResourceError("exact 8th moment at N = " + std::to_string(N) + " needs ~" +
                        std::to_string(K * K / 2) + " operations; use mean_value_upper_bound");
  // r4 = r2 * r2 on windows of the value axis; unordered pairs i <= j
  // small windows keep r4 in cache; cursor[i] tracks the first partner still ahead
  const std::uint64_t top = 2 * r2.back().first;
  constexpr std::uint64_t kWindow = std::uint64_t{1} << 16;
  std::vector<std::uint64_t> r4(kWindow);
  std::vector<std::size_t> cursor(r2.size());
  std::iota(cursor.begin(), cursor.end(), std::size_t{0});
  std::size_t first_live = 0;
  u128 total = 0;
  for (std::uint64_t w0 = 0; w0 <= top; w0 += kWindow) {
    const std::uint64_t w1 = w0 + kWindow;
    std::fill(r4.begin(), r4.end(), 0);
    for (std::size_t i = first_live; i < r2.size(); ++i) {
      const auto [u1, c1] = r2[i];
      if (2 * u1 >= w1) break;
      std::size_t k = cursor[i];
      for (; k < r2.size() && u1 + r2[k].first < w1; ++k)
        r4[u1 + r2[k].first - w0] += c1 * r2[k].second * (k == i ? 1 : 2);
      cursor[i] = k;
      if (k == r2.size() && i == first_live) ++first_live;
    }
    for (auto v : r4) total += static_cast<u128>(v) * v;
  }
  return total;
}

BigCount mean_value_upper_bound(std::uint64_t N, unsigned j) {
  check_mean_value_args(N, j);
  if (j < 3) return mean_value(N, j);
  // r4(v) <= sum r2^2, and sum_v r4(v) = N^4
  const u128 n2 = static_cast<u128>(N) * N;
  return n2 * n2 * mean_value(N, 2);
}

double mean_value_bound(std::uint64_t N, unsigned j) {
  const double n = static_cast<double>(N);
  return 152.0 * std::pow(n, std::pow(2.0, j) - j + 6.3966 / std::log(std::log(n)));
}

double weyl_bound(double X, std::uint64_t q, double eta) {
  const double qd = static_cast<double>(q);
  return 2 * std::pow(X, 0.75) + 8 * std::pow(X, 1 + 0.53305 / std::log(2 * std::log(X))) * std::pow(eta, 0.25) *
                                     std::pow(1 / qd + 1 / X + qd / (X * X * X), 0.25) * std::pow(std::log(qd), 0.25);
}

WeylMargin weyl_margin(long double alpha, std::uint64_t N, std::uint64_t a, std::uint64_t q, double eta) {
  if (N < 21) throw PreconditionError("weyl_margin needs N >= 21 (X >= e^3)");
  if (q == 0 || a == 0 || a > q || std::gcd(a, q) != 1) throw PreconditionError("need 1 <= a <= q, gcd(a, q) = 1");
  if (eta < 1) throw PreconditionError("eta must be >= 1");
  const long double dist = std::abs(alpha - static_cast<long double>(a) / q);
  if (dist > eta / (static_cast<long double>(q) * q) * (1 + 1e-12L))
    throw PreconditionError("|alpha - a/q| exceeds eta / q^2");
  WeylMargin out;
  // leading coefficient of alpha S_n is alpha / 3, near a / 3q
  const bool three_divides = a % 3 == 0;
  out.q_eff = three_divides ? q : 3 * q;
  out.eta_eff = three_divides ? std::max(1.0, eta / 3) : 3 * eta;
  out.abs_f = std::abs(f_exp_sum(alpha, N));
  out.bound = weyl_bound(static_cast<double>(N), out.q_eff, out.eta_eff);
  out.margin = out.bound - out.abs_f;
  return out;
}

double minor_arc_bound(std::uint64_t N, double delta) {
  const double n = static_cast<double>(N);
  return 16 * std::pow(n, 1 - delta / 4 + 0.53305 / std::log(std::log(n))) * std::pow(std::log(n), 0.25);
}

ArcParameters ArcParameters::make(std::uint64_t m, unsigned s, std::optional<double> delta) {
  if (m == 0) throw PreconditionError("m must be >= 1");
  ArcParameters out;
  out.m = m;
  const u128 t = static_cast<u128>(3) * m;
  u128 c = icbrt(t);
  if (c * c * c < t) ++c;
  out.N = static_cast<std::uint64_t>(c) + 1;
  out.delta = delta.value_or(21.0 / (63.0 + 5.0 * s));
  if (!(out.delta > 0 && out.delta < 0.2)) throw PreconditionError("delta must lie in (0, 1/5)");
  const double n = static_cast<double>(out.N);
  if (!(std::pow(n, 3 * out.delta - 3) < 0.5)) throw PreconditionError("need N^{3 delta - 3} < 1/2");
  out.P = std::pow(n, out.delta);
  return out;
}

double ArcParameters::width() const { return std::pow(static_cast<double>(N), delta - 3); }

std::vector<ArcParameters::Arc> ArcParameters::containing_arcs(double alpha) const {
  const double w = width();
  // reduce into U = (w, 1 + w]
  double x = alpha - std::floor(alpha);
  if (x <= w) x += 1;
  std::vector<Arc> out;
  const auto qmax = static_cast<std::uint64_t>(std::floor(P));
  for (std::uint64_t q = 1; q <= qmax; ++q) {
    const double aq = x * static_cast<double>(q);
    for (double cand : {std::floor(aq), std::ceil(aq)}) {
      if (cand < 1 || cand > static_cast<double>(q)) continue;
      const auto a = static_cast<std::uint64_t>(cand);
      if (std::gcd(a, q) != 1) continue;
      if (std::abs(x - cand / static_cast<double>(q)) <= w) {
        if (out.empty() || out.back().q != q || out.back().a != a) out.push_back({q, a});
      }
    }
  }
  return out;
}

std::optional<ArcParameters::Arc> ArcParameters::classify(double alpha) const {
  const auto arcs = containing_arcs(alpha);
  if (arcs.empty()) return std::nullopt;
  return arcs.front();
}

namespace {

// int_lo^hi e(c t^3) dt on panels spanning at most one phase cycle
cplx oscillatory_integral(double c, double lo, double hi) {
  using boost::math::quadrature::gauss_kronrod;
  cplx total = 0;
  double t = lo;
  const double rate = std::abs(3 * c);  // phase derivative bound / t^2
  while (t < hi) {
    const double reach = t + 1;
    double h = rate > 0 ? 1.0 / (rate * reach * reach) : hi - t;
    h = std::min({h, 1.0, hi - t});
    if (rate == 0) h = hi - t;
    const double a = t, b = t + h;
    double err_re = 0, err_im = 0, l1_re = 0, l1_im = 0;
    const double re = gauss_kronrod<double, 31>::integrate(
        [c](double u) { return std::cos(2 * std::numbers::pi * c * u * u * u); }, a, b, 8, 1e-12, &err_re, &l1_re);
    const double im = gauss_kronrod<double, 31>::integrate(
        [c](double u) { return std::sin(2 * std::numbers::pi * c * u * u * u); }, a, b, 8, 1e-12, &err_im, &l1_im);
    const double err = std::max(err_re, err_im);
    if (err > 1e-9) throw AccuracyError(err, "oscillatory quadrature missed 1e-9 on a panel (achieved " + std::to_string(err) + ")");
    total += cplx(re, im);
    t = b;
  }
  return total;
}

}  // namespace

cplx v_family(double theta, std::uint64_t N, VVariant variant) {
  if (N == 0) throw PreconditionError("N must be >= 1");
  const double n = static_cast<double>(N);
  const double N0 = n * n * n / 3;
  switch (variant) {
    case VVariant::kV:
      return oscillatory_integral(theta / 3, 1.0, n);
    case VVariant::kV2:
      return oscillatory_integral(theta, 0.0, std::cbrt(N0));
    default: {
      if (std::abs(theta) > 0.5) throw PreconditionError("v1 needs |theta| <= 1/2");
      const auto count = static_cast<std::uint64_t>(std::floor(N0));
      const long double th = theta;
      std::complex<long double> sum = 0;
      for (std::uint64_t k = 1; k <= count; ++k) {
        const long double phase = std::fmod(th * static_cast<long double>(k), 1.0L);
        const long double w = std::pow(static_cast<long double>(k), -2.0L / 3.0L);
        sum += w * std::complex<long double>(std::cos(kTwoPi * phase), std::sin(kTwoPi * phase));
      }
      return {static_cast<double>(sum.real() / 3), static_cast<double>(sum.imag() / 3)};
    }
  }
}

std::vector<SingularIntegralValue> J1_table(std::uint64_t m_max, unsigned s) {
  if (s < 1 || s > 12) throw PreconditionError("J1 needs 1 <= s <= 12");
  if (m_max > kJ1Budget) throw ResourceError("J1 convolution limited to m <= " + std::to_string(kJ1Budget));
  // every n_i <= m <= N^3/3, so the range cap on n_i never binds
  std::vector<long double> w(m_max + 1, 0), cur(m_max + 1, 0), next(m_max + 1);
  for (std::uint64_t k = 1; k <= m_max; ++k) w[k] = std::pow(static_cast<long double>(k), -2.0L / 3.0L);
  cur = w;
  for (unsigned step = 1; step < s; ++step) {
    std::fill(next.begin(), next.end(), 0.0L);
    for (std::uint64_t v = 0; v <= m_max; ++v) {
      long double acc = 0;
      for (std::uint64_t u = 1; u < v; ++u) acc += cur[u] * w[v - u];
      next[v] = acc;
    }
    cur.swap(next);
  }
  const double g = std::tgamma(4.0 / 3.0);
  const double scale = std::pow(3.0, -static_cast<double>(s));
  std::vector<SingularIntegralValue> out;
  for (std::uint64_t m = 1; m <= m_max; ++m) {
    const double md = static_cast<double>(m);
    out.push_back({m, s, static_cast<double>(cur[m]) * scale,
                   std::pow(g, s) / std::tgamma(s / 3.0) * std::pow(md, s / 3.0 - 1),
                   std::pow(10.0, static_cast<double>(s) - 2) * std::pow(md, (s - 1) / 3.0 - 1)});
  }
  return out;
}

SingularIntegralValue J1_exact(std::uint64_t m, unsigned s) {
  if (m == 0) throw PreconditionError("m must be >= 1");
  return J1_table(m, s).back();
}

double constant_A(unsigned s) {
  return std::pow(3.0, s / 3.0) * std::pow(std::tgamma(4.0 / 3.0), s) / std::tgamma(s / 3.0);
}

double constant_B() { return 4.0 / 125.0 * std::pow(std::tgamma(4.0 / 3.0), 9); }

std::vector<PredictionReport> prediction_batch(const std::vector<std::uint64_t>& ms, unsigned s, std::uint64_t Q) {
  if (ms.empty()) return {};
  if (std::find(ms.begin(), ms.end(), 0) != ms.end()) throw PreconditionError("m must be >= 1");
  const std::uint64_t top = *std::max_element(ms.begin(), ms.end());
  const auto ordered = core::ordered_count_table(top, s);
  const auto multiset = core::multiset_count_table(top, s);
  const auto series = arith::singular_series_partial(ms, s, Q);
  std::vector<PredictionReport> out;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    PredictionReport r;
    r.m = ms[i];
    r.s = s;
    r.Q = Q;
    r.exact_ordered = ordered[r.m];
    r.exact_multiset = multiset[r.m];
    r.singular_series = series[i].value.real();
    const double scale = r.singular_series * std::pow(static_cast<double>(r.m), s / 3.0 - 1);
    const double exact = static_cast<double>(r.exact_ordered);
    r.main_A = constant_A(s) * scale;
    r.ratio = exact / scale;
    r.ratio_over_A = exact / r.main_A;
    if (s == 9) {
      r.main_B = constant_B() * scale;
      r.ratio_over_B = exact / *r.main_B;
    }
    out.push_back(r);
  }
  return out;
}

PredictionReport prediction_report(std::uint64_t m, unsigned s, std::uint64_t Q) {
  return prediction_batch({m}, s, Q).front();
}

std::vector<std::uint64_t> log_spaced(std::uint64_t lo, std::uint64_t hi, unsigned points) {
  if (lo == 0 || lo > hi || points == 0) throw PreconditionError("log_spaced needs 1 <= lo <= hi and points >= 1");
  std::vector<std::uint64_t> out;
  const double a = std::log(static_cast<double>(lo)), b = std::log(static_cast<double>(hi));
  for (unsigned i = 0; i < points; ++i) {
    const double t = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
    const auto v = static_cast<std::uint64_t>(std::llround(std::exp(a + t * (b - a))));
    if (out.empty() || out.back() != v) out.push_back(std::clamp(v, lo, hi));
  }
  return out;
}

}  // namespace cannonball::circle
