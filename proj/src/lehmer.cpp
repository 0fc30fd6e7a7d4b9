#include "cannonball/lehmer.hpp"

#include <cmath>
#include <tuple>

#include "cannonball/errors.hpp"
#include "cannonball/large.hpp"
#include "cannonball/modular.hpp"
#include "cannonball/pyramidal.hpp"

namespace cannonball::lehmer {

namespace {

constexpr double kSlack = 1e-12;

bool in_box(std::uint64_t x, std::uint64_t p, double t, double g) {
  const double v = static_cast<double>(x), pd = static_cast<double>(p);
  return v >= (t - g) * pd && v < (t + g) * pd;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= b ? a - b : a + (p - b); }

}  // namespace

void validate(const LehmerQuery& q) {
  if (q.p < 5 || !core::is_prime(q.p)) throw PreconditionError("Lehmer query needs a prime p >= 5");
  if (q.b0 > 3 || q.b1 > 3) throw PreconditionError("residues b0, b1 must lie in [0, 3]");
  for (auto [t, g] : {std::pair{q.t0, q.g0}, std::pair{q.t1, q.g1}}) {
    if (g < 0 || t - g < -kSlack || t + g > 1 + kSlack)
      throw PreconditionError("need 0 <= t_j - g_j and t_j + g_j <= 1");
  }
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> lehmer_points(const LehmerQuery& q) {
  validate(q);
  const std::uint64_t p = q.p, L = q.L % p;
  // bucket the admissible second coordinates by f value
  std::vector<std::int64_t> head(p, -1), next(p, -1);
  for (std::uint64_t x2 = p; x2-- > 0;) {
    if (x2 % 4 != q.b1 || !in_box(x2, p, q.t1, q.g1)) continue;
    const std::uint64_t v = core::pyramidal_mod(x2, p);
    next[x2] = head[v];
    head[v] = static_cast<std::int64_t>(x2);
  }
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t x1 = q.b0; x1 < p; x1 += 4) {
    if (!in_box(x1, p, q.t0, q.g0)) continue;
    const std::uint64_t want = sub_mod(L, core::pyramidal_mod(x1, p), p);
    for (std::int64_t x2 = head[want]; x2 >= 0; x2 = next[static_cast<std::uint64_t>(x2)])
      out.emplace_back(x1, static_cast<std::uint64_t>(x2));
  }
  return out;
}

LehmerResult lehmer_distribution_F(const LehmerQuery& q, CountMethod method) {
  validate(q);
  const std::uint64_t p = q.p, L = q.L % p;
  if (method == CountMethod::kAuto) method = p <= kTableLimit ? CountMethod::kTable : CountMethod::kStream;
  LehmerResult res;
  if (method == CountMethod::kTable) {
    std::vector<std::uint32_t> hist(p, 0);
    for (std::uint64_t x2 = q.b1; x2 < p; x2 += 4)
      if (in_box(x2, p, q.t1, q.g1)) ++hist[core::pyramidal_mod(x2, p)];
    for (std::uint64_t x1 = q.b0; x1 < p; x1 += 4)
      if (in_box(x1, p, q.t0, q.g0)) res.F += hist[sub_mod(L, core::pyramidal_mod(x1, p), p)];
  } else {
    // f(x2) = L - f(x1)  <=>  2 x2^3 + 3 x2^2 + x2 - 6 (L - f(x1)) = 0
    for (std::uint64_t x1 = q.b0; x1 < p; x1 += 4) {
      if (!in_box(x1, p, q.t0, q.g0)) continue;
      const std::uint64_t want = sub_mod(L, core::pyramidal_mod(x1, p), p);
      const std::uint64_t c0 = sub_mod(0, mulmod(6 % p, want, p), p);
      for (auto x2 : core::cubic_roots_mod_p({c0, 1, 3, 2}, p))
        if (x2 % 4 == q.b1 && in_box(x2, p, q.t1, q.g1)) ++res.F;
    }
  }
  const double pd = static_cast<double>(p), lg = std::log(pd);
  res.main_term = q.g0 * q.g1 * (pd + 1) / 4.0;
  res.bound = 6.0009 * std::sqrt(pd) * lg * lg;
  res.margin = res.bound - std::abs(static_cast<double>(res.F) - res.main_term);
  return res;
}

std::pair<std::uint64_t, std::uint64_t> find_curve_pair(std::uint64_t p, std::uint64_t L, unsigned ell0,
                                                        unsigned r0) {
  if (p < 5 || !core::is_prime(p)) throw PreconditionError("find_curve_pair needs a prime p >= 5");
  std::uint64_t scanned = 0;
  const auto cand = core::next_pair(p, static_cast<i128>(L % p), ell0, r0, 0, p, 0, false, UINT64_MAX, scanned);
  if (!cand) throw NotFoundError("no curve point with the requested residues");
  return {cand->ell, cand->r};
}

std::vector<std::string> pair_violations(u128 m, std::uint64_t p, std::uint64_t ell, std::uint64_t r) {
  std::vector<std::string> bad;
  const i128 L = core::curve_constant(m, p);
  const auto [ell0, r0] = core::residue_table(static_cast<unsigned>(((L % 4) + 4) % 4));
  if (ell % 4 != ell0 || r % 4 != r0) bad.emplace_back("residues mod 4");
  if (ell == 0 || ell >= p || r == 0 || r >= p) bad.emplace_back("ell, r in (0, p)");
  const i128 D = L - core::pyramidal_signed(ell) - core::pyramidal_signed(r);
  const i128 P = p;
  if (((D % P) + P) % P != 0) bad.emplace_back("f(ell) + f(r) = L (mod p)");
  if (D % (4 * P) != 0) bad.emplace_back("(4x + 4) | L - f(ell) - f(r)");
  const i128 x = P - 1;
  if (!(D > 0 && D < 6 * x * x * x)) bad.emplace_back("0 < L - f(ell) - f(r) < 6x^3");
  return bad;
}

LehmerPair find_lehmer_pair(u128 m, std::uint64_t p, std::uint64_t scan_budget) {
  if (p < 11 || !core::is_prime(p)) throw PreconditionError("find_lehmer_pair needs a prime p >= 11");
  LehmerPair out;
  out.L = core::curve_constant(m, p);
  if (out.L <= 0) throw NotFoundError("L = m - (2x^3+6x^2+7x+3) is not positive for this p");
  std::tie(out.ell0, out.r0) = core::residue_table(static_cast<unsigned>(out.L % 4));
  std::uint64_t scanned = 0;
  const auto cand = core::next_pair(p, out.L, out.ell0, out.r0, 0, p, 0, true, scan_budget, scanned);
  if (!cand) throw NotFoundError("no admissible (ell, r) within " + std::to_string(scan_budget) + " candidates");
  out.ell = cand->ell;
  out.r = cand->r;
  if (const auto bad = pair_violations(m, p, out.ell, out.r); !bad.empty())
    throw InternalError("Lehmer pair self-check failed: " + bad.front());
  return out;
}

}  // namespace cannonball::lehmer
