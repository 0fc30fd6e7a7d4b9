#include "cannonball/modular.hpp"

#include <algorithm>
#include <string>

#include "cannonball/errors.hpp"

namespace cannonball::core {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t w : kWitnesses) {
    if (n % w == 0) return n == w;
  }
  std::uint64_t d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t w : kWitnesses) {
    std::uint64_t x = powmod(w, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t prime_in_interval(u128 lo, u128 hi) {
  if (lo > hi) throw PreconditionError("prime_in_interval needs lo <= hi");
  if (hi > UINT64_MAX) throw ArithmeticRangeError("prime_in_interval supports 64-bit bounds only");
  for (std::uint64_t n = static_cast<std::uint64_t>(lo);; ++n) {
    if (is_prime(n)) return n;
    if (n == static_cast<std::uint64_t>(hi)) break;
  }
  throw NotFoundError("no prime in [" + to_string(lo) + ", " + to_string(hi) + "]");
}

namespace {

// Dense polynomials over F_p, coefficient i at index i, no trailing zeros.
using Poly = std::vector<std::uint64_t>;

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= b ? a - b : a + (p - b); }
std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= p - b ? a - (p - b) : a + b; }

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
  const std::uint64_t lead_inv = invmod(m.back(), p);
  while (a.size() >= m.size()) {
    const std::uint64_t factor = mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      a[shift + i] = sub_mod(a[shift + i], mulmod(factor, m[i], p), p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = add_mod(out[i + j], mulmod(a[i], b[j], p), p);
  trim(out);
  return poly_mod(std::move(out), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return poly_mod(std::move(result), m, p);
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint64_t inv = invmod(a.back(), p);
    for (auto& c : a) c = mulmod(c, inv, p);
  }
  return a;
}

Poly poly_sub(Poly a, const Poly& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = sub_mod(a[i], b[i], p);
  trim(a);
  return a;
}

// g is monic, squarefree and splits into distinct linear factors.
void split_roots(const Poly& g, std::uint64_t p, std::vector<std::uint64_t>& roots) {
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    roots.push_back(sub_mod(0, g[0], p));
    return;
  }
  for (std::uint64_t shift = 0; shift < p; ++shift) {
    const Poly h = poly_powmod(Poly{shift % p, 1}, (p - 1) / 2, g, p);
    const Poly d = poly_gcd(g, poly_sub(h, Poly{1}, p), p);
    if (d.size() > 1 && d.size() < g.size()) {
      split_roots(d, p, roots);
      // g / d by long division
      Poly q(g.size() - d.size() + 1, 0);
      Poly rem = g;
      for (std::size_t i = q.size(); i-- > 0;) {
        q[i] = rem[i + d.size() - 1];
        for (std::size_t j = 0; j < d.size(); ++j) rem[i + j] = sub_mod(rem[i + j], mulmod(q[i], d[j], p), p);
      }
      split_roots(q, p, roots);
      return;
    }
  }
  throw InternalError("root splitting did not converge");
}

}  // namespace

std::vector<std::uint64_t> cubic_roots_mod_p(const std::array<std::uint64_t, 4>& coeffs, std::uint64_t p) {
  if (p < 5 || !is_prime(p)) throw PreconditionError("cubic_roots_mod_p needs a prime p >= 5, got " + std::to_string(p));
  Poly f(coeffs.begin(), coeffs.end());
  for (auto& c : f) c %= p;
  if (f[3] == 0) throw PreconditionError("leading coefficient vanishes mod p");
  const std::uint64_t inv = invmod(f[3], p);
  for (auto& c : f) c = mulmod(c, inv, p);

  const Poly xp = poly_powmod(Poly{0, 1}, p, f, p);
  const Poly g = poly_gcd(f, poly_sub(xp, Poly{0, 1}, p), p);
  std::vector<std::uint64_t> roots;
  split_roots(g, p, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace cannonball::core
