#include "psu3/fppoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "psu3/check.hpp"
#include "psu3/gfp_linalg.hpp"

namespace psu3 {
namespace fppoly {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly mul(const Poly& a, const Poly& b, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  trim(c);
  return c;
}

std::pair<Poly, Poly> divmod(Poly a, const Poly& f, unsigned p) {
  trim(a);
  PSU3_CHECK(!f.empty(), "division by the zero polynomial");
  const unsigned lead_inv = fp_inv(f.back(), p);
  Poly quot;
  while (a.size() >= f.size()) {
    // a is trimmed, so the leading coefficient is nonzero and each round
    // strictly lowers the degree
    const unsigned c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - f.size();
    if (quot.size() <= shift) quot.resize(shift + 1, 0);
    quot[shift] = c;
    for (std::size_t i = 0; i < f.size(); ++i)
      a[shift + i] = (a[shift + i] + p - c * f[i] % p) % p;
    trim(a);
  }
  trim(quot);
  return {quot, a};
}

Poly mod(Poly a, const Poly& f, unsigned p) {
  return divmod(std::move(a), f, p).second;
}

Poly gcd(Poly a, Poly b, unsigned p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    const unsigned s = fp_inv(a.back(), p);
    for (auto& c : a)
      c = static_cast<unsigned>(static_cast<unsigned long long>(c) * s % p);
  }
  return a;
}

Poly frobenius_power(const Poly& f, unsigned p, unsigned k) {
  Poly acc = mod(Poly{0, 1}, f, p);
  for (unsigned step = 0; step < k; ++step) {
    Poly r = {1};
    Poly base = acc;
    for (unsigned e = p; e; e >>= 1) {
      if (e & 1) r = mod(mul(r, base, p), f, p);
      base = mod(mul(base, base, p), f, p);
    }
    acc = r;
  }
  return acc;
}

bool is_irreducible(const Poly& f, unsigned p) {
  const unsigned d = static_cast<unsigned>(f.size() - 1);
  if (d == 0) return false;
  auto minus_x = [&](Poly g) {
    g.resize(std::max<std::size_t>(g.size(), 2), 0);
    g[1] = (g[1] + p - 1) % p;
    trim(g);
    return mod(std::move(g), f, p);  // matters when deg f = 1
  };
  if (!minus_x(frobenius_power(f, p, d)).empty()) return false;
  for (unsigned l : prime_divisors(d)) {
    Poly g = minus_x(frobenius_power(f, p, d / l));
    if (gcd(g, f, p).size() != 1) return false;
  }
  return true;
}

Poly smallest_irreducible(unsigned p, unsigned d) {
  unsigned long long total = 1;
  for (unsigned i = 0; i < d; ++i) total *= p;
  for (unsigned long long w = 0; w < total; ++w) {
    Poly f(d + 1, 0);
    f[d] = 1;
    unsigned long long t = w;
    for (unsigned i = 0; i < d; ++i) {
      f[i] = static_cast<unsigned>(t % p);
      t /= p;
    }
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial of requested degree");
}

std::vector<Poly> factor_squarefree(Poly f, unsigned p) {
  trim(f);
  PSU3_CHECK(!f.empty() && f.back() == 1, "factoring a monic polynomial");
  const Poly original = f;
  std::vector<Poly> factors;
  // one ascending scan per degree finds every factor of that degree: dividing
  // one factor out never destroys divisibility by the others (f squarefree)
  for (unsigned d = 1; f.size() > 1 && 2 * d <= f.size() - 1; ++d) {
    unsigned long long total = 1;
    for (unsigned i = 0; i < d; ++i) total *= p;
    for (unsigned long long w = 0; w < total && f.size() - 1 >= 2 * d; ++w) {
      Poly g(d + 1, 0);
      g[d] = 1;
      unsigned long long t = w;
      for (unsigned i = 0; i < d; ++i) {
        g[i] = static_cast<unsigned>(t % p);
        t /= p;
      }
      auto [quot, rem] = divmod(f, g, p);
      if (rem.empty()) {
        factors.push_back(g);
        f = std::move(quot);
      }
    }
  }
  if (f.size() > 1) factors.push_back(f);
  // verify: product reassembles the input, factors distinct
  Poly prod = {1};
  for (const auto& g : factors) prod = mul(prod, g, p);
  PSU3_CHECK(prod == original, "factors multiply back to the input");
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i + 1; j < factors.size(); ++j)
      PSU3_CHECK(factors[i] != factors[j], "squarefree input has distinct factors");
  return factors;
}

Poly ext_inverse(Poly u, const Poly& f, unsigned p) {
  // extended Euclid: maintain r0 = f, r1 = u, with s-coefficients tracking u
  Poly r0 = f, r1 = mod(std::move(u), f, p);
  Poly s0 = {}, s1 = {1};
  while (!r1.empty()) {
    auto [q, r2] = divmod(r0, r1, p);
    // s2 = s0 - q*s1
    Poly qs = mul(q, s1, p);
    Poly s2 = s0;
    s2.resize(std::max(s2.size(), qs.size()), 0);
    for (std::size_t i = 0; i < qs.size(); ++i)
      s2[i] = (s2[i] + p - qs[i]) % p;
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  PSU3_CHECK(r0.size() == 1, "inverse exists only for units modulo f");
  const unsigned s = fp_inv(r0[0], p);
  for (auto& c : s0)
    c = static_cast<unsigned>(static_cast<unsigned long long>(c) * s % p);
  return mod(std::move(s0), f, p);
}

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> ps;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      ps.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace fppoly
}  // namespace psu3
