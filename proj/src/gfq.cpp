#include "psu3/gfq.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "psu3/check.hpp"
#include "psu3/fppoly.hpp"

namespace psu3 {
namespace {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// --- coefficient-vector integers (base-p digit strings) ---------------------

using fppoly::Poly;

std::uint32_t vrep_mul(std::uint32_t u, std::uint32_t v, const Poly& f,
                       unsigned p) {
  // unpack to polynomials, multiply mod f, repack
  Poly a, b;
  for (std::uint32_t t = u; t; t /= p) a.push_back(t % p);
  for (std::uint32_t t = v; t; t /= p) b.push_back(t % p);
  Poly c = fppoly::mod(fppoly::mul(a, b, p), f, p);
  std::uint32_t w = 0;
  for (std::size_t i = c.size(); i-- > 0;) w = w * p + c[i];
  return w;
}

std::uint32_t vrep_add(std::uint32_t u, std::uint32_t v, unsigned p,
                       unsigned digits) {
  std::uint32_t w = 0, mul = 1;
  for (unsigned i = 0; i < digits; ++i) {
    w += ((u % p) + (v % p)) % p * mul;
    u /= p;
    v /= p;
    mul *= p;
  }
  return w;
}

std::uint32_t vrep_pow(std::uint32_t base, unsigned long long e, const Poly& f,
                       unsigned p) {
  std::uint32_t r = 1;
  while (e) {
    if (e & 1) r = vrep_mul(r, base, f, p);
    base = vrep_mul(base, base, f, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

FieldCtx make_field_ctx(unsigned p, unsigned r) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (r == 0) throw std::invalid_argument("r must be positive");
  unsigned long long q2ll = 1;
  for (unsigned i = 0; i < 2 * r; ++i) {
    q2ll *= p;
    if (q2ll > (1ull << 16))
      throw std::invalid_argument("field too large: q^2 must be <= 2^16");
  }

  FieldCtx F;
  F.p = p;
  F.r = r;
  F.q2 = static_cast<unsigned>(q2ll);
  F.q = 1;
  for (unsigned i = 0; i < r; ++i) F.q *= p;
  F.n = F.q2 - 1;
  F.gamma = std::gcd(3u, F.q + 1);
  F.modulus = fppoly::smallest_irreducible(p, 2 * r);

  // generator: smallest coefficient-vector integer of full multiplicative
  // order; order tested via the prime divisors of n
  const auto divs = fppoly::prime_divisors(F.n);
  for (std::uint32_t cand = 2; cand < F.q2; ++cand) {
    bool full = true;
    for (unsigned l : divs)
      if (vrep_pow(cand, F.n / l, F.modulus, p) == 1) {
        full = false;
        break;
      }
    if (full && vrep_pow(cand, F.n, F.modulus, p) == 1) {
      F.generator_vrep = cand;
      break;
    }
  }
  PSU3_CHECK(F.generator_vrep != 0, "multiplicative generator exists");

  F.exp_vrep_.resize(F.n);
  F.log_code_.assign(F.q2, 0);
  std::uint32_t cur = 1;
  for (unsigned k = 0; k < F.n; ++k) {
    F.exp_vrep_[k] = cur;
    PSU3_CHECK(F.log_code_[cur] == 0, "generator powers are distinct");
    F.log_code_[cur] = k + 1;
    cur = vrep_mul(cur, F.generator_vrep, F.modulus, p);
  }
  PSU3_CHECK(cur == 1, "generator order is q^2 - 1");

  F.zech_.resize(F.n);
  for (unsigned k = 0; k < F.n; ++k) {
    std::uint32_t s = vrep_add(F.exp_vrep_[k], 1, p, 2 * r);
    F.zech_[k] = (s == 0) ? -1 : static_cast<std::int64_t>(F.log_code_[s] - 1);
  }

  F.prime_embed_.resize(p);
  F.prime_embed_[0] = 0;
  for (unsigned c = 1; c < p; ++c) F.prime_embed_[c] = F.log_code_[c];

  return F;
}

unsigned FieldCtx::log(Fq2 x) const {
  if (x == 0) throw std::invalid_argument("log of zero");
  return x - 1;
}

Fq2 FieldCtx::add(Fq2 x, Fq2 y) const {
  if (x == 0) return y;
  if (y == 0) return x;
  // g^i + g^j = g^i (1 + g^(j-i))
  unsigned i = x - 1, j = y - 1;
  unsigned d = (j + n - i) % n;
  std::int64_t z = zech_[d];
  if (z < 0) return 0;
  return from_log(i + static_cast<unsigned long long>(z));
}

Fq2 FieldCtx::neg(Fq2 x) const {
  if (x == 0 || p == 2) return x;
  return from_log(static_cast<unsigned long long>(x - 1) + n / 2);
}

Fq2 FieldCtx::inv(Fq2 x) const {
  if (x == 0) throw std::invalid_argument("inverse of zero");
  return from_log(n - (x - 1u) % n);
}

Fq2 FieldCtx::pow(Fq2 x, long long e) const {
  if (x == 0) {
    if (e <= 0) throw std::invalid_argument("0 to a non-positive power");
    return 0;
  }
  long long k = static_cast<long long>(x - 1) * (e % n) % n;
  if (k < 0) k += n;
  return from_log(static_cast<unsigned long long>(k));
}

std::string FieldCtx::modulus_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = modulus.size(); i-- > 0;) {
    if (modulus[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || modulus[i] != 1) os << modulus[i];
    if (i >= 1) {
      if (modulus[i] != 1) os << "*";
      os << "x";
      if (i >= 2) os << "^" << i;
    }
  }
  return os.str();
}

Fq2 bar(const FieldCtx& ctx, Fq2 x) { return ctx.bar(x); }

SpecialElems special_elements(const FieldCtx& ctx) {
  SpecialElems s{0, 0};
  bool have_omega = false, have_tau = false;
  const Fq2 minus_one = ctx.neg(ctx.one());
  for (unsigned k = 0; k < ctx.n && !(have_omega && have_tau); ++k) {
    Fq2 x = ctx.from_log(k);
    if (!have_omega && ctx.add(x, ctx.bar(x)) == 0) {
      s.omega = x;
      have_omega = true;
    }
    if (!have_tau && ctx.add(x, ctx.bar(x)) == minus_one) {
      s.tau = x;
      have_tau = true;
    }
  }
  PSU3_CHECK(have_omega, "element with x + bar(x) = 0 exists");
  PSU3_CHECK(have_tau, "element with x + bar(x) = -1 exists");
  return s;
}

bool subset_member(const FieldCtx& ctx, Fq2 x, Subset which) {
  if (x == 0) throw std::invalid_argument("subset membership of zero");
  const unsigned l = x - 1;
  switch (which) {
    case Subset::PSI:
      return l % (ctx.q - 1) == 0;
    case Subset::GAMMA:
      return l % (ctx.n / ctx.gamma) == 0;
    case Subset::L:
      return l % ctx.gamma == 0;
  }
  throw std::invalid_argument("unknown subset");
}

std::vector<Fq2> coset_labels(const FieldCtx& ctx, CosetFamily which) {
  std::vector<Fq2> out;
  switch (which) {
    case CosetFamily::MOD_GAMMA: {
      const unsigned count = ctx.n / ctx.gamma;
      out.reserve(count);
      for (unsigned l = 0; l < count; ++l) out.push_back(ctx.from_log(l));
      break;
    }
    case CosetFamily::PSI_MOD_GAMMA: {
      const unsigned count = (ctx.q + 1) / ctx.gamma;
      out.reserve(count);
      for (unsigned m = 0; m < count; ++m)
        out.push_back(ctx.from_log(static_cast<unsigned long long>(m) *
                                   (ctx.q - 1)));
      break;
    }
    case CosetFamily::MOD_L: {
      out.reserve(ctx.gamma);
      for (unsigned e = 0; e < ctx.gamma; ++e) out.push_back(ctx.from_log(e));
      break;
    }
  }
  return out;
}

}  // namespace psu3
