#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace psu3 {

// Element of GF(q^2) in discrete-log encoding:
//   code 0              -> the zero element
//   code k in [1, q^2-1] -> g^(k-1) for the context's fixed generator g.
// With this encoding equality is integer equality and multiplication is
// addition of exponents; addition goes through a Zech logarithm table.
using Fq2 = std::uint32_t;

// Distinguished multiplicative subsets of GF(q^2)^x (q = p^r,
// gamma = gcd(3, q+1)):
//   PSI   = { x : x * bar(x) = 1 }      norm-1 circle, size q+1
//   GAMMA = { x : x^gamma = 1 }         subgroup of order gamma (the cube
//                                       roots of unity when gamma = 3)
//   L     = { x : x^((q^2-1)/gamma) = 1 }  the subgroup of index gamma
//                                       (the nonzero cubes when gamma = 3,
//                                       everything when gamma = 1)
enum class Subset { PSI, GAMMA, L };

// Families of multiplicative coset representatives:
//   MOD_GAMMA     GF(q^2)^x / GAMMA        size (q^2-1)/gamma
//   PSI_MOD_GAMMA PSI / GAMMA              size (q+1)/gamma
//   MOD_L         GF(q^2)^x / L            size gamma
enum class CosetFamily { MOD_GAMMA, PSI_MOD_GAMMA, MOD_L };

struct SpecialElems {
  Fq2 omega;  // omega != 0 with omega + bar(omega) = 0 (smallest discrete log)
  Fq2 tau;    // tau with tau + bar(tau) = -1 (smallest discrete log)
};

// Tables for GF(q^2) arithmetic, q = p^r. Built once by make_field_ctx.
// The modulus polynomial and the generator are chosen canonically
// (lexicographically smallest), so every run of the program agrees on the
// encoding of every element.
class FieldCtx {
 public:
  unsigned p = 0;   // characteristic (prime)
  unsigned r = 0;   // q = p^r
  unsigned q = 0;
  unsigned q2 = 0;  // q^2
  unsigned n = 0;   // q^2 - 1, order of the multiplicative group
  unsigned gamma = 0;  // gcd(3, q+1)

  // Monic irreducible modulus of degree 2r over F_p; coeffs[i] multiplies x^i,
  // coeffs[2r] = 1. Lexicographically smallest such polynomial (coefficient
  // tuple read from the highest non-leading term down).
  std::vector<unsigned> modulus;
  std::uint32_t generator_vrep = 0;  // coefficient-vector integer of g

  Fq2 zero() const { return 0; }
  Fq2 one() const { return 1; }
  bool is_zero(Fq2 x) const { return x == 0; }

  // discrete log of a nonzero element, in [0, n)
  unsigned log(Fq2 x) const;
  Fq2 from_log(unsigned long long k) const {
    return static_cast<Fq2>(k % n + 1);
  }

  Fq2 add(Fq2 x, Fq2 y) const;
  Fq2 neg(Fq2 x) const;
  Fq2 sub(Fq2 x, Fq2 y) const { return add(x, neg(y)); }
  Fq2 mul(Fq2 x, Fq2 y) const {
    if (x == 0 || y == 0) return 0;
    return from_log(static_cast<unsigned long long>(x - 1) + (y - 1));
  }
  Fq2 inv(Fq2 x) const;  // x != 0
  Fq2 div(Fq2 x, Fq2 y) const { return mul(x, inv(y)); }
  Fq2 bar(Fq2 x) const {  // Frobenius x -> x^q, the involution fixing F_q
    if (x == 0) return 0;
    return from_log(static_cast<unsigned long long>(x - 1) * q);
  }
  Fq2 pow(Fq2 x, long long e) const;

  // Embedding of the prime field: c in [0, p) -> c * 1.
  Fq2 from_prime(unsigned c) const { return prime_embed_[c % p]; }
  // Membership in the subfield F_q (zero included).
  bool in_base_field(Fq2 x) const {
    return x == 0 || (static_cast<unsigned long long>(x - 1)) % (q + 1) == 0;
  }

  // Coefficient-vector integer (base-p digits, constant term least
  // significant); 0 encodes the zero element. Stable human-readable identity.
  std::uint32_t vrep(Fq2 x) const { return x == 0 ? 0 : exp_vrep_[x - 1]; }
  Fq2 from_vrep(std::uint32_t v) const { return log_code_[v]; }

  std::string modulus_string() const;  // e.g. "x^2 + x + 1"

  // internal tables, filled by make_field_ctx
  std::vector<std::uint32_t> exp_vrep_;  // k -> vrep of g^k, size n
  std::vector<Fq2> log_code_;            // vrep -> code, size p^(2r)
  std::vector<std::int64_t> zech_;       // k -> log(1 + g^k), -1 if 1+g^k = 0
  std::vector<Fq2> prime_embed_;         // c -> code of c*1, size p
};

// Builds GF(q^2) for q = p^r. Errors: p not prime, r = 0, or q^2 > 2^16.
FieldCtx make_field_ctx(unsigned p, unsigned r);

// Frobenius involution as a free function (same as ctx.bar).
Fq2 bar(const FieldCtx& ctx, Fq2 x);

// omega and tau as defined on SpecialElems; deterministic (smallest logs).
SpecialElems special_elements(const FieldCtx& ctx);

// Membership of a nonzero x in PSI / GAMMA / L. Errors: x = 0.
bool subset_member(const FieldCtx& ctx, Fq2 x, Subset which);

// Canonical coset representatives (smallest discrete logs, ascending).
std::vector<Fq2> coset_labels(const FieldCtx& ctx, CosetFamily which);

}  // namespace psu3
