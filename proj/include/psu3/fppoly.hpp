#pragma once

#include <utility>
#include <vector>

namespace psu3 {
namespace fppoly {

// Dense polynomial over F_p: coeff[i] multiplies x^i; kept trimmed (no
// leading zeros), so the zero polynomial is the empty vector.
using Poly = std::vector<unsigned>;

void trim(Poly& f);
Poly mul(const Poly& a, const Poly& b, unsigned p);
std::pair<Poly, Poly> divmod(Poly a, const Poly& f, unsigned p);
Poly mod(Poly a, const Poly& f, unsigned p);
Poly gcd(Poly a, Poly b, unsigned p);  // monic gcd

// x^(p^k) mod f by k-fold p-th powering
Poly frobenius_power(const Poly& f, unsigned p, unsigned k);

// Rabin's deterministic irreducibility test (f monic)
bool is_irreducible(const Poly& f, unsigned p);

// Lexicographically smallest monic irreducible of degree d over F_p, the
// coefficient tuple (c_{d-1}, ..., c_0) compared most-significant first.
Poly smallest_irreducible(unsigned p, unsigned d);

// Distinct irreducible factors of a monic squarefree f, by trial division
// with ascending divisor degree (any smallest-degree divisor is irreducible).
std::vector<Poly> factor_squarefree(Poly f, unsigned p);

// v with u*v = 1 (mod f); requires gcd(u, f) = 1
Poly ext_inverse(Poly u, const Poly& f, unsigned p);

std::vector<unsigned> prime_divisors(unsigned n);

}  // namespace fppoly
}  // namespace psu3
