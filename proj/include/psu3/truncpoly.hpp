#pragma once

#include <cstdint>
#include <vector>

#include "psu3/commalg.hpp"

namespace psu3 {

// A tensor F_p[X]/X^p on the basis b_i X^j at index i*p + j. The factor ring
// is the centre-relevant truncated polynomial ring in characteristic p.
CommAlg tensor_truncated(const CommAlg& A, unsigned p);

// F_p as a one-dimensional algebra, and F_p[X]/X^p = its truncated tensor.
CommAlg prime_field_algebra(unsigned p);
CommAlg truncated_polynomial_ring(unsigned p);

// For J^n the last nonzero radical power of A (n = Loewy length - 1), the
// tensor with F_p[X]/X^p has Loewy length n + p and its last nonzero radical
// power is J^n(A) tensor X^(p-1), of the same dimension as J^n(A).
struct TensorPrediction {
  std::size_t loewy_length;
  std::size_t top_layer_dim;
  bool operator==(const TensorPrediction&) const = default;
};
TensorPrediction predicted_tensor_profile(const LoewyProfile& profile,
                                          unsigned p);

// Whether the (length, top-layer) invariants of the truncated tensors differ,
// i.e. whether tensoring with F_p[X]/X^p keeps the two algebras apart.
bool distinguishable(const LoewyProfile& a, const LoewyProfile& b, unsigned p);

// Integer matrices (Cartan-style bookkeeping)
using MatZ = std::vector<std::vector<long long>>;
MatZ cartan_scale(const MatZ& c, long long d);  // entrywise d * c
unsigned p_rank(const MatZ& c, unsigned p);     // rank of c mod p

}  // namespace psu3
