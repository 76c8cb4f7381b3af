#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "psu3/gfp_linalg.hpp"

namespace psu3 {

// Finite-dimensional commutative associative unital algebra over F_p, given
// by structure constants on a fixed basis b_0, ..., b_{n-1}:
//   b_i * b_j = sum_k sc[(i*n + j)*n + k] * b_k.
// `aug` optionally carries an algebra homomorphism to F_p (an augmentation),
// stored by its values on the basis.
struct CommAlg {
  unsigned p = 2;
  std::size_t dim = 0;
  std::vector<std::uint8_t> sc;
  FpVec unit;
  std::optional<FpVec> aug;

  std::uint8_t sc_at(std::size_t i, std::size_t j, std::size_t k) const {
    return sc[(i * dim + j) * dim + k];
  }
  FpVec mul(const FpVec& u, const FpVec& v) const;
  FpVec mul_basis(const FpVec& u, std::size_t j) const;  // u * b_j
  std::uint8_t aug_of(const FpVec& v) const;             // requires aug
};

enum class AlgebraChecks { kFull, kSampled, kNone };

// Validates and packages an algebra. Commutativity, the unit axiom, and (when
// aug is given) multiplicativity of the augmentation are always verified.
// Associativity is verified on every basis triple with kFull — which silently
// degrades to a seeded random sample above dimension 64 to stay O(dim^3)-ish —
// or skipped with kNone for algebras derived from already-verified ones.
CommAlg make_comm_alg(unsigned p, std::size_t dim, std::vector<std::uint8_t> sc,
                      FpVec unit, std::optional<FpVec> aug = std::nullopt,
                      AlgebraChecks checks = AlgebraChecks::kFull,
                      std::uint64_t seed = 1);

// Matrix of a -> a^p on the chosen basis (row i = coordinates of b_i^p).
MatFp frobenius_matrix(const CommAlg& A);

// Jacobson radical: for a commutative algebra over F_p this is the kernel of
// the F_p-linear map a -> a^(p^m) for any p^m >= dim.
Subspace radical_basis(const CommAlg& A);

// Span of products I*J, closed into an ideal.
Subspace ideal_product(const CommAlg& A, const Subspace& I, const Subspace& J);

// dims[k] = dim J^k with J^0 = A; strictly decreasing with final entry 0.
struct LoewyProfile {
  std::vector<std::size_t> dims;
  // smallest k with J^k = 0 (the Loewy length)
  std::size_t length() const { return dims.size() - 1; }
  bool operator==(const LoewyProfile&) const = default;
};
LoewyProfile loewy_profile(const CommAlg& A);

struct BlockDecomposition {
  // orthogonal primitive idempotents summing to 1, sorted lexicographically
  std::vector<FpVec> idempotents;
  // index of the unique idempotent with augmentation 1 (when aug is present)
  std::optional<std::size_t> principal;
};
BlockDecomposition block_decompose(const CommAlg& A);

// The corner algebra e*A on its canonical basis; inherits the augmentation
// when eps(e) = 1. Errors: e not idempotent.
CommAlg corner_algebra(const CommAlg& A, const FpVec& e);

}  // namespace psu3
