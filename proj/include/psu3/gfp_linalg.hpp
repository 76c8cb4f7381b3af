#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace psu3 {

// Coordinate vector over the prime field F_p, entries reduced to [0, p).
using FpVec = std::vector<std::uint8_t>;

unsigned fp_inv(unsigned a, unsigned p);  // a != 0 mod p, p prime

// Dense row-major matrix over F_p. Row vectors act on the left: a linear map
// sends v to v*M, so row i of M is the image of the i-th basis vector.
struct MatFp {
  unsigned p = 2;
  std::size_t rows = 0, cols = 0;
  std::vector<std::uint8_t> a;

  MatFp() = default;
  MatFp(unsigned p, std::size_t rows, std::size_t cols)
      : p(p), rows(rows), cols(cols), a(rows * cols, 0) {}

  std::uint8_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  std::uint8_t at(std::size_t i, std::size_t j) const {
    return a[i * cols + j];
  }
  const std::uint8_t* row(std::size_t i) const { return a.data() + i * cols; }
  std::uint8_t* row(std::size_t i) { return a.data() + i * cols; }

  static MatFp identity(unsigned p, std::size_t n);
  bool operator==(const MatFp&) const = default;
};

MatFp mat_mul(const MatFp& x, const MatFp& y);
MatFp mat_pow(MatFp x, unsigned long long e);  // square matrix
FpVec vec_mat(const FpVec& v, const MatFp& m);
unsigned rank(MatFp m);  // works on a copy

// Canonical basis (reduced row echelon rows, pivots ascending) of the left
// kernel { v : v*M = 0 }.
std::vector<FpVec> left_kernel(const MatFp& m);

// Subspace of F_p^n maintained in canonical reduced row echelon form: pivot
// columns ascending, pivots normalized to 1 and eliminated from every other
// row. Two Subspaces are equal as sets iff their rows compare equal.
class Subspace {
 public:
  Subspace(unsigned p, std::size_t n) : p_(p), n_(n) {}

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return n_; }
  unsigned p() const { return p_; }
  const std::vector<FpVec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Inserts the span of v; returns true if the dimension grew.
  bool insert(FpVec v);

  // Remainder of v after elimination by the basis rows. If coeffs is given it
  // receives the coefficient of each basis row in the eliminated part.
  FpVec reduce(FpVec v, FpVec* coeffs = nullptr) const;

  bool contains(const FpVec& v) const;
  bool operator==(const Subspace& o) const {
    return p_ == o.p_ && n_ == o.n_ && rows_ == o.rows_;
  }

 private:
  unsigned p_;
  std::size_t n_;
  std::vector<FpVec> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace psu3
