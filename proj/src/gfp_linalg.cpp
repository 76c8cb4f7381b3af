#include "psu3/gfp_linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "psu3/check.hpp"

namespace psu3 {

unsigned fp_inv(unsigned a, unsigned p) {
  a %= p;
  if (a == 0) throw std::invalid_argument("inverse of zero mod p");
  unsigned long long r = 1, b = a;
  for (unsigned e = p - 2; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<unsigned>(r);
}

MatFp MatFp::identity(unsigned p, std::size_t n) {
  MatFp m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

MatFp mat_mul(const MatFp& x, const MatFp& y) {
  PSU3_CHECK(x.cols == y.rows && x.p == y.p, "matrix shapes conform");
  MatFp z(x.p, x.rows, y.cols);
  std::vector<std::uint32_t> acc(y.cols);
  for (std::size_t i = 0; i < x.rows; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < x.cols; ++k) {
      const std::uint32_t s = x.at(i, k);
      if (s == 0) continue;
      const std::uint8_t* yr = y.row(k);
      for (std::size_t j = 0; j < y.cols; ++j) acc[j] += s * yr[j];
    }
    for (std::size_t j = 0; j < y.cols; ++j)
      z.at(i, j) = static_cast<std::uint8_t>(acc[j] % x.p);
  }
  return z;
}

MatFp mat_pow(MatFp x, unsigned long long e) {
  PSU3_CHECK(x.rows == x.cols, "mat_pow needs a square matrix");
  MatFp r = MatFp::identity(x.p, x.rows);
  while (e) {
    if (e & 1) r = mat_mul(r, x);
    x = mat_mul(x, x);
    e >>= 1;
  }
  return r;
}

FpVec vec_mat(const FpVec& v, const MatFp& m) {
  PSU3_CHECK(v.size() == m.rows, "vector length matches matrix rows");
  std::vector<std::uint32_t> acc(m.cols, 0);
  for (std::size_t i = 0; i < m.rows; ++i) {
    const std::uint32_t s = v[i];
    if (s == 0) continue;
    const std::uint8_t* r = m.row(i);
    for (std::size_t j = 0; j < m.cols; ++j) acc[j] += s * r[j];
  }
  FpVec out(m.cols);
  for (std::size_t j = 0; j < m.cols; ++j)
    out[j] = static_cast<std::uint8_t>(acc[j] % m.p);
  return out;
}

namespace {

// in-place Gaussian elimination to reduced row echelon form; returns pivots
std::vector<std::size_t> rref(MatFp& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t sel = row;
    while (sel < m.rows && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols; ++j)
        std::swap(m.at(sel, j), m.at(row, j));
    const unsigned s = fp_inv(m.at(row, col), m.p);
    for (std::size_t j = 0; j < m.cols; ++j)
      m.at(row, j) = static_cast<std::uint8_t>(m.at(row, j) * s % m.p);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row) continue;
      const unsigned f = m.at(i, col);
      if (f == 0) continue;
      for (std::size_t j = 0; j < m.cols; ++j)
        m.at(i, j) = static_cast<std::uint8_t>(
            (m.at(i, j) + (m.p - f) * m.at(row, j)) % m.p);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

unsigned rank(MatFp m) { return static_cast<unsigned>(rref(m).size()); }

std::vector<FpVec> left_kernel(const MatFp& m) {
  // v*M = 0  <=>  M^T v^T = 0; eliminate M^T and read off the free columns
  MatFp t(m.p, m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  const auto pivots = rref(t);

  std::vector<bool> is_pivot(m.rows, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<FpVec> basis;
  for (std::size_t f = 0; f < m.rows; ++f) {
    if (is_pivot[f]) continue;
    FpVec v(m.rows, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      const unsigned c = static_cast<unsigned>(t.at(i, f));
      if (c) v[pivots[i]] = static_cast<std::uint8_t>(m.p - c);
    }
    basis.push_back(std::move(v));
  }
  // rows of this construction are already canonical (each free coordinate is
  // the pivot of exactly one vector), but normalize through Subspace so every
  // caller sees the same canonical ordering
  Subspace s(m.p, m.rows);
  for (auto& v : basis) s.insert(std::move(v));
  return s.rows();
}

bool Subspace::insert(FpVec v) {
  PSU3_CHECK(v.size() == n_, "vector length matches ambient dimension");
  v = reduce(std::move(v));
  std::size_t lead = n_;
  for (std::size_t j = 0; j < n_; ++j)
    if (v[j] != 0) {
      lead = j;
      break;
    }
  if (lead == n_) return false;

  const unsigned s = fp_inv(v[lead], p_);
  for (auto& x : v) x = static_cast<std::uint8_t>(x * s % p_);
  // eliminate the new pivot column from existing rows
  for (auto& row : rows_) {
    const unsigned f = row[lead];
    if (f == 0) continue;
    for (std::size_t j = 0; j < n_; ++j)
      row[j] = static_cast<std::uint8_t>((row[j] + (p_ - f) * v[j]) % p_);
  }
  // keep pivot order ascending
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
  const std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
  pivots_.insert(pos, lead);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
  return true;
}

FpVec Subspace::reduce(FpVec v, FpVec* coeffs) const {
  PSU3_CHECK(v.size() == n_, "vector length matches ambient dimension");
  if (coeffs) coeffs->assign(rows_.size(), 0);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const unsigned f = v[pivots_[i]];
    if (f == 0) continue;
    if (coeffs) (*coeffs)[i] = static_cast<std::uint8_t>(f);
    const FpVec& row = rows_[i];
    for (std::size_t j = 0; j < n_; ++j)
      v[j] = static_cast<std::uint8_t>((v[j] + (p_ - f) * row[j]) % p_);
  }
  return v;
}

bool Subspace::contains(const FpVec& v) const {
  FpVec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](std::uint8_t x) { return !x; });
}

}  // namespace psu3
