#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "psu3/check.hpp"
#include "psu3/classalg.hpp"
#include "psu3/gfq.hpp"

namespace psu3 {

// 3x3 matrix over F_{q^2}, row-major.
struct Mat3 {
  Fq2 m[9];
  friend bool operator==(const Mat3&, const Mat3&) = default;
};

// Upper-triangular point-stabilizer parameters: determines the matrix
//   [ a  b  c ]
//   [ 0  b(a)/a  -b(b)/a ]     with b(x) the conjugate x^q,
//   [ 0  0  1/b(a) ]
// subject to a != 0 and b(b)b + a b(c) + c b(a) = 0.
struct ParamQ {
  Fq2 a, b, c;
};

// 9 field codes at 7 bits each, entry (0,0) most significant. Valid for
// q^2 - 1 <= 127, i.e. q <= 11. Zero matrices never occur, so 0 serves as
// an empty-slot sentinel.
using PackedElem = std::uint64_t;

PackedElem pack_mat(const Mat3& m);
Mat3 unpack_mat(PackedElem key);

// Open-addressing hash map PackedElem -> uint32 index (insert-only, grows).
class KeyMap {
 public:
  static constexpr std::uint32_t kAbsent = 0xffffffffu;

  explicit KeyMap(std::size_t expected = 0);
  // false if the key was already present; key must be nonzero
  bool insert(PackedElem key, std::uint32_t value);
  std::uint32_t find(PackedElem key) const;
  std::size_t size() const { return count_; }

 private:
  void grow();
  std::size_t slot_of(PackedElem key) const;

  std::vector<PackedElem> keys_;
  std::vector<std::uint32_t> vals_;
  std::size_t count_ = 0;
  std::size_t mask_ = 0;
};

// A finite unitary group (the full projective group, or the stabilizer of
// the distinguished isotropic point) with all elements enumerated, packed,
// and indexed. Elements are scalar-normalized matrices in SU(3,q), sorted by
// packed key; indices are the canonical element order.
class GroupCtx {
 public:
  const FieldCtx& field() const { return field_; }
  std::uint64_t size() const { return elements_.size(); }
  bool full_group() const { return full_group_; }
  std::uint32_t identity() const { return identity_; }

  std::uint32_t mult(std::uint32_t i, std::uint32_t j) const;
  std::uint32_t inv(std::uint32_t i) const;
  Mat3 element(std::uint32_t i) const { return unpack_mat(elements_[i]); }
  // canonicalizes, then looks the element up; CheckFailure if absent
  std::uint32_t index_of(const Mat3& m) const;
  bool contains(const Mat3& m) const;

  const std::vector<PackedElem>& packed_elements() const { return elements_; }
  const std::vector<std::uint32_t>& generators() const { return generators_; }
  // isotropic points of the hermitian form (full group only)
  const std::vector<std::array<Fq2, 3>>& quadric() const { return quadric_; }

  // raw matrix product over F_{q^2}
  Mat3 multiply(const Mat3& x, const Mat3& y) const;
  // inverse via the unitary adjoint: inv[i][j] = b(m[2-j][2-i])
  Mat3 inverse(const Mat3& m) const;
  // scalar-normalized representative: lexicographically least multiple by a
  // determinant-1 scalar (the identity when gamma = 1)
  Mat3 canonical(Mat3 m) const;

 private:
  friend GroupCtx build_normalizer(const FieldCtx& f, std::uint64_t budget);
  friend GroupCtx build_psu(const FieldCtx& f, std::uint64_t budget);

  explicit GroupCtx(const FieldCtx& f);
  void finalize_elements(std::vector<PackedElem> elems);
  Fq2 fmul(Fq2 x, Fq2 y) const { return mul_tab_[x * q2_ + y]; }
  Fq2 fadd(Fq2 x, Fq2 y) const { return add_tab_[x * q2_ + y]; }

  FieldCtx field_;
  std::uint32_t q2_ = 0;
  bool full_group_ = false;
  std::uint32_t identity_ = 0;
  Fq2 zeta_ = 0;  // a generator of the determinant-1 scalar subgroup
  std::vector<Fq2> mul_tab_, add_tab_, bar_tab_;
  std::vector<PackedElem> elements_;
  KeyMap index_;
  std::vector<std::uint32_t> generators_;
  std::vector<std::array<Fq2, 3>> quadric_;
};

// Builds M(a,b,c) from stabilizer parameters; checks the isotropy condition.
Mat3 param_to_elem(const FieldCtx& f, const ParamQ& pq);

// Enumerates the stabilizer of the distinguished isotropic point: order
// q^3 (q^2 - 1) / gamma. Throws BudgetExceeded if that exceeds the budget,
// std::invalid_argument if q > 11 (packing limit).
GroupCtx build_normalizer(const FieldCtx& f, std::uint64_t budget);

// Enumerates the full projective special unitary group, order
// q^3 (q^2 - 1)(q^3 + 1) / gamma, as stabilizer-cosets over the quadric.
GroupCtx build_psu(const FieldCtx& f, std::uint64_t budget);

// Conjugacy classes by orbit search under the generator set. Classes are
// ordered by (size ascending, least element index); class 0 is the identity.
ClassPartition conjugacy_classes(const GroupCtx& g);

std::vector<Mat3> class_reps(const GroupCtx& g, const ClassPartition& cls);

// "[[1,0,0],[0,1,0],[0,0,1]]" with entries as value representatives
std::string element_name(const FieldCtx& f, const Mat3& m);

// test helper: conj-transpose(M) J M == J (J the antidiagonal form) and
// det M == 1
bool is_special_unitary(const FieldCtx& f, const Mat3& m);

}  // namespace psu3
