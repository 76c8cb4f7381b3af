#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "psu3/classalg.hpp"
#include "psu3/commalg.hpp"
#include "psu3/gfq.hpp"
#include "psu3/unitary.hpp"

namespace psu3 {

// Closed-form model of the integral centre of the stabilizer group algebra,
// on its class-sum basis. Basis labels come in three blocks (in flat-index
// order D, T, U):
//   D_m  diagonal classes, one per coset of GAMMA in GF(q^2)^x,
//        m in [0, (q^2-1)/gamma), representative g^m; D_0 is the identity
//   T_t  norm-one classes with unipotent part, one per coset of GAMMA in the
//        norm-one circle, t in [0, (q+1)/gamma), representative g^(t(q-1))
//   U_e  unipotent classes, one per coset of the index-gamma subgroup L,
//        e in [0, gamma)
// Products are given by closed formulas in q; no group enumeration is
// involved, which makes the model an independent check of the computed
// class-sum structure constants.
enum class LabelKind { D, T, U };

struct BasisLabel {
  LabelKind kind;
  std::uint32_t idx;
  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

// Coset-intersection counts entering the unipotent products when gamma = 3
// (with t a fixed non-cube):
//   l = #{ v in L : 1 - v in L }
//   m = #{ v in L : t - v in L }
//   n = #{ v in L : t - v/t in L }
struct Lmn {
  std::int64_t l = 0, m = 0, n = 0;
  friend bool operator==(const Lmn&, const Lmn&) = default;
};

struct ZkNModel {
  unsigned q = 0, p = 0, r = 0, gamma = 0;
  std::uint32_t n_d = 0, n_t = 0, n_u = 0, dim = 0;
  std::optional<Lmn> lmn;  // present exactly when gamma == 3
};

// Builds the model for a prime power q (errors otherwise). Pure integer
// arithmetic; no field tables are constructed.
ZkNModel make_zkn_model(unsigned q);

// The closed forms l = ((q+1)/3)^2 - 1, m = (q^2-q-2)/9, n = ((q+1)/3)^2.
// Requires gamma = 3, i.e. q = 2 mod 3.
Lmn lmn_closed(unsigned q);
// The same numbers counted exhaustively in an actual field.
Lmn lmn_bruteforce(const FieldCtx& f);

std::uint32_t flat_index(const ZkNModel& M, BasisLabel l);
BasisLabel label_of(const ZkNModel& M, std::uint32_t flat);
std::vector<BasisLabel> all_labels(const ZkNModel& M);
std::uint64_t class_size(const ZkNModel& M, BasisLabel l);
std::string label_name(const ZkNModel& M, BasisLabel l);  // "D3", "T0", "U1"

// Conjugacy-class representative realizing a label in the matrix group.
Mat3 label_matrix(const FieldCtx& f, const ZkNModel& M, BasisLabel l);

// One structure-constant row: the product of two basis class sums as a
// sparse integer combination of basis labels (indices ascending).
using SparseRow = std::vector<std::pair<std::uint32_t, std::int64_t>>;
SparseRow product_of_labels(const ZkNModel& M, BasisLabel a, BasisLabel b);

// Integral invariants of the whole table: the unit row, commutativity,
// augmentation multiplicativity (weighting by class sizes) on every pair,
// and associativity -- over all triples when assoc_samples = 0, otherwise
// on that many seeded random triples. Throws CheckFailure on violation.
void verify_model_invariants(const ZkNModel& M, std::uint64_t seed = 1,
                             std::size_t assoc_samples = 0);

// FNV-1a digest of the full product table in canonical row-major order.
std::uint64_t table_checksum(const ZkNModel& M);

// The model reduced mod its defining characteristic, as a checked algebra
// with the class-size augmentation. Requires dim <= 512.
CommAlg zkn_mod_p(const ZkNModel& M);

// Predicted Loewy profile of the mod-p centre: dimensions
// (q^2+q)/gamma + gamma, then dim - 1, then (q+1)/gamma - 1, then 0,
// with the radical cube always vanishing.
LoewyProfile loewy_closed(unsigned q);

// Verifies the generators-and-relations description of the mod-p centre:
// the images of all defining relations vanish and the standard monomials
// map to a basis. Throws CheckFailure on violation.
void verify_presentation(const ZkNModel& M);

// Compares the closed-form table entry-by-entry against structure constants
// computed from an enumerated group: label -> class bijection, matching
// sizes, and every product row equal.
void crosscheck_against_group(const ZkNModel& M, const GroupCtx& g,
                              const ClassPartition& cls,
                              const StructTensor& st);
// Convenience form: enumerates the stabilizer group for f and cross-checks.
void crosscheck(const FieldCtx& f, std::uint64_t budget);

}  // namespace psu3
