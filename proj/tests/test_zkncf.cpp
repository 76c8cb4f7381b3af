#include "psu3/zkncf.hpp"

#include <cstdint>
#include <set>
#include <vector>

#include "doctest.h"
#include "psu3/check.hpp"
#include "psu3/classalg.hpp"
#include "psu3/commalg.hpp"
#include "psu3/gfq.hpp"
#include "psu3/unitary.hpp"

using namespace psu3;

namespace {
constexpr unsigned kPrimePowers[] = {2,  3,  4,  5,  7,  8,  9,  11, 13,
                                     16, 17, 19, 23, 25, 27, 29, 31, 32};
}

TEST_CASE("model shapes follow the two congruence families") {
  struct Row {
    unsigned q, gamma, n_d, n_t, n_u, dim;
  };
  const Row rows[] = {
      {2, 3, 1, 1, 3, 5},      {3, 1, 8, 4, 1, 13},    {4, 1, 15, 5, 1, 21},
      {5, 3, 8, 2, 3, 13},     {7, 1, 48, 8, 1, 57},   {8, 3, 21, 3, 3, 27},
      {9, 1, 80, 10, 1, 91},   {11, 3, 40, 4, 3, 47},  {16, 1, 255, 17, 1, 273},
      {32, 3, 341, 11, 3, 355},
  };
  for (const Row& row : rows) {
    const ZkNModel M = make_zkn_model(row.q);
    CHECK(M.q == row.q);
    CHECK(M.gamma == row.gamma);
    CHECK(M.n_d == row.n_d);
    CHECK(M.n_t == row.n_t);
    CHECK(M.n_u == row.n_u);
    CHECK(M.dim == row.dim);
    CHECK(M.lmn.has_value() == (row.gamma == 3));
    CHECK(M.dim == (row.q * row.q + row.q) / row.gamma + row.gamma);
  }
  CHECK(make_zkn_model(8).p == 2);
  CHECK(make_zkn_model(8).r == 3);
  CHECK(make_zkn_model(27).p == 3);
  CHECK(make_zkn_model(27).r == 3);

  for (unsigned bad : {0u, 1u, 6u, 10u, 12u, 15u, 18u, 24u})
    CHECK_THROWS_AS(make_zkn_model(bad), std::invalid_argument);

  // flat indexing is a bijection onto [0, dim)
  const ZkNModel m5 = make_zkn_model(5);
  for (std::uint32_t flat = 0; flat < m5.dim; ++flat)
    CHECK(flat_index(m5, label_of(m5, flat)) == flat);
  CHECK(label_name(m5, {LabelKind::D, 0}) == "D0");
  CHECK(label_name(m5, {LabelKind::T, 1}) == "T1");
  CHECK(label_name(m5, {LabelKind::U, 2}) == "U2");

  // class sizes always sum to the stabilizer group order
  for (unsigned q : kPrimePowers) {
    const ZkNModel M = make_zkn_model(q);
    std::uint64_t total = 0;
    for (const BasisLabel& l : all_labels(M)) total += class_size(M, l);
    const std::uint64_t q3 = static_cast<std::uint64_t>(q) * q * q;
    CHECK(total == q3 * (q * q - 1) / M.gamma);
  }
}

TEST_CASE("coset intersection counts match the closed forms") {
  struct Known {
    unsigned q, p, r;
    Lmn v;
  };
  const Known rows[] = {{2, 2, 1, {0, 0, 1}},
                        {5, 5, 1, {3, 2, 4}},
                        {8, 2, 3, {8, 6, 9}},
                        {11, 11, 1, {15, 12, 16}},
                        {17, 17, 1, {35, 30, 36}}};
  for (const Known& row : rows) {
    const Lmn closed = lmn_closed(row.q);
    CHECK(closed == row.v);
    const FieldCtx f = make_field_ctx(row.p, row.r);
    CHECK(lmn_bruteforce(f) == closed);
    // internal identities binding the three counts
    CHECK(closed.n == closed.l + 1);
    CHECK(closed.n + 2 * closed.m ==
          (static_cast<std::int64_t>(row.q) * row.q - 1) / 3);
  }
  CHECK_THROWS_AS(lmn_closed(3), std::invalid_argument);
  CHECK_THROWS_AS(lmn_closed(4), std::invalid_argument);
  CHECK_THROWS_AS(lmn_bruteforce(make_field_ctx(3, 1)), std::invalid_argument);
}

TEST_CASE("norm-one products land in the scalar subgroup iff their cube is one") {
  for (auto [p, r] : {std::pair<unsigned, unsigned>{2, 1}, {2, 2}, {5, 1},
                      {2, 3}}) {
    const FieldCtx f = make_field_ctx(p, r);
    std::vector<Fq2> psi;
    for (Fq2 x = 1; x < f.q2; ++x)
      if (subset_member(f, x, Subset::PSI)) psi.push_back(x);
    CHECK(psi.size() == f.q + 1);
    for (Fq2 x : psi)
      for (Fq2 y : psi) {
        const Fq2 xy = f.mul(x, y);
        CHECK(subset_member(f, xy, Subset::GAMMA) == (f.pow(xy, 3) == f.one()));
      }
  }
}

TEST_CASE("hand-checked product rows in the smallest model") {
  const ZkNModel M = make_zkn_model(2);
  const auto D0 = flat_index(M, {LabelKind::D, 0});
  const auto T0 = flat_index(M, {LabelKind::T, 0});
  const auto U0 = flat_index(M, {LabelKind::U, 0});
  const auto U1 = flat_index(M, {LabelKind::U, 1});
  const auto U2 = flat_index(M, {LabelKind::U, 2});

  // distinct unipotent cosets multiply onto the remaining coset
  CHECK(product_of_labels(M, {LabelKind::U, 0}, {LabelKind::U, 1}) ==
        SparseRow{{U2, 2}});
  CHECK(product_of_labels(M, {LabelKind::U, 1}, {LabelKind::U, 2}) ==
        SparseRow{{U0, 2}});
  // a coset squared falls onto the identity and the central class
  CHECK(product_of_labels(M, {LabelKind::U, 0}, {LabelKind::U, 0}) ==
        SparseRow{{D0, 2}, {T0, 2}});
  // the central class squares to the identity (q - 2 = 0 kills the rest)
  CHECK(product_of_labels(M, {LabelKind::T, 0}, {LabelKind::T, 0}) ==
        SparseRow{{D0, 1}});
  CHECK(product_of_labels(M, {LabelKind::T, 0}, {LabelKind::U, 1}) ==
        SparseRow{{U1, 1}});
  CHECK(product_of_labels(M, {LabelKind::D, 0}, {LabelKind::U, 2}) ==
        SparseRow{{U2, 1}});

  const ZkNModel m3 = make_zkn_model(3);
  // generic diagonal times itself: the product coset is norm-one
  const auto d2 = flat_index(m3, {LabelKind::D, 2});
  const auto t1 = flat_index(m3, {LabelKind::T, 1});
  CHECK(product_of_labels(m3, {LabelKind::D, 1}, {LabelKind::D, 1}) ==
        SparseRow{{d2, 27}, {t1, 27}});
  // inverse cosets: identity plus central plus all unipotent classes
  const auto d0 = flat_index(m3, {LabelKind::D, 0});
  const auto t0 = flat_index(m3, {LabelKind::T, 0});
  const auto u0 = flat_index(m3, {LabelKind::U, 0});
  CHECK(product_of_labels(m3, {LabelKind::D, 1}, {LabelKind::D, 7}) ==
        SparseRow{{d0, 27}, {t0, 27}, {u0, 27}});
}

TEST_CASE("integral table invariants hold exhaustively on small prime powers") {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u})
    verify_model_invariants(make_zkn_model(q));  // throws on violation
  // larger models with sampled associativity
  for (unsigned q : {11u, 13u, 16u})
    verify_model_invariants(make_zkn_model(q), 42, 20000);
  CHECK(true);  // reaching here means every invariant held
}

TEST_CASE("mod-p centres have the predicted radical filtration and one block") {
  for (unsigned q : {2u, 3u, 4u, 5u, 8u, 9u}) {
    const ZkNModel M = make_zkn_model(q);
    const CommAlg z = zkn_mod_p(M);
    CHECK(z.dim == M.dim);
    CHECK(loewy_profile(z) == loewy_closed(q));
    CHECK(block_decompose(z).idempotents.size() == 1);
  }
  // spelled-out expectations for the four central examples
  CHECK(loewy_closed(2).dims == std::vector<std::size_t>{5, 4, 0});
  CHECK(loewy_closed(3).dims == std::vector<std::size_t>{13, 12, 3, 0});
  CHECK(loewy_closed(4).dims == std::vector<std::size_t>{21, 20, 4, 0});
  CHECK(loewy_closed(5).dims == std::vector<std::size_t>{13, 12, 1, 0});
  CHECK(loewy_closed(8).dims == std::vector<std::size_t>{27, 26, 2, 0});
}

TEST_CASE("presentation relations vanish and standard monomials form a basis") {
  for (unsigned q : {2u, 3u, 4u, 5u, 8u, 9u})
    verify_presentation(make_zkn_model(q));
  CHECK(true);
}

TEST_CASE("closed form equals enumerated structure constants") {
  for (auto [p, r] :
       {std::pair<unsigned, unsigned>{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    const FieldCtx f = make_field_ctx(p, r);
    crosscheck(f, 1u << 20);  // throws on any mismatch
  }
  CHECK(true);
  CHECK_THROWS_AS(crosscheck(make_field_ctx(2, 2), 10), BudgetExceeded);
}

TEST_CASE("table checksums are deterministic and field-specific") {
  const std::uint64_t c2 = table_checksum(make_zkn_model(2));
  CHECK(c2 == table_checksum(make_zkn_model(2)));
  CHECK(c2 != 0);
  CHECK(c2 != table_checksum(make_zkn_model(3)));
  CHECK(c2 != table_checksum(make_zkn_model(5)));
}
