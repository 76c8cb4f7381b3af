#include "psu3/truncpoly.hpp"

#include <stdexcept>

#include "doctest.h"
#include "oracle_helpers.hpp"

using namespace psu3;
using namespace psu3_test;

TEST_CASE("truncated polynomial ring has the staircase profile") {
  for (unsigned p : {2u, 3u, 5u}) {
    auto T = truncated_polynomial_ring(p);
    auto prof = loewy_profile(T);
    REQUIRE(prof.dims.size() == p + 1);
    for (unsigned i = 0; i <= p; ++i) CHECK(prof.dims[i] == p - i);
  }
}

TEST_CASE("tensor with the truncated ring: radical and length theorem") {
  // J(A tensor T) = J(A) tensor T + A tensor (X), so its dimension is
  // p*dim J(A) + (dim A - dim J(A))*(p - 1); the Loewy length grows by
  // exactly p - 1 + 1 = p beyond the last nonzero power of A
  auto check_tensor = [&](const CommAlg& A) {
    const unsigned p = A.p;
    auto base_prof = loewy_profile(A);
    auto T = tensor_truncated(A, p);
    CHECK(T.dim == A.dim * p);
    auto prof = loewy_profile(T);

    const std::size_t j = base_prof.dims[1];
    CHECK(prof.dims[1] == p * j + (A.dim - j) * (p - 1));

    auto pred = predicted_tensor_profile(base_prof, p);
    CHECK(prof.length() == pred.loewy_length);
    CHECK(prof.dims[prof.dims.size() - 2] == pred.top_layer_dim);
  };

  check_tensor(abelian_group_algebra(2, 3, 1));       // semisimple, p = 2
  check_tensor(abelian_group_algebra(3, 3, 1));       // local, p = 3
  check_tensor(truncated_polynomial_algebra(2, 3));   // chain algebra
  check_tensor(field_extension_algebra(5, 2));        // a field
  check_tensor(direct_product(abelian_group_algebra(2, 3, 1),
                              truncated_polynomial_algebra(2, 2)));

  // iterating the construction: F_2[X,Y]/(X^2, Y^2) has profile 4,3,1,0
  auto XY = tensor_truncated(truncated_polynomial_ring(2), 2);
  CHECK(loewy_profile(XY).dims == std::vector<std::size_t>{4, 3, 1, 0});
}

TEST_CASE("tensor keeps the augmentation when present") {
  auto A = abelian_group_algebra(3, 3, 1);
  auto T = tensor_truncated(A, 3);
  REQUIRE(T.aug.has_value());
  CHECK(T.aug_of(T.unit) == 1);
}

TEST_CASE("tensor rejects a mismatched truncation degree") {
  auto A = abelian_group_algebra(3, 3, 1);
  CHECK_THROWS_AS(tensor_truncated(A, 2), std::invalid_argument);
}

TEST_CASE("predicted profiles and distinguishability") {
  LoewyProfile zb{{21, 20, 5, 0}};
  LoewyProfile zb2{{21, 20, 4, 0}};
  auto pa = predicted_tensor_profile(zb, 2);
  CHECK(pa.loewy_length == 4);
  CHECK(pa.top_layer_dim == 5);
  auto pb = predicted_tensor_profile(zb2, 2);
  CHECK(pb.loewy_length == 4);
  CHECK(pb.top_layer_dim == 4);
  CHECK(distinguishable(zb, zb2, 2));
  CHECK(!distinguishable(zb, zb, 2));
  // different lengths distinguish regardless of dimensions
  CHECK(distinguishable(LoewyProfile{{5, 2, 0}}, LoewyProfile{{5, 0}}, 2));
  // malformed profiles are rejected
  CHECK_THROWS_AS(predicted_tensor_profile(LoewyProfile{{3, 2}}, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(predicted_tensor_profile(LoewyProfile{{0}}, 2),
                  std::invalid_argument);
}

TEST_CASE("integer matrix helpers: scaling and p-rank") {
  MatZ c = {{2, 1}, {1, 2}};
  auto c3 = cartan_scale(c, 3);
  CHECK(c3[0][0] == 6);
  CHECK(c3[1][0] == 3);
  CHECK(p_rank(c, 3) == 1);   // det = 3, rank drops mod 3
  CHECK(p_rank(c, 5) == 2);
  CHECK(p_rank(cartan_scale(c, 5), 5) == 0);  // scaling by p kills everything
  CHECK(p_rank(MatZ{{-1, 4}, {2, -8}}, 3) == 1);  // negatives reduce correctly
  CHECK(p_rank(MatZ{}, 7) == 0);
}
