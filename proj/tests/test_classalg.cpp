#include "psu3/classalg.hpp"

#include <array>
#include <cstdint>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "psu3/check.hpp"
#include "psu3/commalg.hpp"
#include "psu3/gfq.hpp"
#include "psu3/unitary.hpp"

using namespace psu3;

namespace {

// the symmetric group on three letters, elements in lexicographic order
struct SymThree {
  // 012 021 102 120 201 210
  static constexpr std::array<std::array<int, 3>, 6> kPerms{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

  std::uint64_t size() const { return 6; }
  std::uint32_t mult(std::uint32_t i, std::uint32_t j) const {
    // composition: apply j first, then i
    std::array<int, 3> c{};
    for (int t = 0; t < 3; ++t) c[t] = kPerms[i][kPerms[j][t]];
    for (std::uint32_t k = 0; k < 6; ++k)
      if (kPerms[k] == c) return k;
    PSU3_CHECK(false, "composition stays in the table");
    return 0;
  }
  std::uint32_t inv(std::uint32_t i) const {
    std::array<int, 3> c{};
    for (int t = 0; t < 3; ++t) c[kPerms[i][t]] = t;
    for (std::uint32_t k = 0; k < 6; ++k)
      if (kPerms[k] == c) return k;
    PSU3_CHECK(false, "inverse stays in the table");
    return 0;
  }
};

ClassPartition sym_three_classes() {
  ClassPartition cls;
  // identity, the three transpositions, the two three-cycles
  cls.class_of = {0, 1, 1, 2, 2, 1};
  cls.rep = {0, 1, 3};
  cls.sizes = {1, 3, 2};
  cls.inverse_class = {0, 1, 2};
  return cls;
}

// cyclic group of order m on residue indices
struct Cyclic {
  std::uint32_t m;
  std::uint64_t size() const { return m; }
  std::uint32_t mult(std::uint32_t i, std::uint32_t j) const {
    return (i + j) % m;
  }
  std::uint32_t inv(std::uint32_t i) const { return (m - i) % m; }
};

ClassPartition cyclic_classes(std::uint32_t m) {
  ClassPartition cls;
  cls.class_of.resize(m);
  cls.rep.resize(m);
  cls.sizes.assign(m, 1);
  cls.inverse_class.resize(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    cls.class_of[i] = i;
    cls.rep[i] = i;
    cls.inverse_class[i] = (m - i) % m;
  }
  return cls;
}

}  // namespace

TEST_CASE("class-sum constants of the symmetric-group fixture match hand values") {
  const SymThree g;
  const ClassPartition cls = sym_three_classes();
  const StructTensor st = structure_constants(g, cls);
  verify_class_sum_identities(st, 6);

  // transpositions * transpositions = 3*identity + 3*(three-cycles)
  CHECK(st.at(1, 1, 0) == 3);
  CHECK(st.at(1, 1, 1) == 0);
  CHECK(st.at(1, 1, 2) == 3);
  // three-cycles * three-cycles = 2*identity + 1*(three-cycles)
  CHECK(st.at(2, 2, 0) == 2);
  CHECK(st.at(2, 2, 1) == 0);
  CHECK(st.at(2, 2, 2) == 1);
  // transpositions * three-cycles = 2*transpositions
  CHECK(st.at(1, 2, 0) == 0);
  CHECK(st.at(1, 2, 1) == 2);
  CHECK(st.at(1, 2, 2) == 0);

  const StructTensor brute = structure_constants_bruteforce(g, cls);
  CHECK(st.m == brute.m);
}

TEST_CASE("cyclic groups give convolution constants") {
  const Cyclic g{6};
  const ClassPartition cls = cyclic_classes(6);
  const StructTensor st = structure_constants(g, cls);
  verify_class_sum_identities(st, 6);
  for (std::uint32_t i = 0; i < 6; ++i)
    for (std::uint32_t j = 0; j < 6; ++j)
      for (std::uint32_t k = 0; k < 6; ++k)
        CHECK(st.at(i, j, k) == ((i + j) % 6 == k ? 1 : 0));
  CHECK(st.m == structure_constants_bruteforce(g, cls).m);
}

TEST_CASE("sweep and brute force agree on enumerated matrix groups") {
  // stabilizer groups for q = 2, 3 and the full group for q = 2
  for (auto [p, r, full] : {std::array<unsigned, 3>{2, 1, 0},
                            {3, 1, 0},
                            {2, 2, 0},
                            {2, 1, 1}}) {
    const FieldCtx f = make_field_ctx(p, r);
    const GroupCtx g =
        full ? build_psu(f, 1u << 20) : build_normalizer(f, 1u << 20);
    const ClassPartition cls = conjugacy_classes(g);
    const StructTensor st = structure_constants(g, cls);
    verify_class_sum_identities(st, g.size());
    const StructTensor brute = structure_constants_bruteforce(g, cls);
    CHECK(st.m == brute.m);
    CHECK(st.class_sizes == brute.class_sizes);
  }
}

TEST_CASE("sweep is independent of the thread count") {
  const FieldCtx f = make_field_ctx(3, 1);
  const GroupCtx g = build_normalizer(f, 1u << 20);
  const ClassPartition cls = conjugacy_classes(g);
  const StructTensor st1 = structure_constants(g, cls, 1);
  const StructTensor st3 = structure_constants(g, cls, 3);
  CHECK(st1.m == st3.m);

  std::size_t calls = 0, last_total = 0;
  const StructTensor stp =
      structure_constants(g, cls, 1, [&](std::size_t, std::size_t total) {
        ++calls;
        last_total = total;
      });
  CHECK(stp.m == st1.m);
  CHECK(calls == last_total);  // one tick per swept target class
  CHECK(calls >= cls.count() / 2);
  CHECK(calls <= cls.count());
}

TEST_CASE("identity verification rejects corrupted tensors") {
  const SymThree g;
  const ClassPartition cls = sym_three_classes();
  StructTensor st = structure_constants(g, cls);

  StructTensor bad = st;
  bad.at(1, 1, 0) += 1;
  CHECK_THROWS_AS(verify_class_sum_identities(bad, 6), CheckFailure);

  bad = st;
  bad.at(0, 1, 2) = 1;  // identity row must stay diagonal
  CHECK_THROWS_AS(verify_class_sum_identities(bad, 6), CheckFailure);

  CHECK_THROWS_AS(verify_class_sum_identities(st, 7), CheckFailure);
}

TEST_CASE("centre mod p reproduces known block and radical structure") {
  // the full centre of F_2[C_3] is semisimple with two blocks
  {
    const Cyclic g{3};
    const StructTensor st = structure_constants(g, cyclic_classes(3));
    const CommAlg z = centre_mod_p(st, 2);
    CHECK(z.dim == 3);
    CHECK(loewy_profile(z).dims == std::vector<std::size_t>{3, 0});
    CHECK(block_decompose(z).idempotents.size() == 2);
  }
  // centre of the q = 2 stabilizer algebra in characteristic 2:
  // dimension 5, radical of dimension 4, radical square zero
  {
    const FieldCtx f = make_field_ctx(2, 1);
    const GroupCtx g = build_normalizer(f, 1u << 20);
    const ClassPartition cls = conjugacy_classes(g);
    const StructTensor st = structure_constants(g, cls);
    const CommAlg z = centre_mod_p(st, 2);
    CHECK(z.dim == 5);
    CHECK(loewy_profile(z).dims == std::vector<std::size_t>{5, 4, 0});
  }
  // centre of the q = 3 stabilizer algebra in characteristic 3:
  // dimension 13 with Loewy profile 13, 12, 3, 0
  {
    const FieldCtx f = make_field_ctx(3, 1);
    const GroupCtx g = build_normalizer(f, 1u << 20);
    const ClassPartition cls = conjugacy_classes(g);
    const StructTensor st = structure_constants(g, cls);
    const CommAlg z = centre_mod_p(st, 3);
    CHECK(z.dim == 13);
    CHECK(loewy_profile(z).dims == std::vector<std::size_t>{13, 12, 3, 0});
    // augmentation sends a class sum to its size
    FpVec e1(z.dim, 0);
    e1[1] = 1;
    CHECK(z.aug_of(e1) == cls.sizes[1] % 3);
  }
}

TEST_CASE("constants dump lists classes then sparse rows") {
  const SymThree g;
  const ClassPartition cls = sym_three_classes();
  const StructTensor st = structure_constants(g, cls);
  std::ostringstream os;
  dump_constants_csv(os, st, {"e", "(ab)", "(abc)"});
  const std::string expect =
      "# class 0: size 1, inverse 0, rep e\n"
      "# class 1: size 3, inverse 1, rep (ab)\n"
      "# class 2: size 2, inverse 2, rep (abc)\n"
      "i,j,k,m\n"
      "0,0,0,1\n"
      "0,1,1,1\n"
      "0,2,2,1\n"
      "1,0,1,1\n"
      "1,1,0,3\n"
      "1,1,2,3\n"
      "1,2,1,2\n"
      "2,0,2,1\n"
      "2,1,1,2\n"
      "2,2,0,2\n"
      "2,2,2,1\n";
  CHECK(os.str() == expect);
}
