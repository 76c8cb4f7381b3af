#include "psu3/gfp_linalg.hpp"

#include <algorithm>
#include <cstdint>

#include "doctest.h"

using namespace psu3;

namespace {

struct SplitMix {
  std::uint64_t s;
  std::uint64_t next() {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint32_t below(std::uint32_t m) {
    return static_cast<std::uint32_t>(next() % m);
  }
};

MatFp random_mat(SplitMix& rng, unsigned p, std::size_t r, std::size_t c) {
  MatFp m(p, r, c);
  for (auto& x : m.a) x = static_cast<std::uint8_t>(rng.below(p));
  return m;
}

}  // namespace

TEST_CASE("matrix multiplication: identity, associativity, known product") {
  SplitMix rng{11};
  for (unsigned p : {2u, 3u, 5u, 13u}) {
    auto a = random_mat(rng, p, 7, 5);
    auto b = random_mat(rng, p, 5, 6);
    auto c = random_mat(rng, p, 6, 4);
    CHECK(mat_mul(MatFp::identity(p, 7), a) == a);
    CHECK(mat_mul(a, MatFp::identity(p, 5)) == a);
    CHECK(mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c)));
  }
  // hand-checked 2x2 over F_3: [[1,2],[0,1]] * [[1,1],[1,0]] = [[0,1],[1,0]]
  MatFp x(3, 2, 2), y(3, 2, 2);
  x.at(0, 0) = 1;
  x.at(0, 1) = 2;
  x.at(1, 1) = 1;
  y.at(0, 0) = 1;
  y.at(0, 1) = 1;
  y.at(1, 0) = 1;
  auto z = mat_mul(x, y);
  CHECK(z.at(0, 0) == 0);
  CHECK(z.at(0, 1) == 1);
  CHECK(z.at(1, 0) == 1);
  CHECK(z.at(1, 1) == 0);
}

TEST_CASE("mat_pow matches repeated multiplication") {
  SplitMix rng{23};
  auto m = random_mat(rng, 5, 4, 4);
  MatFp acc = MatFp::identity(5, 4);
  for (unsigned e = 0; e <= 6; ++e) {
    CHECK(mat_pow(m, e) == acc);
    acc = mat_mul(acc, m);
  }
}

TEST_CASE("rank: products bound rank, invertible constructions reach it") {
  SplitMix rng{37};
  for (unsigned p : {2u, 3u, 7u}) {
    CHECK(rank(MatFp::identity(p, 6)) == 6);
    // rank(A*B) <= k when A is n x k
    for (int trial = 0; trial < 20; ++trial) {
      std::size_t k = 1 + rng.below(3);
      auto a = random_mat(rng, p, 6, k);
      auto b = random_mat(rng, p, k, 6);
      CHECK(rank(mat_mul(a, b)) <= k);
    }
    // an upper unitriangular matrix is invertible
    auto u = random_mat(rng, p, 5, 5);
    for (std::size_t i = 0; i < 5; ++i) {
      u.at(i, i) = 1;
      for (std::size_t j = 0; j < i; ++j) u.at(i, j) = 0;
    }
    CHECK(rank(u) == 5);
  }
}

TEST_CASE("left_kernel: every basis row annihilates, dimension is n - rank") {
  SplitMix rng{59};
  for (unsigned p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 30; ++trial) {
      std::size_t r = 1 + rng.below(6), c = 1 + rng.below(6);
      auto m = random_mat(rng, p, r, c);
      auto ker = left_kernel(m);
      CHECK(ker.size() == r - rank(m));
      for (const auto& v : ker) {
        auto img = vec_mat(v, m);
        CHECK(std::all_of(img.begin(), img.end(),
                          [](std::uint8_t x) { return x == 0; }));
      }
      // kernel rows are linearly independent
      Subspace s(p, r);
      for (const auto& v : ker) CHECK(s.insert(v));
    }
  }
}

TEST_CASE("subspace: canonical form independent of insertion order") {
  SplitMix rng{101};
  for (unsigned p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t n = 6;
      std::vector<FpVec> vs;
      for (int i = 0; i < 5; ++i) {
        FpVec v(n);
        for (auto& x : v) x = static_cast<std::uint8_t>(rng.below(p));
        vs.push_back(v);
      }
      Subspace s1(p, n), s2(p, n);
      for (const auto& v : vs) s1.insert(v);
      for (auto it = vs.rbegin(); it != vs.rend(); ++it) s2.insert(*it);
      CHECK(s1 == s2);
      for (const auto& v : vs) CHECK(s1.contains(v));
      // random combinations stay inside
      FpVec combo(n, 0);
      for (const auto& v : vs) {
        unsigned c = rng.below(p);
        for (std::size_t j = 0; j < n; ++j)
          combo[j] = static_cast<std::uint8_t>((combo[j] + c * v[j]) % p);
      }
      CHECK(s1.contains(combo));
    }
  }
}

TEST_CASE("subspace reduce returns expansion coefficients") {
  SplitMix rng{131};
  const unsigned p = 7;
  const std::size_t n = 8;
  Subspace s(p, n);
  std::vector<FpVec> inserted;
  for (int i = 0; i < 4; ++i) {
    FpVec v(n);
    for (auto& x : v) x = static_cast<std::uint8_t>(rng.below(p));
    if (s.insert(v)) inserted.push_back(v);
  }
  for (int trial = 0; trial < 40; ++trial) {
    // random element of the span
    FpVec v(n, 0);
    for (const auto& row : s.rows()) {
      unsigned c = rng.below(p);
      for (std::size_t j = 0; j < n; ++j)
        v[j] = static_cast<std::uint8_t>((v[j] + c * row[j]) % p);
    }
    FpVec coeffs;
    FpVec rem = s.reduce(v, &coeffs);
    CHECK(std::all_of(rem.begin(), rem.end(),
                      [](std::uint8_t x) { return x == 0; }));
    // rebuild from coefficients
    FpVec re(n, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      for (std::size_t j = 0; j < n; ++j)
        re[j] = static_cast<std::uint8_t>((re[j] + coeffs[i] * s.rows()[i][j]) %
                                          p);
    CHECK(re == v);
  }
}
