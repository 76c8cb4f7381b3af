#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "psu3/check.hpp"
#include "psu3/commalg.hpp"

namespace psu3 {

// Conjugacy class data over an indexed group: elements are 0..n-1, classes
// 0..count()-1 ordered canonically (ascending size, then smallest element
// index; class 0 is always the identity's class).
struct ClassPartition {
  std::vector<std::uint32_t> class_of;       // element index -> class id
  std::vector<std::uint32_t> rep;            // class id -> element index
  std::vector<std::uint64_t> sizes;          // class id -> class size
  std::vector<std::uint32_t> inverse_class;  // class id -> class of inverses
  std::size_t count() const { return rep.size(); }
};

// Class-sum structure constants: m[(i*n + j)*n + k] counts the pairs
// (x, y) in C_i x C_j with x*y equal to the fixed representative of C_k.
struct StructTensor {
  std::size_t n = 0;
  std::vector<std::int64_t> m;
  std::vector<std::uint64_t> class_sizes;
  std::vector<std::uint32_t> inverse_class;

  std::int64_t at(std::size_t i, std::size_t j, std::size_t k) const {
    return m[(i * n + j) * n + k];
  }
  std::int64_t& at(std::size_t i, std::size_t j, std::size_t k) {
    return m[(i * n + j) * n + k];
  }
};

// Verifies the class-sum identities every structure tensor must satisfy:
//   (1) m[i][j][k] = m[j][i][k]
//   (2) m[i'][j'][k'] = m[i][j][k]           (primes: inverse classes)
//   (3) m[i][j][k] |C_k| = m[k][j'][i] |C_i| = m[k][i'][j] |C_j|
//   (4) sum_k m[i][j][k] |C_k| = |C_i| |C_j|  (augmentation)
//   (5) m[0][j][k] = delta_{jk}
// Throws CheckFailure on any violation.
void verify_class_sum_identities(const StructTensor& st,
                                 std::uint64_t group_order);

// Centre of the group algebra over F_p on the class-sum basis, with the
// augmentation sending each class sum to its size.
CommAlg centre_mod_p(const StructTensor& st, unsigned p);

// CSV dump: one "i,j,k,m" row per nonzero constant, preceded by comment
// lines naming each class (index, size, representative).
void dump_constants_csv(std::ostream& os, const StructTensor& st,
                        const std::vector<std::string>& class_names);

using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

// Structure constants by the per-target-class sweep: for a fixed target
// representative z_k, every group element x contributes one pair
// (x, x^{-1} z_k), so one pass over the group fills the whole k-slice.
// Only targets with k <= inverse_class[k] are swept; the mirrored slice
// follows from identity (2). Requirements on Group:
//   size() -> element count, mult(i, j) -> index, inv(i) -> index.
template <class Group>
StructTensor structure_constants(const Group& g, const ClassPartition& cls,
                                 unsigned threads = 1,
                                 const ProgressFn& progress = {}) {
  const std::size_t n = cls.count();
  const std::size_t order = static_cast<std::size_t>(g.size());
  StructTensor st;
  st.n = n;
  st.m.assign(n * n * n, 0);
  st.class_sizes = cls.sizes;
  st.inverse_class = cls.inverse_class;

  std::vector<std::uint32_t> inv_of(order);
  for (std::size_t x = 0; x < order; ++x)
    inv_of[x] = g.inv(static_cast<std::uint32_t>(x));

  std::vector<std::size_t> targets;
  for (std::size_t k = 0; k < n; ++k)
    if (k <= cls.inverse_class[k]) targets.push_back(k);

  std::atomic<std::size_t> next{0}, done{0};
  auto worker = [&]() {
    std::vector<std::int64_t> slice(n * n);
    for (;;) {
      const std::size_t t = next.fetch_add(1);
      if (t >= targets.size()) break;
      const std::size_t k = targets[t];
      const std::uint32_t zk = cls.rep[k];
      std::fill(slice.begin(), slice.end(), 0);
      for (std::size_t x = 0; x < order; ++x) {
        const std::uint32_t y = g.mult(inv_of[x], zk);
        slice[cls.class_of[x] * n + cls.class_of[y]] += 1;
      }
      const std::size_t kin = cls.inverse_class[k];
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const std::int64_t v = slice[i * n + j];
          st.at(i, j, k) = v;
          if (kin != k)
            st.at(cls.inverse_class[i], cls.inverse_class[j], kin) = v;
        }
      if (progress) progress(done.fetch_add(1) + 1, targets.size());
    }
  };

  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return st;
}

// Reference implementation: the full double loop over all element pairs,
// counting products into every slice. Quadratic in the group order; used to
// cross-check the sweep on small groups.
template <class Group>
StructTensor structure_constants_bruteforce(const Group& g,
                                            const ClassPartition& cls) {
  const std::size_t n = cls.count();
  const std::size_t order = static_cast<std::size_t>(g.size());
  StructTensor st;
  st.n = n;
  st.m.assign(n * n * n, 0);
  st.class_sizes = cls.sizes;
  st.inverse_class = cls.inverse_class;

  // z runs over class representatives only: pairs with x*y = z_k
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      const std::uint32_t z = g.mult(static_cast<std::uint32_t>(x),
                                     static_cast<std::uint32_t>(y));
      const std::uint32_t k = cls.class_of[z];
      if (cls.rep[k] == z)
        st.at(cls.class_of[x], cls.class_of[y], k) += 1;
    }
  return st;
}

}  // namespace psu3
