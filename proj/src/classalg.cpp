#include "psu3/classalg.hpp"

namespace psu3 {

void verify_class_sum_identities(const StructTensor& st,
                                 std::uint64_t group_order) {
  const std::size_t n = st.n;
  PSU3_CHECK(st.m.size() == n * n * n, "tensor storage has n^3 entries");
  PSU3_CHECK(st.class_sizes.size() == n, "one size per class");
  PSU3_CHECK(st.inverse_class.size() == n, "one inverse per class");

  std::uint64_t total = 0;
  for (std::uint64_t s : st.class_sizes) total += s;
  PSU3_CHECK(total == group_order, "class sizes sum to the group order");

  const auto& ic = st.inverse_class;
  const auto& cs = st.class_sizes;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t aug = 0;
      for (std::size_t k = 0; k < n; ++k) {
        const std::int64_t v = st.at(i, j, k);
        PSU3_CHECK(v >= 0, "pair counts are non-negative");
        PSU3_CHECK(v == st.at(j, i, k),
                   "constants are symmetric in the two factor classes");
        PSU3_CHECK(v == st.at(ic[i], ic[j], ic[k]),
                   "constants are invariant under inverting all classes");
        PSU3_CHECK(v * static_cast<std::int64_t>(cs[k]) ==
                       st.at(k, ic[j], i) * static_cast<std::int64_t>(cs[i]),
                   "size-weighted rotation identity (first form)");
        PSU3_CHECK(v * static_cast<std::int64_t>(cs[k]) ==
                       st.at(k, ic[i], j) * static_cast<std::int64_t>(cs[j]),
                   "size-weighted rotation identity (second form)");
        aug += v * static_cast<std::int64_t>(cs[k]);
      }
      PSU3_CHECK(aug == static_cast<std::int64_t>(cs[i]) *
                            static_cast<std::int64_t>(cs[j]),
                 "augmentation: weighted row sums equal the size product");
    }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      PSU3_CHECK(st.at(0, j, k) == (j == k ? 1 : 0),
                 "the identity class acts as the unit");
}

CommAlg centre_mod_p(const StructTensor& st, unsigned p) {
  const std::size_t n = st.n;
  std::vector<std::uint8_t> sc(n * n * n);
  for (std::size_t idx = 0; idx < sc.size(); ++idx) {
    PSU3_CHECK(st.m[idx] >= 0, "pair counts are non-negative");
    sc[idx] = static_cast<std::uint8_t>(st.m[idx] % p);
  }
  FpVec unit(n, 0);
  unit[0] = 1;
  FpVec aug(n);
  for (std::size_t i = 0; i < n; ++i)
    aug[i] = static_cast<std::uint8_t>(st.class_sizes[i] % p);
  return make_comm_alg(p, n, std::move(sc), std::move(unit), std::move(aug));
}

void dump_constants_csv(std::ostream& os, const StructTensor& st,
                        const std::vector<std::string>& class_names) {
  PSU3_CHECK(class_names.size() == st.n, "one name per class");
  for (std::size_t i = 0; i < st.n; ++i)
    os << "# class " << i << ": size " << st.class_sizes[i] << ", inverse "
       << st.inverse_class[i] << ", rep " << class_names[i] << "\n";
  os << "i,j,k,m\n";  // zero constants are omitted
  for (std::size_t i = 0; i < st.n; ++i)
    for (std::size_t j = 0; j < st.n; ++j)
      for (std::size_t k = 0; k < st.n; ++k)
        if (const std::int64_t v = st.at(i, j, k); v != 0)
          os << i << ',' << j << ',' << k << ',' << v << "\n";
}

}  // namespace psu3
