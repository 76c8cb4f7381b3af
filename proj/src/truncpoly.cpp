#include "psu3/truncpoly.hpp"

#include <stdexcept>

#include "psu3/check.hpp"

namespace psu3 {

CommAlg tensor_truncated(const CommAlg& A, unsigned p) {
  if (p != A.p)
    throw std::invalid_argument(
        "truncation degree must equal the characteristic");
  const std::size_t n = A.dim, d = n * p;
  std::vector<std::uint8_t> sc(d * d * d, 0);
  for (std::size_t i1 = 0; i1 < n; ++i1)
    for (unsigned j1 = 0; j1 < p; ++j1)
      for (std::size_t i2 = 0; i2 < n; ++i2)
        for (unsigned j2 = 0; j2 < p; ++j2) {
          if (j1 + j2 >= p) continue;  // X^p = 0
          const std::size_t a = i1 * p + j1, b = i2 * p + j2;
          for (std::size_t k = 0; k < n; ++k)
            sc[(a * d + b) * d + (k * p + j1 + j2)] = A.sc_at(i1, i2, k);
        }
  FpVec unit(d, 0);
  for (std::size_t k = 0; k < n; ++k) unit[k * p] = A.unit[k];
  std::optional<FpVec> aug;
  if (A.aug) {
    // X -> 0 extends the augmentation
    FpVec av(d, 0);
    for (std::size_t k = 0; k < n; ++k) av[k * p] = (*A.aug)[k];
    aug = std::move(av);
  }
  // the parent is already validated; a sampled pass guards the embedding
  return make_comm_alg(A.p, d, std::move(sc), std::move(unit), std::move(aug),
                       d <= 64 ? AlgebraChecks::kFull : AlgebraChecks::kSampled);
}

CommAlg prime_field_algebra(unsigned p) {
  return make_comm_alg(p, 1, {1}, {1}, FpVec{1});
}

CommAlg truncated_polynomial_ring(unsigned p) {
  return tensor_truncated(prime_field_algebra(p), p);
}

namespace {

// index of the last nonzero entry (profiles are strictly decreasing with a
// trailing zero, so this is dims.size() - 2 for a nonzero algebra)
std::size_t last_nonzero_power(const LoewyProfile& profile) {
  if (profile.dims.empty() || profile.dims.back() != 0)
    throw std::invalid_argument("profile must end with the zero power");
  if (profile.dims.size() < 2)
    throw std::invalid_argument("profile of the zero algebra");
  return profile.dims.size() - 2;
}

}  // namespace

TensorPrediction predicted_tensor_profile(const LoewyProfile& profile,
                                          unsigned p) {
  const std::size_t n = last_nonzero_power(profile);
  return TensorPrediction{n + p, profile.dims[n]};
}

bool distinguishable(const LoewyProfile& a, const LoewyProfile& b, unsigned p) {
  const auto pa = predicted_tensor_profile(a, p);
  const auto pb = predicted_tensor_profile(b, p);
  return !(pa == pb);
}

MatZ cartan_scale(const MatZ& c, long long d) {
  MatZ out = c;
  for (auto& row : out)
    for (auto& x : row) x *= d;
  return out;
}

unsigned p_rank(const MatZ& c, unsigned p) {
  if (c.empty()) return 0;
  MatFp m(p, c.size(), c[0].size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    PSU3_CHECK(c[i].size() == c[0].size(), "matrix rows have equal length");
    for (std::size_t j = 0; j < c[i].size(); ++j) {
      long long v = c[i][j] % static_cast<long long>(p);
      if (v < 0) v += p;
      m.at(i, j) = static_cast<std::uint8_t>(v);
    }
  }
  return rank(m);
}

}  // namespace psu3
