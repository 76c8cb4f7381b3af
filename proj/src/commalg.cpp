#include "psu3/commalg.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

#include "psu3/check.hpp"
#include "psu3/fppoly.hpp"

namespace psu3 {

namespace {

struct SplitMix {
  std::uint64_t s;
  std::uint64_t next() {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::size_t below(std::size_t m) { return next() % m; }
};

bool is_zero_vec(const FpVec& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint8_t x) { return !x; });
}

}  // namespace

FpVec CommAlg::mul(const FpVec& u, const FpVec& v) const {
  PSU3_CHECK(u.size() == dim && v.size() == dim, "operand dimensions match");
  std::vector<std::uint32_t> acc(dim, 0);
  for (std::size_t i = 0; i < dim; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      const std::uint32_t c = static_cast<std::uint32_t>(u[i]) * v[j];
      if (c == 0) continue;
      const std::uint8_t* row = &sc[(i * dim + j) * dim];
      for (std::size_t k = 0; k < dim; ++k) acc[k] += c * row[k];
    }
  }
  FpVec out(dim);
  for (std::size_t k = 0; k < dim; ++k)
    out[k] = static_cast<std::uint8_t>(acc[k] % p);
  return out;
}

FpVec CommAlg::mul_basis(const FpVec& u, std::size_t j) const {
  std::vector<std::uint32_t> acc(dim, 0);
  for (std::size_t i = 0; i < dim; ++i) {
    if (u[i] == 0) continue;
    const std::uint8_t* row = &sc[(i * dim + j) * dim];
    const std::uint32_t c = u[i];
    for (std::size_t k = 0; k < dim; ++k) acc[k] += c * row[k];
  }
  FpVec out(dim);
  for (std::size_t k = 0; k < dim; ++k)
    out[k] = static_cast<std::uint8_t>(acc[k] % p);
  return out;
}

std::uint8_t CommAlg::aug_of(const FpVec& v) const {
  PSU3_CHECK(aug.has_value(), "algebra carries an augmentation");
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < dim; ++i) s += std::uint32_t(v[i]) * (*aug)[i];
  return static_cast<std::uint8_t>(s % p);
}

CommAlg make_comm_alg(unsigned p, std::size_t dim, std::vector<std::uint8_t> sc,
                      FpVec unit, std::optional<FpVec> aug,
                      AlgebraChecks checks, std::uint64_t seed) {
  if (p < 2) throw std::invalid_argument("p must be a prime");
  if (sc.size() != dim * dim * dim)
    throw std::invalid_argument("structure constant table has wrong size");
  if (unit.size() != dim)
    throw std::invalid_argument("unit vector has wrong size");
  if (aug && aug->size() != dim)
    throw std::invalid_argument("augmentation vector has wrong size");
  for (auto& x : sc) x = static_cast<std::uint8_t>(x % p);
  for (auto& x : unit) x = static_cast<std::uint8_t>(x % p);
  if (aug)
    for (auto& x : *aug) x = static_cast<std::uint8_t>(x % p);

  CommAlg A;
  A.p = p;
  A.dim = dim;
  A.sc = std::move(sc);
  A.unit = std::move(unit);
  A.aug = std::move(aug);
  if (dim == 0) return A;

  // commutativity: the (i,j) and (j,i) rows agree
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      PSU3_CHECK(std::memcmp(&A.sc[(i * dim + j) * dim],
                             &A.sc[(j * dim + i) * dim], dim) == 0,
                 "structure constants are commutative");

  // unit axiom: 1 * b_j = b_j
  for (std::size_t j = 0; j < dim; ++j) {
    FpVec img = A.mul_basis(A.unit, j);
    for (std::size_t k = 0; k < dim; ++k)
      PSU3_CHECK(img[k] == (k == j ? 1 : 0), "unit acts as identity");
  }

  // augmentation: eps(1) = 1 and eps(b_i b_j) = eps(b_i) eps(b_j)
  if (A.aug) {
    PSU3_CHECK(A.aug_of(A.unit) == 1, "augmentation of the unit is 1");
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        std::uint32_t s = 0;
        const std::uint8_t* row = &A.sc[(i * dim + j) * dim];
        for (std::size_t k = 0; k < dim; ++k)
          s += std::uint32_t(row[k]) * (*A.aug)[k];
        PSU3_CHECK(s % p ==
                       std::uint32_t((*A.aug)[i]) * (*A.aug)[j] % p,
                   "augmentation is multiplicative");
      }
  }

  // associativity
  auto assoc_triple = [&](std::size_t i, std::size_t j, std::size_t k) {
    FpVec bij(A.sc.begin() + static_cast<std::ptrdiff_t>((i * dim + j) * dim),
              A.sc.begin() + static_cast<std::ptrdiff_t>((i * dim + j + 1) * dim));
    FpVec bjk(A.sc.begin() + static_cast<std::ptrdiff_t>((j * dim + k) * dim),
              A.sc.begin() + static_cast<std::ptrdiff_t>((j * dim + k + 1) * dim));
    PSU3_CHECK(A.mul_basis(bij, k) == A.mul_basis(bjk, i),
               "structure constants are associative");
    // (b_j b_k) * b_i = b_i * (b_j b_k) by the commutativity already checked
  };
  if (checks == AlgebraChecks::kFull && dim <= 64) {
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k) assoc_triple(i, j, k);
  } else if (checks != AlgebraChecks::kNone) {
    SplitMix rng{seed ? seed : 1};
    const std::size_t samples = 5000;
    for (std::size_t t = 0; t < samples; ++t)
      assoc_triple(rng.below(dim), rng.below(dim), rng.below(dim));
  }
  return A;
}

MatFp frobenius_matrix(const CommAlg& A) {
  MatFp P(A.p, A.dim, A.dim);
  for (std::size_t i = 0; i < A.dim; ++i) {
    FpVec x(A.dim, 0);
    x[i] = 1;
    for (unsigned step = 1; step < A.p; ++step) x = A.mul_basis(x, i);
    std::copy(x.begin(), x.end(), P.row(i));
  }
  return P;
}

Subspace radical_basis(const CommAlg& A) {
  if (A.dim == 0) return Subspace(A.p, 0);
  // smallest m with p^m >= dim
  unsigned m = 1;
  unsigned long long pm = A.p;
  while (pm < A.dim) {
    pm *= A.p;
    ++m;
  }
  MatFp Q = mat_pow(frobenius_matrix(A), m);
  Subspace rad(A.p, A.dim);
  for (auto& v : left_kernel(Q)) rad.insert(std::move(v));
  return rad;
}

Subspace ideal_product(const CommAlg& A, const Subspace& I, const Subspace& J) {
  PSU3_CHECK(I.ambient() == A.dim && J.ambient() == A.dim,
             "ideal ambient dimensions match the algebra");
  const std::size_t n = A.dim;
  Subspace result(A.p, n);
  if (I.dim() == 0 || J.dim() == 0) return result;

  // products are symmetric (commutative algebra): iterate u over the smaller
  // side, precompute the multiplication image matrix of u once, then sweep
  const Subspace& S = (I.dim() <= J.dim()) ? I : J;
  const Subspace& T = (I.dim() <= J.dim()) ? J : I;
  const bool same = (&I == &J) || (I.rows() == J.rows());

  std::vector<FpVec> grew;
  std::vector<std::uint32_t> acc(n * n);
  for (std::size_t s = 0; s < S.dim(); ++s) {
    const FpVec& u = S.rows()[s];
    // M[j][k]: coordinates of u * b_j
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (u[i] == 0) continue;
      const std::uint32_t c = u[i];
      const std::uint8_t* block = &A.sc[i * n * n];
      for (std::size_t jk = 0; jk < n * n; ++jk) acc[jk] += c * block[jk];
    }
    MatFp M(A.p, n, n);
    for (std::size_t jk = 0; jk < n * n; ++jk)
      M.a[jk] = static_cast<std::uint8_t>(acc[jk] % A.p);

    for (std::size_t t = same ? s : 0; t < T.dim(); ++t) {
      FpVec prod = vec_mat(T.rows()[t], M);
      if (result.insert(prod)) grew.push_back(std::move(prod));
    }
  }

  // close the span into an ideal: multiply every generating vector by every
  // basis element until nothing new appears (only vectors that grew the span
  // generate it, so only those need processing)
  while (!grew.empty()) {
    FpVec v = std::move(grew.back());
    grew.pop_back();
    for (std::size_t j = 0; j < n; ++j) {
      FpVec w = A.mul_basis(v, j);
      if (result.insert(w)) grew.push_back(std::move(w));
    }
  }
  return result;
}

LoewyProfile loewy_profile(const CommAlg& A) {
  LoewyProfile prof;
  prof.dims.push_back(A.dim);
  if (A.dim == 0) return prof;
  Subspace J = radical_basis(A);
  Subspace cur = J;
  prof.dims.push_back(cur.dim());
  while (cur.dim() > 0) {
    Subspace next = ideal_product(A, cur, J);
    PSU3_CHECK(next.dim() < cur.dim(),
               "radical powers strictly decrease until zero");
    prof.dims.push_back(next.dim());
    cur = std::move(next);
  }
  return prof;
}

namespace {

// Quotient A/J on the standard complement of J (the non-pivot coordinates).
struct Quotient {
  CommAlg alg;                        // the quotient algebra
  std::vector<std::size_t> coords;    // ambient index of each quotient coord
};

Quotient make_quotient(const CommAlg& A, const Subspace& J) {
  const std::size_t n = A.dim;
  std::vector<bool> is_pivot(n, false);
  for (auto c : J.pivots()) is_pivot[c] = true;
  Quotient Q;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) Q.coords.push_back(c);
  const std::size_t d = Q.coords.size();

  // reducing any vector by J's RREF rows zeroes the pivot coordinates, so the
  // remainder reads off directly in the complement coordinates
  auto project = [&](const FpVec& v) {
    FpVec r = J.reduce(v);
    FpVec out(d);
    for (std::size_t a = 0; a < d; ++a) out[a] = r[Q.coords[a]];
    return out;
  };

  std::vector<std::uint8_t> sc(d * d * d, 0);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a; b < d; ++b) {
      FpVec ea(n, 0), eb(n, 0);
      ea[Q.coords[a]] = 1;
      eb[Q.coords[b]] = 1;
      FpVec prod = project(A.mul(ea, eb));
      std::copy(prod.begin(), prod.end(), &sc[(a * d + b) * d]);
      std::copy(prod.begin(), prod.end(), &sc[(b * d + a) * d]);
    }
  Q.alg = make_comm_alg(A.p, d, std::move(sc), project(A.unit), std::nullopt,
                        AlgebraChecks::kNone);
  return Q;
}

// minimal polynomial of a relative to the corner unit e (so a^0 := e)
fppoly::Poly minimal_polynomial(const CommAlg& A, const FpVec& e,
                                const FpVec& a) {
  std::vector<FpVec> powers = {e};
  Subspace span(A.p, A.dim);
  span.insert(e);
  FpVec cur = e;
  for (;;) {
    cur = A.mul(cur, a);
    FpVec coeffs;
    FpVec rem = span.reduce(cur, &coeffs);
    if (is_zero_vec(rem)) {
      // first linear dependency: solve sum_i kv[i] a^i + kv[t] a^t = 0 on the
      // raw power matrix, then normalize to a monic polynomial
      const std::size_t t = powers.size();
      MatFp Msys(A.p, t + 1, A.dim);
      for (std::size_t i = 0; i < t; ++i)
        std::copy(powers[i].begin(), powers[i].end(), Msys.row(i));
      std::copy(cur.begin(), cur.end(), Msys.row(t));
      for (const auto& kv : left_kernel(Msys)) {
        if (kv[t] == 0) continue;
        const unsigned scale = fp_inv(kv[t], A.p);
        fppoly::Poly f(t + 1, 0);
        f[t] = 1;
        for (std::size_t i = 0; i < t; ++i)
          f[i] = static_cast<unsigned>(std::uint32_t(kv[i]) * scale % A.p);
        return f;
      }
      PSU3_CHECK(false, "dependency among powers yields a minimal polynomial");
    }
    powers.push_back(cur);
    span.insert(cur);
    PSU3_CHECK(powers.size() <= A.dim + 1, "minimal polynomial terminates");
  }
}

// evaluate h at a inside the corner with unit e
FpVec eval_poly(const CommAlg& A, const FpVec& e, const FpVec& a,
                const fppoly::Poly& h) {
  FpVec result(A.dim, 0);
  for (std::size_t i = h.size(); i-- > 0;) {
    result = A.mul(result, a);
    if (h[i]) {
      for (std::size_t k = 0; k < A.dim; ++k)
        result[k] = static_cast<std::uint8_t>(
            (result[k] + std::uint32_t(h[i]) * e[k]) % A.p);
    }
  }
  return result;
}

// split e along the distinct irreducible factors of the minimal polynomial
// of a; returns the CRT idempotent components (size >= 2) or empty if the
// minimal polynomial is irreducible or linear
std::vector<FpVec> try_split(const CommAlg& A, const FpVec& e, const FpVec& a) {
  fppoly::Poly f = minimal_polynomial(A, e, a);
  if (f.size() <= 2) return {};
  auto factors = fppoly::factor_squarefree(f, A.p);
  if (factors.size() < 2) return {};
  std::vector<FpVec> parts;
  FpVec sum(A.dim, 0);
  for (const auto& fi : factors) {
    auto [ui, rem] = fppoly::divmod(f, fi, A.p);
    PSU3_CHECK(rem.empty(), "factor divides the minimal polynomial");
    fppoly::Poly wi = fppoly::ext_inverse(ui, fi, A.p);
    fppoly::Poly hi = fppoly::mul(ui, wi, A.p);
    FpVec ei = eval_poly(A, e, a, hi);
    PSU3_CHECK(!is_zero_vec(ei), "CRT component idempotent is nonzero");
    for (std::size_t k = 0; k < A.dim; ++k)
      sum[k] = static_cast<std::uint8_t>((sum[k] + ei[k]) % A.p);
    parts.push_back(std::move(ei));
  }
  PSU3_CHECK(sum == e, "CRT component idempotents sum to the corner unit");
  return parts;
}

}  // namespace

BlockDecomposition block_decompose(const CommAlg& A) {
  PSU3_CHECK(A.dim > 0, "block decomposition of a nonzero algebra");
  const Subspace J = radical_basis(A);
  Quotient Q = make_quotient(A, J);
  const CommAlg& Abar = Q.alg;
  const std::size_t d = Abar.dim;

  // certificate: the number of primitive idempotents equals the dimension of
  // the fixed space of Frobenius on the semisimple quotient
  MatFp F = frobenius_matrix(Abar);
  for (std::size_t i = 0; i < d; ++i)
    F.at(i, i) = static_cast<std::uint8_t>((F.at(i, i) + A.p - 1) % A.p);
  const std::size_t s = left_kernel(F).size();
  PSU3_CHECK(s >= 1, "at least one block");

  // split the unit of A/J by minimal polynomials until the certificate count
  // is reached; candidates come from corner bases, then pairwise products
  std::vector<FpVec> idems = {Abar.unit};
  for (unsigned pass = 0; idems.size() < s; ++pass) {
    PSU3_CHECK(pass < 64, "idempotent splitting reaches the certified count");
    std::vector<FpVec> next;
    bool progressed = false;
    for (const FpVec& e : idems) {
      Subspace corner(A.p, d);
      for (std::size_t j = 0; j < d; ++j) {
        FpVec ej(d, 0);
        ej[j] = 1;
        corner.insert(Abar.mul(e, ej));
      }
      std::vector<FpVec> parts;
      for (const FpVec& cand : corner.rows()) {
        parts = try_split(Abar, e, cand);
        if (!parts.empty()) break;
      }
      if (parts.empty()) {
        // fallback: products of corner basis pairs
        const auto& rows = corner.rows();
        for (std::size_t x = 0; x < rows.size() && parts.empty(); ++x)
          for (std::size_t y = x; y < rows.size() && parts.empty(); ++y)
            parts = try_split(Abar, e, Abar.mul(rows[x], rows[y]));
      }
      if (parts.empty()) {
        next.push_back(e);
      } else {
        progressed = true;
        for (auto& piece : parts) next.push_back(std::move(piece));
      }
    }
    PSU3_CHECK(progressed || idems.size() == s,
               "every non-primitive idempotent eventually splits");
    idems = std::move(next);
  }
  PSU3_CHECK(idems.size() == s, "block count matches the Frobenius certificate");

  // lift through the radical: e <- 3e^2 - 2e^3 squares the defect e^2 - e,
  // which lies in J and is nilpotent, so the iteration reaches a true
  // idempotent (in char 2 the update degenerates to e <- e^2, same argument)
  BlockDecomposition out;
  for (const FpVec& ebar : idems) {
    FpVec e(A.dim, 0);
    for (std::size_t aIdx = 0; aIdx < d; ++aIdx) e[Q.coords[aIdx]] = ebar[aIdx];
    for (unsigned it = 0;; ++it) {
      PSU3_CHECK(it < 64, "idempotent lifting terminates");
      FpVec e2 = A.mul(e, e);
      if (e2 == e) break;
      FpVec e3 = A.mul(e2, e);
      for (std::size_t k = 0; k < A.dim; ++k)
        e[k] = static_cast<std::uint8_t>(
            (3u * e2[k] + 2u * (A.p - 1) * e3[k]) % A.p);
    }
    PSU3_CHECK(!is_zero_vec(e), "lifted idempotent is nonzero");
    out.idempotents.push_back(std::move(e));
  }

  std::sort(out.idempotents.begin(), out.idempotents.end());

  // orthogonality and completeness
  FpVec total(A.dim, 0);
  for (const auto& e : out.idempotents)
    for (std::size_t k = 0; k < A.dim; ++k)
      total[k] = static_cast<std::uint8_t>((total[k] + e[k]) % A.p);
  PSU3_CHECK(total == A.unit, "idempotents sum to the unit");
  for (std::size_t i = 0; i < out.idempotents.size(); ++i)
    for (std::size_t j = i + 1; j < out.idempotents.size(); ++j)
      PSU3_CHECK(is_zero_vec(A.mul(out.idempotents[i], out.idempotents[j])),
                 "block idempotents are orthogonal");

  if (A.aug) {
    std::size_t hits = 0;
    for (std::size_t i = 0; i < out.idempotents.size(); ++i) {
      const auto v = A.aug_of(out.idempotents[i]);
      PSU3_CHECK(v == 0 || v == 1, "augmentation of an idempotent is 0 or 1");
      if (v == 1) {
        out.principal = i;
        ++hits;
      }
    }
    PSU3_CHECK(hits == 1, "exactly one idempotent has augmentation 1");
  }
  return out;
}

CommAlg corner_algebra(const CommAlg& A, const FpVec& e) {
  if (e.size() != A.dim) throw std::invalid_argument("corner element size");
  if (A.mul(e, e) != e) throw std::invalid_argument("corner element not idempotent");

  Subspace basis(A.p, A.dim);
  for (std::size_t j = 0; j < A.dim; ++j) basis.insert(A.mul_basis(e, j));
  const std::size_t d = basis.dim();

  auto coords_of = [&](const FpVec& v) {
    FpVec coeffs;
    FpVec rem = basis.reduce(v, &coeffs);
    PSU3_CHECK(is_zero_vec(rem), "corner is closed under its operations");
    return coeffs;
  };

  std::vector<std::uint8_t> sc(d * d * d, 0);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a; b < d; ++b) {
      FpVec prod = coords_of(A.mul(basis.rows()[a], basis.rows()[b]));
      std::copy(prod.begin(), prod.end(), &sc[(a * d + b) * d]);
      std::copy(prod.begin(), prod.end(), &sc[(b * d + a) * d]);
    }

  std::optional<FpVec> aug;
  if (A.aug && A.aug_of(e) == 1) {
    FpVec av(d);
    for (std::size_t a = 0; a < d; ++a) av[a] = A.aug_of(basis.rows()[a]);
    aug = std::move(av);
  }
  return make_comm_alg(A.p, d, std::move(sc), coords_of(e), std::move(aug),
                       AlgebraChecks::kNone);
}

}  // namespace psu3
