#include "psu3/zkncf.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace psu3 {

namespace {

struct PrimePower {
  unsigned p, r;
};

PrimePower factor_prime_power(unsigned q) {
  if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
  unsigned p = 0;
  for (unsigned d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) return {q, 1};  // q itself is prime
  unsigned r = 0, rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++r;
  }
  if (rest != 1) throw std::invalid_argument("q must be a prime power");
  return {p, r};
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// D-label m lies in the norm-one circle iff its representative g^m does
bool d_in_psi(const ZkNModel& M, std::uint32_t m) {
  return m % (M.q - 1) == 0;
}

std::uint32_t d_to_t(const ZkNModel& M, std::uint32_t m) {
  PSU3_CHECK(d_in_psi(M, m), "only norm-one diagonal labels convert");
  return m / (M.q - 1);
}

}  // namespace

ZkNModel make_zkn_model(unsigned q) {
  const PrimePower pp = factor_prime_power(q);
  ZkNModel M;
  M.q = q;
  M.p = pp.p;
  M.r = pp.r;
  M.gamma = std::gcd(3u, q + 1);
  M.n_d = (q * q - 1) / M.gamma;
  M.n_t = (q + 1) / M.gamma;
  M.n_u = M.gamma;
  M.dim = M.n_d + M.n_t + M.n_u;
  if (M.gamma == 3) M.lmn = lmn_closed(q);
  return M;
}

Lmn lmn_closed(unsigned q) {
  if (std::gcd(3u, q + 1) != 3)
    throw std::invalid_argument("coset counts need q = 2 mod 3");
  const std::int64_t s = (q + 1) / 3;
  return Lmn{s * s - 1, (static_cast<std::int64_t>(q) * q - q - 2) / 9, s * s};
}

Lmn lmn_bruteforce(const FieldCtx& f) {
  if (f.gamma != 3)
    throw std::invalid_argument("coset counts need gamma = 3");
  // t: the least-log element outside L (a non-cube)
  Fq2 t = 0;
  for (Fq2 x = 1; x < f.q2; ++x)
    if (!subset_member(f, x, Subset::L)) {
      t = x;
      break;
    }
  PSU3_CHECK(t != 0, "a non-cube exists when gamma = 3");
  const auto in_l = [&](Fq2 x) { return x != 0 && subset_member(f, x, Subset::L); };
  Lmn out;
  for (Fq2 v = 1; v < f.q2; ++v) {
    if (!in_l(v)) continue;
    if (in_l(f.sub(f.one(), v))) ++out.l;
    if (in_l(f.sub(t, v))) ++out.m;
    if (in_l(f.sub(t, f.div(v, t)))) ++out.n;
  }
  return out;
}

std::uint32_t flat_index(const ZkNModel& M, BasisLabel l) {
  switch (l.kind) {
    case LabelKind::D:
      PSU3_CHECK(l.idx < M.n_d, "diagonal label in range");
      return l.idx;
    case LabelKind::T:
      PSU3_CHECK(l.idx < M.n_t, "norm-one label in range");
      return M.n_d + l.idx;
    case LabelKind::U:
      PSU3_CHECK(l.idx < M.n_u, "unipotent label in range");
      return M.n_d + M.n_t + l.idx;
  }
  PSU3_CHECK(false, "label kind is one of D, T, U");
  return 0;
}

BasisLabel label_of(const ZkNModel& M, std::uint32_t flat) {
  PSU3_CHECK(flat < M.dim, "flat index in range");
  if (flat < M.n_d) return {LabelKind::D, flat};
  if (flat < M.n_d + M.n_t) return {LabelKind::T, flat - M.n_d};
  return {LabelKind::U, flat - M.n_d - M.n_t};
}

std::vector<BasisLabel> all_labels(const ZkNModel& M) {
  std::vector<BasisLabel> out;
  out.reserve(M.dim);
  for (std::uint32_t i = 0; i < M.dim; ++i) out.push_back(label_of(M, i));
  return out;
}

std::uint64_t class_size(const ZkNModel& M, BasisLabel l) {
  const std::uint64_t q = M.q;
  switch (l.kind) {
    case LabelKind::D:
      if (l.idx == 0) return 1;
      return d_in_psi(M, l.idx) ? q * q : q * q * q;
    case LabelKind::T:
      return l.idx == 0 ? q - 1 : q * q * (q - 1);
    case LabelKind::U:
      return q * (q * q - 1) / M.gamma;
  }
  PSU3_CHECK(false, "label kind is one of D, T, U");
  return 0;
}

std::string label_name(const ZkNModel& M, BasisLabel l) {
  flat_index(M, l);  // range check
  std::ostringstream os;
  os << (l.kind == LabelKind::D ? 'D' : l.kind == LabelKind::T ? 'T' : 'U')
     << l.idx;
  return os.str();
}

Mat3 label_matrix(const FieldCtx& f, const ZkNModel& M, BasisLabel l) {
  PSU3_CHECK(f.q == M.q, "field matches the model");
  flat_index(M, l);  // range check
  const SpecialElems se = special_elements(f);
  switch (l.kind) {
    case LabelKind::D:
      return param_to_elem(f, {f.from_log(l.idx), 0, 0});
    case LabelKind::T: {
      const Fq2 x = f.from_log(static_cast<unsigned long long>(l.idx) * (f.q - 1));
      return param_to_elem(f, {x, 0, f.mul(x, se.omega)});
    }
    case LabelKind::U: {
      const Fq2 v = f.from_log(l.idx);
      return param_to_elem(f, {f.one(), v, f.mul(f.mul(v, f.bar(v)), se.tau)});
    }
  }
  PSU3_CHECK(false, "label kind is one of D, T, U");
  return {};
}

SparseRow product_of_labels(const ZkNModel& M, BasisLabel a, BasisLabel b) {
  flat_index(M, a);
  flat_index(M, b);
  if (static_cast<int>(a.kind) > static_cast<int>(b.kind)) std::swap(a, b);

  const std::int64_t q = M.q;
  const std::int64_t q2 = q * q, q3 = q * q * q;
  const std::uint32_t gamma = M.gamma;

  SparseRow row;
  const auto add = [&](LabelKind k, std::uint32_t idx, std::int64_t c) {
    if (c != 0) row.emplace_back(flat_index(M, {k, idx}), c);
  };
  const auto add_all_u = [&](std::int64_t c) {
    for (std::uint32_t e = 0; e < gamma; ++e) add(LabelKind::U, e, c);
  };

  if (a.kind == LabelKind::D && b.kind == LabelKind::D) {
    const std::uint32_t m1 = a.idx, m2 = b.idx;
    if (m1 == 0) {
      add(LabelKind::D, m2, 1);
    } else if (m2 == 0) {
      add(LabelKind::D, m1, 1);
    } else {
      const bool p1 = d_in_psi(M, m1), p2 = d_in_psi(M, m2);
      const std::uint32_t m12 = (m1 + m2) % M.n_d;
      if (!p1 && !p2) {
        if (!d_in_psi(M, m12)) {
          add(LabelKind::D, m12, q3);
        } else if (m12 != 0) {
          add(LabelKind::D, m12, q3);
          add(LabelKind::T, d_to_t(M, m12), q3);
        } else {
          add(LabelKind::D, 0, q3);
          add(LabelKind::T, 0, q3);
          add_all_u(q3);
        }
      } else if (p1 != p2) {
        // one factor norm-one, one generic: the product is generic
        add(LabelKind::D, m12, q2);
      } else {
        // both norm-one (and nontrivial)
        if (m12 != 0) {
          add(LabelKind::D, m12, 1);
          add(LabelKind::T, d_to_t(M, m12), q + 1);
        } else {
          add(LabelKind::D, 0, q2);
          add_all_u(q);
        }
      }
    }
  } else if (a.kind == LabelKind::D && b.kind == LabelKind::T) {
    const std::uint32_t m = a.idx, mt = b.idx;
    if (m == 0) {
      add(LabelKind::T, mt, 1);
    } else if (mt == 0) {
      if (d_in_psi(M, m))
        add(LabelKind::T, d_to_t(M, m), 1);
      else
        add(LabelKind::D, m, q - 1);
    } else {
      const std::uint32_t m12 =
          (m + mt * (M.q - 1)) % M.n_d;  // product coset as a D label
      if (!d_in_psi(M, m)) {
        add(LabelKind::D, m12, q2 * (q - 1));
      } else if (m12 != 0) {
        add(LabelKind::D, m12, q2 - 1);
        add(LabelKind::T, d_to_t(M, m12), q2 - q - 1);
      } else {
        add(LabelKind::T, 0, q2);
        add_all_u(q * (q - 1));
      }
    }
  } else if (a.kind == LabelKind::T && b.kind == LabelKind::T) {
    const std::uint32_t t1 = a.idx, t2 = b.idx;
    const std::uint32_t s = (t1 + t2) % M.n_t;
    if (t1 == 0 && t2 == 0) {
      add(LabelKind::D, 0, q - 1);
      add(LabelKind::T, 0, q - 2);
    } else if (t1 == 0 || t2 == 0) {
      const std::uint32_t x = t1 == 0 ? t2 : t1;
      add(LabelKind::D, x * (M.q - 1), q - 1);
      add(LabelKind::T, x, q - 2);
    } else if (s != 0) {
      add(LabelKind::D, s * (M.q - 1), (q - 1) * (q2 - q - 1));
      add(LabelKind::T, s, q * (q - 1) * (q - 1) + 1);
    } else {
      add(LabelKind::D, 0, q2 * (q - 1));
      add(LabelKind::T, 0, q2 * (q - 2));
      add_all_u(q * (q - 1) * (q - 1));
    }
  } else if (a.kind == LabelKind::D && b.kind == LabelKind::U) {
    const std::uint32_t m = a.idx, e = b.idx;
    if (m == 0) {
      add(LabelKind::U, e, 1);
    } else if (!d_in_psi(M, m)) {
      add(LabelKind::D, m, q * (q2 - 1) / gamma);
    } else {
      add(LabelKind::D, m, (q2 - 1) / gamma);
      add(LabelKind::T, d_to_t(M, m), (q2 - 1) / gamma);
    }
  } else if (a.kind == LabelKind::T && b.kind == LabelKind::U) {
    const std::uint32_t mt = a.idx, e = b.idx;
    if (mt == 0) {
      add(LabelKind::U, e, q - 1);
    } else {
      const std::int64_t c = (q2 - 1) * (q - 1) / gamma;
      add(LabelKind::D, mt * (M.q - 1), c);
      add(LabelKind::T, mt, c);
    }
  } else {
    PSU3_CHECK(a.kind == LabelKind::U && b.kind == LabelKind::U,
               "label pair dispatch is exhaustive");
    const std::uint32_t e = a.idx, fdx = b.idx;
    if (gamma == 1) {
      add(LabelKind::D, 0, q * (q2 - 1));
      add(LabelKind::T, 0, q * (q2 - 1));
      add(LabelKind::U, 0, q * (q2 - 2));
    } else {
      const Lmn v = *M.lmn;
      if (e == fdx) {
        add(LabelKind::D, 0, q * (q2 - 1) / 3);
        add(LabelKind::T, 0, q * (q2 - 1) / 3);
        add(LabelKind::U, e, q * v.l);
        add(LabelKind::U, (e + 1) % 3, q * v.m);
        add(LabelKind::U, (e + 2) % 3, q * v.m);
      } else {
        const std::uint32_t h = 3 - e - fdx;  // the remaining coset index
        add(LabelKind::U, h, q * v.n);
        add(LabelKind::U, e, q * v.m);
        add(LabelKind::U, fdx, q * v.m);
      }
    }
  }

  std::sort(row.begin(), row.end());
  for (std::size_t i = 1; i < row.size(); ++i)
    PSU3_CHECK(row[i - 1].first < row[i].first, "row labels are distinct");
  return row;
}

void verify_model_invariants(const ZkNModel& M, std::uint64_t seed,
                             std::size_t assoc_samples) {
  const std::vector<BasisLabel> labels = all_labels(M);
  std::vector<std::uint64_t> sizes(M.dim);
  for (std::uint32_t i = 0; i < M.dim; ++i) sizes[i] = class_size(M, labels[i]);

  // the identity label multiplies as the unit
  for (std::uint32_t j = 0; j < M.dim; ++j) {
    const SparseRow row = product_of_labels(M, labels[0], labels[j]);
    PSU3_CHECK(row.size() == 1 && row[0].first == j && row[0].second == 1,
               "the identity class acts as the unit");
  }

  // commutativity and augmentation multiplicativity on every pair
  for (std::uint32_t i = 0; i < M.dim; ++i)
    for (std::uint32_t j = i; j < M.dim; ++j) {
      const SparseRow rij = product_of_labels(M, labels[i], labels[j]);
      PSU3_CHECK(rij == product_of_labels(M, labels[j], labels[i]),
                 "the table is commutative");
      std::int64_t weighted = 0;
      for (const auto& [k, c] : rij) {
        PSU3_CHECK(c > 0, "pair counts are positive");
        weighted += c * static_cast<std::int64_t>(sizes[k]);
      }
      PSU3_CHECK(weighted == static_cast<std::int64_t>(sizes[i] * sizes[j]),
                 "weighted row sums equal the size product");
    }

  // associativity: (ab)c = a(bc) expanded through the table
  const auto assoc_at = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    std::map<std::uint32_t, std::int64_t> lhs, rhs;
    for (const auto& [k, ck] : product_of_labels(M, labels[a], labels[b]))
      for (const auto& [t, ct] : product_of_labels(M, labels[k], labels[c]))
        lhs[t] += ck * ct;
    for (const auto& [k, ck] : product_of_labels(M, labels[b], labels[c]))
      for (const auto& [t, ct] : product_of_labels(M, labels[a], labels[k]))
        rhs[t] += ck * ct;
    PSU3_CHECK(lhs == rhs, "the table is associative");
  };
  if (assoc_samples == 0) {
    // commutativity makes the associator antisymmetric in the outer
    // arguments, so triples with a <= c cover everything
    for (std::uint32_t a = 0; a < M.dim; ++a)
      for (std::uint32_t c = a; c < M.dim; ++c)
        for (std::uint32_t b = 0; b < M.dim; ++b)
          assoc_at(a, b, c);
  } else {
    std::uint64_t state = seed;
    const auto next = [&]() { return splitmix64(state++); };
    for (std::size_t s = 0; s < assoc_samples; ++s)
      assoc_at(static_cast<std::uint32_t>(next() % M.dim),
               static_cast<std::uint32_t>(next() % M.dim),
               static_cast<std::uint32_t>(next() % M.dim));
  }
}

std::uint64_t table_checksum(const ZkNModel& M) {
  std::uint64_t h = 14695981039346656037ULL;
  const auto feed = [&](std::uint64_t v, int bytes) {
    for (int b = 0; b < bytes; ++b) {
      h ^= (v >> (8 * b)) & 0xffu;
      h *= 1099511628211ULL;
    }
  };
  const std::vector<BasisLabel> labels = all_labels(M);
  for (std::uint32_t i = 0; i < M.dim; ++i)
    for (std::uint32_t j = 0; j < M.dim; ++j) {
      feed(i, 4);
      feed(j, 4);
      for (const auto& [k, c] : product_of_labels(M, labels[i], labels[j])) {
        feed(k, 4);
        feed(static_cast<std::uint64_t>(c), 8);
      }
    }
  return h;
}

CommAlg zkn_mod_p(const ZkNModel& M) {
  PSU3_CHECK(M.dim <= 512, "dense structure tables are limited to dim 512");
  const std::size_t n = M.dim;
  const std::vector<BasisLabel> labels = all_labels(M);
  std::vector<std::uint8_t> sc(n * n * n, 0);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      for (const auto& [k, c] : product_of_labels(M, labels[i], labels[j]))
        sc[(static_cast<std::size_t>(i) * n + j) * n + k] =
            static_cast<std::uint8_t>(c % M.p);
  FpVec unit(n, 0);
  unit[0] = 1;
  FpVec aug(n);
  for (std::uint32_t i = 0; i < n; ++i)
    aug[i] = static_cast<std::uint8_t>(class_size(M, labels[i]) % M.p);
  return make_comm_alg(M.p, n, std::move(sc), std::move(unit), std::move(aug));
}

LoewyProfile loewy_closed(unsigned q) {
  const ZkNModel M = make_zkn_model(q);  // validates q
  std::vector<std::size_t> dims{M.dim, M.dim - 1u};
  const std::size_t j2 = (q + 1) / M.gamma - 1;
  if (j2 > 0) dims.push_back(j2);
  dims.push_back(0);
  return LoewyProfile{dims};
}

void verify_presentation(const ZkNModel& M) {
  const CommAlg A = zkn_mod_p(M);
  const unsigned p = M.p;
  const std::uint32_t n = M.dim;

  const auto fD = [&](std::uint32_t m) { return flat_index(M, {LabelKind::D, m}); };
  const auto fT = [&](std::uint32_t t) { return flat_index(M, {LabelKind::T, t}); };
  const auto fU = [&](std::uint32_t e) { return flat_index(M, {LabelKind::U, e}); };
  const auto basis_vec = [&](std::uint32_t flat) {
    FpVec v(n, 0);
    v[flat] = 1;
    return v;
  };
  const auto is_zero = [](const FpVec& v) {
    return std::all_of(v.begin(), v.end(), [](std::uint8_t x) { return x == 0; });
  };

  // generator images: T -> (norm-one central class) + identity, X_e -> U_e,
  // Y_m -> D_m
  FpVec img_t(n, 0);
  img_t[fT(0)] = 1;
  img_t[0] = 1;
  std::vector<FpVec> img_x;
  for (std::uint32_t e = 0; e < M.gamma; ++e) img_x.push_back(basis_vec(fU(e)));
  std::vector<FpVec> img_y(M.n_d);  // index 0 unused
  for (std::uint32_t m = 1; m < M.n_d; ++m) img_y[m] = basis_vec(fD(m));

  // gamma is invertible mod p (gamma = 3 forces p != 3)
  PSU3_CHECK(M.gamma % p != 0, "gamma is invertible in characteristic p");
  unsigned gamma_inv = 1;
  while ((gamma_inv * M.gamma) % p != 1) ++gamma_inv;

  const auto axpy = [&](const FpVec& x, unsigned c, FpVec y) {
    for (std::uint32_t i = 0; i < n; ++i)
      y[i] = static_cast<std::uint8_t>((y[i] + c * x[i]) % p);
    return y;
  };

  PSU3_CHECK(is_zero(A.mul(img_t, img_t)), "relation: T^2 = 0");
  for (std::uint32_t e = 0; e < M.gamma; ++e) {
    PSU3_CHECK(is_zero(A.mul(img_t, img_x[e])), "relation: T X = 0");
    for (std::uint32_t f2 = e; f2 < M.gamma; ++f2)
      PSU3_CHECK(is_zero(A.mul(img_x[e], img_x[f2])), "relation: X X = 0");
  }
  for (std::uint32_t m = 1; m < M.n_d; ++m) {
    if (d_in_psi(M, m)) continue;
    PSU3_CHECK(is_zero(A.mul(img_t, img_y[m])),
               "relation: T Y = 0 off the norm-one circle");
    for (std::uint32_t e = 0; e < M.gamma; ++e)
      PSU3_CHECK(is_zero(A.mul(img_x[e], img_y[m])),
                 "relation: X Y = 0 off the norm-one circle");
    for (std::uint32_t m2 = 1; m2 < M.n_d; ++m2)
      PSU3_CHECK(is_zero(A.mul(img_y[m], img_y[m2])),
                 "relation: Y Y = 0 once a factor leaves the norm-one circle");
  }
  for (std::uint32_t m = 1; m < M.n_d; ++m) {
    if (!d_in_psi(M, m)) continue;
    const FpVec ty = A.mul(img_t, img_y[m]);
    for (std::uint32_t e = 0; e < M.gamma; ++e)
      PSU3_CHECK(is_zero(axpy(ty, gamma_inv, A.mul(img_x[e], img_y[m]))),
                 "relation: X Y + (1/gamma) T Y = 0 on the norm-one circle");
    for (std::uint32_t m2 = m; m2 < M.n_d; ++m2) {
      if (!d_in_psi(M, m2)) continue;
      const std::uint32_t m12 = (m + m2) % M.n_d;
      const FpVec prod = A.mul(img_y[m], img_y[m2]);
      if (m12 == 0) {
        PSU3_CHECK(is_zero(prod), "relation: Y Y = 0 at inverse pairs");
      } else {
        PSU3_CHECK(is_zero(axpy(A.mul(img_t, img_y[m12]), p - 1, prod)),
                   "relation: Y Y = T Y at non-inverse pairs");
      }
    }
  }

  // the standard monomials map onto a basis
  Subspace span(p, n);
  std::size_t count = 0;
  const auto must_grow = [&](const FpVec& v) {
    PSU3_CHECK(span.insert(v), "monomial images are linearly independent");
    ++count;
  };
  must_grow(basis_vec(0));  // the unit
  must_grow(img_t);
  for (std::uint32_t e = 0; e < M.gamma; ++e) must_grow(img_x[e]);
  for (std::uint32_t m = 1; m < M.n_d; ++m) must_grow(img_y[m]);
  for (std::uint32_t m = 1; m < M.n_d; ++m)
    if (d_in_psi(M, m)) must_grow(A.mul(img_t, img_y[m]));
  PSU3_CHECK(count == M.dim, "standard monomials span the whole centre");
}

void crosscheck_against_group(const ZkNModel& M, const GroupCtx& g,
                              const ClassPartition& cls,
                              const StructTensor& st) {
  const FieldCtx& f = g.field();
  PSU3_CHECK(M.q == f.q, "model and group live over the same field");
  PSU3_CHECK(!g.full_group(), "the model describes the stabilizer group");
  PSU3_CHECK(M.dim == cls.count(), "label count equals class count");

  // label -> class: a size-preserving bijection fixing the identity
  const std::vector<BasisLabel> labels = all_labels(M);
  std::vector<std::uint32_t> to_class(M.dim);
  std::vector<char> hit(M.dim, 0);
  for (std::uint32_t i = 0; i < M.dim; ++i) {
    const Mat3 rep = label_matrix(f, M, labels[i]);
    to_class[i] = cls.class_of[g.index_of(rep)];
    PSU3_CHECK(!hit[to_class[i]], "labels map to distinct classes");
    hit[to_class[i]] = 1;
    PSU3_CHECK(class_size(M, labels[i]) == cls.sizes[to_class[i]],
               "label sizes match class sizes");
  }
  PSU3_CHECK(to_class[0] == 0, "the identity label maps to the identity class");

  // every product row agrees entry-by-entry with the computed constants
  for (std::uint32_t i = 0; i < M.dim; ++i)
    for (std::uint32_t j = i; j < M.dim; ++j) {
      std::vector<std::int64_t> dense(M.dim, 0);
      for (const auto& [k, c] : product_of_labels(M, labels[i], labels[j]))
        dense[k] = c;
      for (std::uint32_t k = 0; k < M.dim; ++k)
        PSU3_CHECK(dense[k] == st.at(to_class[i], to_class[j], to_class[k]),
                   "closed-form constants equal the computed constants");
    }
}

void crosscheck(const FieldCtx& f, std::uint64_t budget) {
  const ZkNModel M = make_zkn_model(f.q);
  const GroupCtx g = build_normalizer(f, budget);
  const ClassPartition cls = conjugacy_classes(g);
  const StructTensor st = structure_constants(g, cls);
  verify_class_sum_identities(st, g.size());
  crosscheck_against_group(M, g, cls, st);
}

}  // namespace psu3
