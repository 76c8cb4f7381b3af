#include "psu3/unitary.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace psu3 {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// F_q inside F_{q^2}, zero first, then ascending codes.
std::vector<Fq2> base_field_elements(const FieldCtx& f) {
  std::vector<Fq2> out{0};
  for (Fq2 x = 1; x < f.q2; ++x)
    if (f.in_base_field(x)) out.push_back(x);
  PSU3_CHECK(out.size() == f.q, "base subfield has q elements");
  return out;
}

// Every element must be reachable from the identity by right-multiplying
// generators; otherwise orbit searches over the generators would be wrong.
void verify_generation(const GroupCtx& g) {
  std::vector<char> seen(g.size(), 0);
  std::vector<std::uint32_t> stack{g.identity()};
  seen[g.identity()] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::uint32_t x = stack.back();
    stack.pop_back();
    for (std::uint32_t gen : g.generators()) {
      const std::uint32_t y = g.mult(x, gen);
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  PSU3_CHECK(reached == g.size(), "generators must span the whole group");
}

}  // namespace

PackedElem pack_mat(const Mat3& m) {
  PackedElem key = 0;
  for (int i = 0; i < 9; ++i) key = (key << 7) | (m.m[i] & 0x7fu);
  return key;
}

Mat3 unpack_mat(PackedElem key) {
  Mat3 m;
  for (int i = 8; i >= 0; --i) {
    m.m[i] = static_cast<Fq2>(key & 0x7fu);
    key >>= 7;
  }
  return m;
}

KeyMap::KeyMap(std::size_t expected) {
  std::size_t cap = 16;
  while (cap * 2 < expected * 3) cap <<= 1;  // keep load factor <= 2/3
  keys_.assign(cap, 0);
  vals_.assign(cap, 0);
  mask_ = cap - 1;
}

std::size_t KeyMap::slot_of(PackedElem key) const {
  return static_cast<std::size_t>(splitmix64(key)) & mask_;
}

void KeyMap::grow() {
  std::vector<PackedElem> old_keys = std::move(keys_);
  std::vector<std::uint32_t> old_vals = std::move(vals_);
  const std::size_t cap = (mask_ + 1) * 2;
  keys_.assign(cap, 0);
  vals_.assign(cap, 0);
  mask_ = cap - 1;
  for (std::size_t s = 0; s < old_keys.size(); ++s) {
    if (old_keys[s] == 0) continue;
    std::size_t t = slot_of(old_keys[s]);
    while (keys_[t] != 0) t = (t + 1) & mask_;
    keys_[t] = old_keys[s];
    vals_[t] = old_vals[s];
  }
}

bool KeyMap::insert(PackedElem key, std::uint32_t value) {
  PSU3_CHECK(key != 0, "packed keys are never zero");
  if ((count_ + 1) * 3 > (mask_ + 1) * 2) grow();
  std::size_t s = slot_of(key);
  while (keys_[s] != 0) {
    if (keys_[s] == key) return false;
    s = (s + 1) & mask_;
  }
  keys_[s] = key;
  vals_[s] = value;
  ++count_;
  return true;
}

std::uint32_t KeyMap::find(PackedElem key) const {
  std::size_t s = slot_of(key);
  while (keys_[s] != 0) {
    if (keys_[s] == key) return vals_[s];
    s = (s + 1) & mask_;
  }
  return kAbsent;
}

GroupCtx::GroupCtx(const FieldCtx& f) : field_(f), q2_(f.q2) {
  mul_tab_.resize(static_cast<std::size_t>(q2_) * q2_);
  add_tab_.resize(static_cast<std::size_t>(q2_) * q2_);
  bar_tab_.resize(q2_);
  for (Fq2 x = 0; x < q2_; ++x) {
    bar_tab_[x] = field_.bar(x);
    for (Fq2 y = 0; y < q2_; ++y) {
      mul_tab_[static_cast<std::size_t>(x) * q2_ + y] = field_.mul(x, y);
      add_tab_[static_cast<std::size_t>(x) * q2_ + y] = field_.add(x, y);
    }
  }
  // determinant-1 scalars are the gamma-th roots of unity
  zeta_ = field_.gamma == 3 ? field_.from_log(field_.n / 3) : field_.one();
}

Mat3 GroupCtx::multiply(const Mat3& x, const Mat3& y) const {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Fq2 acc = 0;
      for (int k = 0; k < 3; ++k)
        acc = fadd(acc, fmul(x.m[3 * i + k], y.m[3 * k + j]));
      r.m[3 * i + j] = acc;
    }
  return r;
}

Mat3 GroupCtx::inverse(const Mat3& m) const {
  // for M in SU(3,q): M^{-1} = J * conj-transpose(M) * J
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r.m[3 * i + j] = bar_tab_[m.m[3 * (2 - j) + (2 - i)]];
  return r;
}

Mat3 GroupCtx::canonical(Mat3 m) const {
  if (field_.gamma == 1) return m;
  // packed keys compare entries (0,0),(0,1),...,(2,2) lexicographically
  Mat3 best = m;
  PackedElem best_key = pack_mat(best);
  for (int s = 1; s < 3; ++s) {
    for (int i = 0; i < 9; ++i) m.m[i] = fmul(m.m[i], zeta_);
    const PackedElem key = pack_mat(m);
    if (key < best_key) {
      best_key = key;
      best = m;
    }
  }
  return best;
}

std::uint32_t GroupCtx::mult(std::uint32_t i, std::uint32_t j) const {
  const Mat3 p = multiply(element(i), element(j));
  const std::uint32_t r = index_.find(pack_mat(canonical(p)));
  PSU3_CHECK(r != KeyMap::kAbsent, "product stays inside the group");
  return r;
}

std::uint32_t GroupCtx::inv(std::uint32_t i) const {
  const std::uint32_t r = index_.find(pack_mat(canonical(inverse(element(i)))));
  PSU3_CHECK(r != KeyMap::kAbsent, "inverse stays inside the group");
  return r;
}

std::uint32_t GroupCtx::index_of(const Mat3& m) const {
  const std::uint32_t r = index_.find(pack_mat(canonical(m)));
  PSU3_CHECK(r != KeyMap::kAbsent, "element must belong to the group");
  return r;
}

bool GroupCtx::contains(const Mat3& m) const {
  return index_.find(pack_mat(canonical(m))) != KeyMap::kAbsent;
}

void GroupCtx::finalize_elements(std::vector<PackedElem> elems) {
  std::sort(elems.begin(), elems.end());
  elements_ = std::move(elems);
  index_ = KeyMap(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const bool fresh =
        index_.insert(elements_[i], static_cast<std::uint32_t>(i));
    PSU3_CHECK(fresh, "element list must be duplicate-free");
  }
  Mat3 id{};
  id.m[0] = id.m[4] = id.m[8] = field_.one();
  identity_ = index_of(id);
}

Mat3 param_to_elem(const FieldCtx& f, const ParamQ& pq) {
  PSU3_CHECK(pq.a != 0, "stabilizer parameter a must be nonzero");
  const Fq2 abar = f.bar(pq.a);
  const Fq2 bbar = f.bar(pq.b);
  // isotropy relation: b*bar(b) + a*bar(c) + c*bar(a) = 0
  const Fq2 rel = f.add(f.mul(pq.b, bbar),
                        f.add(f.mul(pq.a, f.bar(pq.c)), f.mul(pq.c, abar)));
  PSU3_CHECK(rel == 0, "stabilizer parameters satisfy the isotropy relation");
  Mat3 m{};
  m.m[0] = pq.a;
  m.m[1] = pq.b;
  m.m[2] = pq.c;
  m.m[4] = f.div(abar, pq.a);
  m.m[5] = f.neg(f.div(bbar, pq.a));
  m.m[8] = f.inv(abar);
  return m;
}

GroupCtx build_normalizer(const FieldCtx& f, std::uint64_t budget) {
  if (f.q > 11)
    throw std::invalid_argument(
        "element enumeration packs field codes into 7 bits and needs q <= 11");
  const std::uint64_t q3 = static_cast<std::uint64_t>(f.q) * f.q * f.q;
  const std::uint64_t order = q3 * f.n / f.gamma;
  if (order > budget) throw BudgetExceeded(order, budget);

  GroupCtx g(f);
  const SpecialElems se = special_elements(f);
  const std::vector<Fq2> base = base_field_elements(f);

  // M(a, b, c) with c = b*bar(b)*tau/bar(a) + a*omega*lambda: the particular
  // solution of the isotropy relation plus the q-element solution kernel.
  std::vector<PackedElem> elems;
  elems.reserve(order);
  KeyMap seen(order);
  for (Fq2 a = 1; a < f.q2; ++a) {
    const Fq2 abar = f.bar(a);
    const Fq2 a_omega = f.mul(a, se.omega);
    for (Fq2 b = 0; b < f.q2; ++b) {
      const Fq2 c0 = f.div(f.mul(f.mul(b, f.bar(b)), se.tau), abar);
      for (Fq2 lam : base) {
        const ParamQ pq{a, b, f.add(c0, f.mul(a_omega, lam))};
        const Mat3 m = param_to_elem(f, pq);
        PSU3_CHECK(is_special_unitary(f, m),
                   "stabilizer elements are special unitary");
        const PackedElem key = pack_mat(g.canonical(m));
        if (seen.insert(key, static_cast<std::uint32_t>(elems.size())))
          elems.push_back(key);
      }
    }
  }
  PSU3_CHECK(elems.size() == order, "stabilizer order matches q^3(q^2-1)/gamma");
  g.finalize_elements(std::move(elems));

  // generators: the cyclic torus part, one transvection per F_p-basis vector
  // of F_{q^2}, and a central transvection
  std::vector<Mat3> gens;
  gens.push_back(param_to_elem(f, {f.from_log(1), 0, 0}));
  for (unsigned j = 0; j < 2 * f.r; ++j) {
    std::uint32_t v = 1;
    for (unsigned t = 0; t < j; ++t) v *= f.p;
    const Fq2 beta = f.from_vrep(v);
    gens.push_back(
        param_to_elem(f, {f.one(), beta, f.mul(f.mul(beta, f.bar(beta)), se.tau)}));
  }
  gens.push_back(param_to_elem(f, {f.one(), 0, se.omega}));
  for (const Mat3& gm : gens) g.generators_.push_back(g.index_of(gm));
  verify_generation(g);
  return g;
}

GroupCtx build_psu(const FieldCtx& f, std::uint64_t budget) {
  if (f.q > 11)
    throw std::invalid_argument(
        "element enumeration packs field codes into 7 bits and needs q <= 11");
  const std::uint64_t q3 = static_cast<std::uint64_t>(f.q) * f.q * f.q;
  const std::uint64_t order_stab = q3 * f.n / f.gamma;
  const std::uint64_t order = order_stab * (q3 + 1);
  if (order > budget) throw BudgetExceeded(order, budget);

  const GroupCtx stab = build_normalizer(f, budget);
  GroupCtx g(f);
  const SpecialElems se = special_elements(f);
  const std::vector<Fq2> base = base_field_elements(f);

  // the form-preserving coordinate swap sending the distinguished point away
  Mat3 w{};
  w.m[2] = f.one();
  w.m[4] = f.neg(f.one());
  w.m[6] = f.one();
  PSU3_CHECK(is_special_unitary(f, w), "swap element is special unitary");
  PSU3_CHECK(!stab.contains(w), "swap element moves the distinguished point");

  // unipotent part: M(1, b, c) over all isotropy-compatible (b, c)
  std::vector<Mat3> unis;
  unis.reserve(q3);
  for (Fq2 b = 0; b < f.q2; ++b) {
    const Fq2 c0 = f.mul(f.mul(b, f.bar(b)), se.tau);
    for (Fq2 lam : base)
      unis.push_back(
          param_to_elem(f, {f.one(), b, f.add(c0, f.mul(lam, se.omega))}));
  }
  PSU3_CHECK(unis.size() == q3, "unipotent part has q^3 elements");

  // G is the stabilizer plus the disjoint coset products n * w * u
  std::vector<PackedElem> elems;
  elems.reserve(order);
  KeyMap seen(order);
  for (PackedElem key : stab.packed_elements()) {
    seen.insert(key, static_cast<std::uint32_t>(elems.size()));
    elems.push_back(key);
  }
  for (PackedElem nk : stab.packed_elements()) {
    const Mat3 nw = g.multiply(unpack_mat(nk), w);
    for (const Mat3& u : unis) {
      const PackedElem key = pack_mat(g.canonical(g.multiply(nw, u)));
      const bool fresh = seen.insert(key, static_cast<std::uint32_t>(elems.size()));
      PSU3_CHECK(fresh, "coset products are pairwise distinct");
      elems.push_back(key);
    }
  }
  PSU3_CHECK(elems.size() == order,
             "group order matches q^3(q^2-1)(q^3+1)/gamma");
  g.full_group_ = true;
  g.finalize_elements(std::move(elems));

  // isotropic points of the form: (1 : y : z) with z + bar(z) + y*bar(y) = 0,
  // plus (0 : 0 : 1); exactly q^3 + 1 in total
  for (Fq2 y = 0; y < f.q2; ++y)
    for (Fq2 z = 0; z < f.q2; ++z)
      if (f.add(f.add(z, f.bar(z)), f.mul(y, f.bar(y))) == 0)
        g.quadric_.push_back({f.one(), y, z});
  g.quadric_.push_back({0, 0, f.one()});
  PSU3_CHECK(g.quadric_.size() == q3 + 1, "quadric has q^3 + 1 points");

  // recount the distinguished-point stabilizer inside the full enumeration
  std::uint64_t stab_count = 0;
  for (PackedElem key : g.packed_elements()) {
    const Mat3 m = unpack_mat(key);
    if (m.m[3] == 0 && m.m[6] == 0) ++stab_count;
  }
  PSU3_CHECK(stab_count == order_stab,
             "stabilizer recount inside the full group");

  for (std::uint32_t gi : stab.generators())
    g.generators_.push_back(g.index_of(stab.element(gi)));
  g.generators_.push_back(g.index_of(w));
  verify_generation(g);
  return g;
}

ClassPartition conjugacy_classes(const GroupCtx& g) {
  const std::size_t n = static_cast<std::size_t>(g.size());
  constexpr std::uint32_t kNone = 0xffffffffu;
  std::vector<std::uint32_t> cls(n, kNone);

  std::vector<std::pair<Mat3, Mat3>> gens;  // (generator, its inverse)
  for (std::uint32_t gi : g.generators()) {
    const Mat3 gm = g.element(gi);
    gens.emplace_back(gm, g.inverse(gm));
  }

  std::vector<std::uint32_t> seeds;
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint32_t> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (cls[s] != kNone) continue;
    const std::uint32_t id = static_cast<std::uint32_t>(seeds.size());
    seeds.push_back(static_cast<std::uint32_t>(s));
    std::uint64_t size = 0;
    cls[s] = id;
    stack.push_back(static_cast<std::uint32_t>(s));
    while (!stack.empty()) {
      const std::uint32_t x = stack.back();
      stack.pop_back();
      ++size;
      const Mat3 xm = g.element(x);
      for (const auto& [gm, gmi] : gens) {
        const std::uint32_t y = g.index_of(g.multiply(gmi, g.multiply(xm, gm)));
        if (cls[y] == kNone) {
          cls[y] = id;
          stack.push_back(y);
        }
      }
    }
    sizes.push_back(size);
  }

  // canonical class order: ascending size, ties by least element index
  // (seeds were discovered in ascending element order, so a stable sort works)
  std::vector<std::uint32_t> perm(seeds.size());
  std::iota(perm.begin(), perm.end(), 0u);
  std::stable_sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
    return sizes[a] < sizes[b];
  });
  std::vector<std::uint32_t> new_id(seeds.size());
  for (std::uint32_t i = 0; i < perm.size(); ++i) new_id[perm[i]] = i;

  ClassPartition out;
  out.class_of.resize(n);
  for (std::size_t x = 0; x < n; ++x) out.class_of[x] = new_id[cls[x]];
  out.rep.resize(seeds.size());
  out.sizes.resize(seeds.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    out.rep[i] = seeds[perm[i]];
    out.sizes[i] = sizes[perm[i]];
  }
  out.inverse_class.resize(seeds.size());
  for (std::size_t i = 0; i < out.rep.size(); ++i)
    out.inverse_class[i] = out.class_of[g.inv(out.rep[i])];

  PSU3_CHECK(out.rep[0] == g.identity(), "class 0 is the identity class");
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < out.sizes.size(); ++i) {
    total += out.sizes[i];
    PSU3_CHECK(g.size() % out.sizes[i] == 0,
               "class sizes divide the group order");
    PSU3_CHECK(out.inverse_class[out.inverse_class[i]] == i,
               "inverse pairing is an involution");
    PSU3_CHECK(out.sizes[out.inverse_class[i]] == out.sizes[i],
               "inverse classes have equal size");
  }
  PSU3_CHECK(total == g.size(), "classes partition the group");
  return out;
}

std::vector<Mat3> class_reps(const GroupCtx& g, const ClassPartition& cls) {
  std::vector<Mat3> out;
  out.reserve(cls.count());
  for (std::uint32_t r : cls.rep) out.push_back(g.element(r));
  return out;
}

std::string element_name(const FieldCtx& f, const Mat3& m) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < 3; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < 3; ++j) os << (j ? "," : "") << f.vrep(m.m[3 * i + j]);
    os << ']';
  }
  os << ']';
  return os.str();
}

bool is_special_unitary(const FieldCtx& f, const Mat3& m) {
  // conj-transpose(M) J M = J with J the antidiagonal identity:
  // entry (i,j) of the left side is sum_k bar(M[k][i]) M[2-k][j]
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Fq2 acc = 0;
      for (int k = 0; k < 3; ++k)
        acc = f.add(acc, f.mul(f.bar(m.m[3 * k + i]), m.m[3 * (2 - k) + j]));
      if (acc != (i + j == 2 ? f.one() : f.zero())) return false;
    }
  const auto mm = [&](int i, int j) { return m.m[3 * i + j]; };
  const Fq2 det = f.add(
      f.sub(f.mul(mm(0, 0),
                  f.sub(f.mul(mm(1, 1), mm(2, 2)), f.mul(mm(1, 2), mm(2, 1)))),
            f.mul(mm(0, 1),
                  f.sub(f.mul(mm(1, 0), mm(2, 2)), f.mul(mm(1, 2), mm(2, 0))))),
      f.mul(mm(0, 2),
            f.sub(f.mul(mm(1, 0), mm(2, 1)), f.mul(mm(1, 1), mm(2, 0)))));
  return det == f.one();
}

}  // namespace psu3
