#include "goi/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace goi {

namespace {

// Work threshold below which the OpenMP pragmas stay serial. Desk-scale
// inputs never reach it; the benchmark sizes do.
constexpr std::size_t kParallelCutoff = 1u << 15;

void check(bool ok, const char* msg) {
  if (!ok) throw DimensionError(msg);
}

}  // namespace

std::string show(const TensorSpace& s) {
  if (s.is_unit()) return "I";
  std::ostringstream os;
  bool first = true;
  for (const auto& f : s.factors) {
    if (!first) os << "(x)";
    first = false;
    os << f.label << f.dim << (f.dual ? "*" : "");
  }
  return os.str();
}

Vec make_vec(TensorSpace space, std::vector<cplx> coords) {
  check(coords.size() == space.dim(), "vector length does not match space dim");
  for (const cplx& c : coords)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw Error("vector coordinates must be finite");
  return Vec{std::move(space), std::move(coords)};
}

Vec zero_vec(const TensorSpace& space) {
  return Vec{space, std::vector<cplx>(space.dim(), cplx{0.0, 0.0})};
}

Vec basis_vec(const TensorSpace& space, std::size_t index) {
  check(index < space.dim(), "basis index out of range");
  Vec v = zero_vec(space);
  v.coords[index] = 1.0;
  return v;
}

LinMap make_map(TensorSpace dom, TensorSpace cod, std::vector<cplx> entries) {
  check(entries.size() == dom.dim() * cod.dim(),
        "entry array shape does not match dom x cod");
  return LinMap{std::move(dom), std::move(cod), std::move(entries)};
}

LinMap zero_map(const TensorSpace& dom, const TensorSpace& cod) {
  return LinMap{dom, cod, std::vector<cplx>(dom.dim() * cod.dim(), cplx{})};
}

LinMap identity_map(const TensorSpace& s) {
  LinMap f = zero_map(s, s);
  const std::size_t n = s.dim();
  for (std::size_t i = 0; i < n; ++i) f.a[i * n + i] = 1.0;
  return f;
}

cplx inner(const Vec& u, const Vec& v) {
  check(u.space == v.space, "inner product needs matching spaces");
  cplx acc{};
  for (std::size_t i = 0; i < u.coords.size(); ++i)
    acc += std::conj(u.coords[i]) * v.coords[i];
  return acc;
}

double norm(const Vec& v) {
  double acc = 0.0;
  for (const cplx& c : v.coords) acc += std::norm(c);
  return std::sqrt(acc);
}

Vec apply(const LinMap& f, const Vec& v) {
  check(f.dom == v.space, "map applied to vector from the wrong space");
  const std::size_t nd = f.dom.dim(), nc = f.cod.dim();
  Vec out = zero_vec(f.cod);
  for (std::size_t i = 0; i < nd; ++i) {
    const cplx x = v.coords[i];
    if (x == cplx{}) continue;
    for (std::size_t j = 0; j < nc; ++j) out.coords[j] += x * f.a[i * nc + j];
  }
  return out;
}

LinMap compose(const LinMap& f, const LinMap& g) {
  check(f.cod == g.dom, "composition needs cod(f) == dom(g)");
  const std::size_t ni = f.dom.dim(), nj = f.cod.dim(), nk = g.cod.dim();
  LinMap h = zero_map(f.dom, g.cod);
  const cplx* fa = f.a.data();
  const cplx* ga = g.a.data();
  cplx* ha = h.a.data();
  // Row-accumulating loop order: unit-stride access on g and h, and a
  // zero skip that makes composites of wiring maps (permutations,
  // padded projectors) cost about their nonzero count. Each thread
  // owns whole output rows and sums in fixed j order, so the parallel
  // result is bit-identical to the serial one.
  const std::size_t work = ni * nj * nk;
#pragma omp parallel for schedule(static) if (work >= kParallelCutoff)
  for (std::size_t i = 0; i < ni; ++i) {
    cplx* hrow = ha + i * nk;
    for (std::size_t j = 0; j < nj; ++j) {
      const cplx fij = fa[i * nj + j];
      if (fij == cplx{}) continue;
      const cplx* grow = ga + j * nk;
      for (std::size_t k = 0; k < nk; ++k) hrow[k] += fij * grow[k];
    }
  }
  return h;
}

LinMap kron(const LinMap& f, const LinMap& g) {
  const std::size_t fd = f.dom.dim(), fc = f.cod.dim();
  const std::size_t gd = g.dom.dim(), gc = g.cod.dim();
  LinMap h = zero_map(tensor(f.dom, g.dom), tensor(f.cod, g.cod));
  const std::size_t nc = fc * gc;
  cplx* ha = h.a.data();
  const std::size_t work = fd * gd * nc;
#pragma omp parallel for collapse(2) schedule(static) if (work >= kParallelCutoff)
  for (std::size_t i1 = 0; i1 < fd; ++i1) {
    for (std::size_t i2 = 0; i2 < gd; ++i2) {
      const std::size_t row = (i1 * gd + i2) * nc;
      for (std::size_t j1 = 0; j1 < fc; ++j1) {
        const cplx fij = f.a[i1 * fc + j1];
        for (std::size_t j2 = 0; j2 < gc; ++j2)
          ha[row + j1 * gc + j2] = fij * g.a[i2 * gc + j2];
      }
    }
  }
  return h;
}

Vec kron_vec(const Vec& u, const Vec& v) {
  Vec out = zero_vec(tensor(u.space, v.space));
  const std::size_t nv = v.coords.size();
  for (std::size_t i = 0; i < u.coords.size(); ++i)
    for (std::size_t j = 0; j < nv; ++j)
      out.coords[i * nv + j] = u.coords[i] * v.coords[j];
  return out;
}

LinMap adjoint(const LinMap& f) {
  const std::size_t nd = f.dom.dim(), nc = f.cod.dim();
  LinMap h = zero_map(f.cod, f.dom);
  for (std::size_t i = 0; i < nd; ++i)
    for (std::size_t j = 0; j < nc; ++j)
      h.a[j * nd + i] = std::conj(f.a[i * nc + j]);
  return h;
}

Vec scale(cplx c, const Vec& v) {
  Vec out = v;
  for (cplx& x : out.coords) x *= c;
  return out;
}

LinMap scale(cplx c, const LinMap& f) {
  LinMap out = f;
  for (cplx& x : out.a) x *= c;
  return out;
}

Vec add(const Vec& u, const Vec& v) {
  check(u.space == v.space, "vector addition needs matching spaces");
  Vec out = u;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += v.coords[i];
  return out;
}

LinMap add(const LinMap& f, const LinMap& g) {
  check(f.dom == g.dom && f.cod == g.cod, "map addition needs matching shapes");
  LinMap out = f;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] += g.a[i];
  return out;
}

Vec sub(const Vec& u, const Vec& v) {
  check(u.space == v.space, "vector subtraction needs matching spaces");
  Vec out = u;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] -= v.coords[i];
  return out;
}

Vec dualize(const Vec& v) {
  Vec out{v.space.dualized(), v.coords};
  for (cplx& c : out.coords) c = std::conj(c);
  return out;
}

namespace {

std::vector<std::size_t> dims_of(const std::vector<TensorSpace>& blocks) {
  std::vector<std::size_t> d;
  d.reserve(blocks.size());
  for (const auto& b : blocks) d.push_back(b.dim());
  return d;
}

}  // namespace

LinMap permute_blocks(const std::vector<TensorSpace>& blocks,
                      const std::vector<std::size_t>& perm) {
  const std::size_t n = blocks.size();
  check(perm.size() == n, "permutation arity does not match factor count");
  std::vector<bool> seen(n, false);
  for (std::size_t p : perm) {
    check(p < n && !seen[p], "not a permutation of factor positions");
    seen[p] = true;
  }
  const std::vector<std::size_t> dims = dims_of(blocks);
  TensorSpace dom;
  for (const auto& b : blocks) dom = tensor(dom, b);
  TensorSpace cod;
  for (std::size_t k = 0; k < n; ++k) cod = tensor(cod, blocks[perm[k]]);

  // Strides of the codomain multi-index.
  std::vector<std::size_t> cstride(n, 1);
  for (std::size_t k = n; k-- > 1;) cstride[k - 1] = cstride[k] * dims[perm[k]];

  LinMap m = zero_map(dom, cod);
  const std::size_t total = dom.dim();
  const std::size_t nc = cod.dim();
  std::vector<std::size_t> idx(n, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    // Decompose flat (row-major over dims), then reorder.
    std::size_t rem = flat;
    for (std::size_t k = n; k-- > 0;) {
      idx[k] = rem % dims[k];
      rem /= dims[k];
    }
    std::size_t out = 0;
    for (std::size_t k = 0; k < n; ++k) out += idx[perm[k]] * cstride[k];
    m.a[flat * nc + out] = 1.0;
  }
  return m;
}

LinMap permute_factors(const TensorSpace& s, const std::vector<std::size_t>& perm) {
  std::vector<TensorSpace> blocks;
  blocks.reserve(s.factors.size());
  for (const auto& f : s.factors) blocks.push_back(space_of(f));
  return permute_blocks(blocks, perm);
}

std::vector<std::size_t> compose_perms(const std::vector<std::size_t>& p,
                                       const std::vector<std::size_t>& q) {
  check(p.size() == q.size(), "permutation sizes differ");
  std::vector<std::size_t> r(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) r[k] = p[q[k]];
  return r;
}

std::vector<std::size_t> invert_perm(const std::vector<std::size_t>& p) {
  std::vector<std::size_t> inv(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) inv[p[k]] = k;
  return inv;
}

namespace {

std::optional<Proportionality> proportional_arrays(const std::vector<cplx>& u,
                                                   const std::vector<cplx>& v,
                                                   double tol) {
  double vmax = 0.0;
  std::size_t pivot = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double m = std::abs(v[i]);
    if (m > vmax) {
      vmax = m;
      pivot = i;
    }
  }
  if (vmax <= tol) {
    double umax = 0.0;
    for (const cplx& c : u) umax = std::max(umax, std::abs(c));
    if (umax <= tol) return Proportionality{cplx{}, true};
    return std::nullopt;
  }
  const cplx c = u[pivot] / v[pivot];
  for (std::size_t i = 0; i < u.size(); ++i)
    if (std::abs(u[i] - c * v[i]) > tol) return std::nullopt;
  return Proportionality{c, false};
}

}  // namespace

std::optional<Proportionality> proportional(const Vec& u, const Vec& v, double tol) {
  check(u.space == v.space, "proportionality needs matching spaces");
  return proportional_arrays(u.coords, v.coords, tol);
}

std::optional<Proportionality> proportional(const LinMap& u, const LinMap& v,
                                            double tol) {
  check(u.dom == v.dom && u.cod == v.cod,
        "proportionality needs matching shapes");
  return proportional_arrays(u.a, v.a, tol);
}

double max_abs_diff(const LinMap& f, const LinMap& g) {
  check(f.dom.dim() == g.dom.dim() && f.cod.dim() == g.cod.dim(),
        "shape mismatch in comparison");
  double m = 0.0;
  for (std::size_t i = 0; i < f.a.size(); ++i)
    m = std::max(m, std::abs(f.a[i] - g.a[i]));
  return m;
}

double max_abs_diff(const Vec& u, const Vec& v) {
  check(u.coords.size() == v.coords.size(), "length mismatch in comparison");
  double m = 0.0;
  for (std::size_t i = 0; i < u.coords.size(); ++i)
    m = std::max(m, std::abs(u.coords[i] - v.coords[i]));
  return m;
}

bool approx_eq(const LinMap& f, const LinMap& g, double tol) {
  if (!(f.dom == g.dom && f.cod == g.cod)) return false;
  return max_abs_diff(f, g) <= tol;
}

bool approx_eq(const Vec& u, const Vec& v, double tol) {
  if (!(u.space == v.space)) return false;
  return max_abs_diff(u, v) <= tol;
}

LinMap unit_to(const Vec& v) {
  LinMap m = zero_map(unit_space(), v.space);
  m.a = v.coords;
  return m;
}

Vec contract_left(const Vec& u, const Vec& psi) {
  const std::size_t nu = u.space.factors.size();
  check(psi.space.factors.size() >= nu &&
            std::equal(u.space.factors.begin(), u.space.factors.end(),
                       psi.space.factors.begin()),
        "contract_left: u's factors must be a prefix of psi's");
  TensorSpace rest;
  rest.factors.assign(psi.space.factors.begin() + nu, psi.space.factors.end());
  const std::size_t nr = rest.dim();
  Vec out = zero_vec(rest);
  for (std::size_t a = 0; a < u.coords.size(); ++a) {
    const cplx ua = std::conj(u.coords[a]);
    if (ua == cplx{}) continue;
    for (std::size_t b = 0; b < nr; ++b) out.coords[b] += ua * psi.coords[a * nr + b];
  }
  return out;
}

}  // namespace goi
