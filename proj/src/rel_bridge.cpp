#include "goi/rel_bridge.hpp"

#include <algorithm>
#include <cmath>

#include "goi/category.hpp"

namespace goi {

namespace {

void check(bool ok, const char* msg) {
  if (!ok) throw DimensionError(msg);
}

}  // namespace

BasedSpace based(const TensorSpace& space, std::vector<std::string> labels) {
  check(labels.size() == space.dim(), "basis labels must match space dim");
  return BasedSpace{space, std::move(labels)};
}

BasedSpace based_default(const TensorSpace& space) {
  return BasedSpace{space, numbered_names("", space.dim())};
}

BasedSpace tensor(const BasedSpace& a, const BasedSpace& b) {
  std::vector<std::string> labels;
  labels.reserve(a.labels.size() * b.labels.size());
  for (const auto& x : a.labels)
    for (const auto& y : b.labels) labels.push_back(x + "," + y);
  return BasedSpace{tensor(a.space, b.space), std::move(labels)};
}

Rel functor_r(const LinMap& f, const BasedSpace& dom, const BasedSpace& cod,
              double tol) {
  check(dom.space.dim() == f.dom.dim() && cod.space.dim() == f.cod.dim(),
        "functor_r: based spaces do not match the map");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  const std::size_t nc = f.cod.dim();
  for (std::size_t i = 0; i < f.dom.dim(); ++i)
    for (std::size_t j = 0; j < nc; ++j)
      if (std::abs(f.a[i * nc + j]) > tol)
        pairs.emplace_back(static_cast<std::uint32_t>(i),
                           static_cast<std::uint32_t>(j));
  return make_rel(dom.labels, cod.labels, std::move(pairs));
}

Rel functor_r(const LinMap& f, double tol) {
  return functor_r(f, based_default(f.dom), based_default(f.cod), tol);
}

LaxReport check_lax(const LinMap& f, const LinMap& g, double tol) {
  LaxReport out;
  out.composite_support = functor_r(compose(f, g), tol);
  out.support_composite = rel_compose(functor_r(f, tol), functor_r(g, tol));
  out.inclusion = rel_subset(out.composite_support, out.support_composite);
  out.equality = rel_eq(out.composite_support, out.support_composite);
  return out;
}

LaxCounterexample laxity_counterexample() {
  const TensorSpace v = make_space("V", 2);
  const double r = 1.0 / std::sqrt(2.0);
  LinMap f = make_map(v, v, {cplx{r}, cplx{r}, cplx{r}, cplx{-r}});
  LaxCounterexample out{f, functor_r(compose(f, f)),
                        rel_compose(functor_r(f), functor_r(f))};
  return out;
}

bool is_nonnegative(const LinMap& f, double tol) {
  for (const cplx& c : f.a)
    if (std::abs(c.imag()) > tol || c.real() < -tol) return false;
  return true;
}

TracePreservationReport r_preserves_trace(const LinMap& f, const TensorSpace& v,
                                          const TensorSpace& w,
                                          const TensorSpace& u, double tol) {
  if (!is_nonnegative(f, tol))
    throw Error("r_preserves_trace: entries must be nonnegative reals");
  TracePreservationReport out;
  out.support_of_trace = functor_r(vec_trace(f, v, w, u), tol);
  out.trace_of_support =
      rel_times_trace(functor_r(f, tol), numbered_names("", v.dim()),
                      numbered_names("", w.dim()), numbered_names("", u.dim()));
  out.holds = rel_eq(out.support_of_trace, out.trace_of_support);
  return out;
}

std::vector<std::size_t> abstract_state(const Vec& psi, double tol) {
  std::vector<std::size_t> t;
  for (std::size_t i = 0; i < psi.coords.size(); ++i)
    if (std::abs(psi.coords[i]) > tol) t.push_back(i);
  return t;
}

std::vector<std::size_t> rel_image(const Rel& r, const std::vector<std::size_t>& t) {
  std::vector<std::size_t> img;
  for (const auto& [i, j] : r.pairs)
    if (std::find(t.begin(), t.end(), i) != t.end()) img.push_back(j);
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return img;
}

Multirel make_multirel(std::vector<std::string> dom, std::vector<std::string> cod,
                       std::vector<double> weights) {
  check(weights.size() == dom.size() * cod.size(),
        "multirelation weight matrix has the wrong shape");
  for (double x : weights)
    if (x < 0.0) throw Error("multirelation weights must be nonnegative");
  return Multirel{std::move(dom), std::move(cod), std::move(weights)};
}

Multirel multirel_identity(const std::vector<std::string>& names) {
  const std::size_t n = names.size();
  std::vector<double> w(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) w[i * n + i] = 1.0;
  return Multirel{names, names, std::move(w)};
}

std::vector<double> multirel_apply(const Multirel& r, const std::vector<double>& t) {
  check(t.size() == r.dom.size(), "multirel_apply: weight vector length mismatch");
  for (double x : t)
    if (x < 0.0) throw Error("multirel_apply: weights must be nonnegative");
  std::vector<double> out(r.cod.size(), 0.0);
  for (std::size_t j = 0; j < r.cod.size(); ++j)
    for (std::size_t i = 0; i < r.dom.size(); ++i) out[j] += t[i] * r.at(i, j);
  return out;
}

Multirel multirel_compose(const Multirel& r, const Multirel& s) {
  check(r.cod.size() == s.dom.size(), "multirel compose: carrier mismatch");
  std::vector<double> w(r.dom.size() * s.cod.size(), 0.0);
  for (std::size_t i = 0; i < r.dom.size(); ++i)
    for (std::size_t j = 0; j < r.cod.size(); ++j) {
      if (r.at(i, j) == 0.0) continue;
      for (std::size_t k = 0; k < s.cod.size(); ++k)
        w[i * s.cod.size() + k] += r.at(i, j) * s.at(j, k);
    }
  return Multirel{r.dom, s.cod, std::move(w)};
}

namespace {

std::vector<std::string> joined_names(const std::vector<std::string>& a,
                                      const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x + "," + y);
  return out;
}

}  // namespace

Multirel multirel_tensor(const Multirel& r, const Multirel& s) {
  const std::size_t nd = s.dom.size(), nc = s.cod.size();
  const std::size_t cd = r.cod.size() * nc;
  std::vector<double> w(r.dom.size() * nd * cd, 0.0);
  for (std::size_t i1 = 0; i1 < r.dom.size(); ++i1)
    for (std::size_t i2 = 0; i2 < nd; ++i2)
      for (std::size_t j1 = 0; j1 < r.cod.size(); ++j1)
        for (std::size_t j2 = 0; j2 < nc; ++j2)
          w[(i1 * nd + i2) * cd + (j1 * nc + j2)] = r.at(i1, j1) * s.at(i2, j2);
  return Multirel{joined_names(r.dom, s.dom), joined_names(r.cod, s.cod),
                  std::move(w)};
}

Multirel multirel_trace(const Multirel& r, const std::vector<std::string>& x,
                        const std::vector<std::string>& y,
                        const std::vector<std::string>& z) {
  const std::size_t nx = x.size(), ny = y.size(), nz = z.size();
  check(r.dom.size() == nx * nz && r.cod.size() == ny * nz,
        "multirel_trace: carrier mismatch");
  std::vector<double> w(nx * ny, 0.0);
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t k = 0; k < ny; ++k)
      for (std::size_t a = 0; a < nz; ++a)
        w[i * ny + k] += r.at(i * nz + a, k * nz + a);
  return Multirel{x, y, std::move(w)};
}

bool multirel_eq(const Multirel& r, const Multirel& s, double tol) {
  if (r.dom.size() != s.dom.size() || r.cod.size() != s.cod.size()) return false;
  for (std::size_t i = 0; i < r.w.size(); ++i)
    if (std::abs(r.w[i] - s.w[i]) > tol) return false;
  return true;
}

Multirel vec_iso(const LinMap& f, double tol) {
  if (!is_nonnegative(f, tol))
    throw Error("vec_iso: entries must be nonnegative reals");
  std::vector<double> w(f.a.size());
  for (std::size_t i = 0; i < f.a.size(); ++i) w[i] = std::max(0.0, f.a[i].real());
  return Multirel{numbered_names("", f.dom.dim()), numbered_names("", f.cod.dim()),
                  std::move(w)};
}

LinMap vec_iso_inverse(const Multirel& m) {
  LinMap f = zero_map(make_space("V", m.dom.size() == 0 ? 1 : m.dom.size()),
                      make_space("W", m.cod.size() == 0 ? 1 : m.cod.size()));
  for (std::size_t i = 0; i < m.w.size(); ++i) f.a[i] = cplx{m.w[i], 0.0};
  return f;
}

}  // namespace goi
