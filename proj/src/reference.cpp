#include "goi/reference.hpp"

namespace goi::reference {

LinMap compose(const LinMap& f, const LinMap& g) {
  if (!(f.cod == g.dom)) throw DimensionError("reference compose: shape mismatch");
  const std::size_t ni = f.dom.dim(), nj = f.cod.dim(), nk = g.cod.dim();
  LinMap h = zero_map(f.dom, g.cod);
  for (std::size_t i = 0; i < ni; ++i)
    for (std::size_t j = 0; j < nj; ++j)
      for (std::size_t k = 0; k < nk; ++k)
        h.a[i * nk + k] += f.a[i * nj + j] * g.a[j * nk + k];
  return h;
}

LinMap kron(const LinMap& f, const LinMap& g) {
  const std::size_t fd = f.dom.dim(), fc = f.cod.dim();
  const std::size_t gd = g.dom.dim(), gc = g.cod.dim();
  LinMap h = zero_map(tensor(f.dom, g.dom), tensor(f.cod, g.cod));
  for (std::size_t i1 = 0; i1 < fd; ++i1)
    for (std::size_t j1 = 0; j1 < fc; ++j1)
      for (std::size_t i2 = 0; i2 < gd; ++i2)
        for (std::size_t j2 = 0; j2 < gc; ++j2)
          h.a[(i1 * gd + i2) * (fc * gc) + (j1 * gc + j2)] =
              f.a[i1 * fc + j1] * g.a[i2 * gc + j2];
  return h;
}

Vec apply(const LinMap& f, const Vec& v) {
  if (!(f.dom == v.space)) throw DimensionError("reference apply: space mismatch");
  Vec out = zero_vec(f.cod);
  const std::size_t nc = f.cod.dim();
  for (std::size_t j = 0; j < nc; ++j)
    for (std::size_t i = 0; i < f.dom.dim(); ++i)
      out.coords[j] += v.coords[i] * f.a[i * nc + j];
  return out;
}

LinMap vec_trace(const LinMap& f, const TensorSpace& v, const TensorSpace& w,
                 const TensorSpace& u) {
  if (!(f.dom == tensor(v, u) && f.cod == tensor(w, u)))
    throw DimensionError("reference vec_trace: f must map V(x)U -> W(x)U");
  const std::size_t nv = v.dim(), nw = w.dim(), nu = u.dim();
  LinMap t = zero_map(v, w);
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t k = 0; k < nw; ++k)
      for (std::size_t a = 0; a < nu; ++a)
        t.a[i * nw + k] += f.a[(i * nu + a) * (nw * nu) + (k * nu + a)];
  return t;
}

}  // namespace goi::reference
