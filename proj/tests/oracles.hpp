#pragma once
// Independent oracles the unit and acceptance tests check the library
// against. These deliberately avoid the implementation paths they
// verify: the relational traces are recomputed by exhaustive scans and
// bounded chain enumeration, and the vector-space trace by the
// unit/counit pipeline of the compact closed structure.

#include "goi/category.hpp"
#include "goi/projector.hpp"

namespace goi::oracle {

// Existential scan over the traced carrier.
inline Rel brute_times_trace(const Rel& r, std::size_t nx, std::size_t ny,
                             std::size_t nz) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t i = 0; i < nx; ++i)
    for (std::uint32_t k = 0; k < ny; ++k)
      for (std::uint32_t z = 0; z < nz; ++z)
        if (rel_contains(r, i * static_cast<std::uint32_t>(nz) + z,
                         k * static_cast<std::uint32_t>(nz) + z)) {
          pairs.emplace_back(i, k);
          break;
        }
  return make_rel(numbered_names("x", nx), numbered_names("y", ny),
                  std::move(pairs));
}

// Chain enumeration up to length |Z| (longer chains revisit a Z state,
// so the closure saturates by pigeonhole).
inline Rel chain_plus_trace(const Rel& r, std::size_t nx, std::size_t ny,
                            std::size_t nz) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t x = 0; x < nx; ++x) {
    // frontier holds dom-side indices: x itself first, then Z entries.
    std::vector<std::uint32_t> frontier{x};
    for (std::size_t depth = 0; depth <= nz; ++depth) {
      std::vector<std::uint32_t> next;
      for (const std::uint32_t d : frontier) {
        for (const auto& [a, b] : r.pairs) {
          if (a != d) continue;
          if (b < ny) {
            pairs.emplace_back(x, b);
          } else {
            next.push_back(static_cast<std::uint32_t>(nx) + (b - static_cast<std::uint32_t>(ny)));
          }
        }
      }
      frontier = std::move(next);
    }
  }
  return make_rel(numbered_names("x", nx), numbered_names("y", ny),
                  std::move(pairs));
}

// Trace via the compact closed structure: (id (x) eta) ; (f (x) id) ;
// (id (x) swap) ; (id (x) eps).
inline LinMap cc_trace(const LinMap& f, const TensorSpace& v,
                       const TensorSpace& w, const TensorSpace& u) {
  const TensorSpace ud = u.dualized();
  const LinMap eta = unit_to(bell_vector(u));
  LinMap eps = zero_map(tensor(ud, u), unit_space());
  const std::size_t n = u.dim();
  for (std::size_t a = 0; a < n; ++a) eps.a[a * n + a] = 1.0;
  const LinMap step1 = kron(identity_map(v), eta);
  const LinMap step2 = kron(f, identity_map(ud));
  const LinMap step3 = kron(identity_map(w), permute_blocks({u, ud}, {1, 0}));
  const LinMap step4 = kron(identity_map(w), eps);
  return compose(compose(compose(step1, step2), step3), step4);
}

inline LinMap random_map(Rng& rng, const TensorSpace& dom, const TensorSpace& cod) {
  LinMap f = zero_map(dom, cod);
  for (cplx& c : f.a) c = rng.scalar();
  return f;
}

inline LinMap random_nonneg_map(Rng& rng, const TensorSpace& dom,
                                const TensorSpace& cod, double density = 0.6) {
  LinMap f = zero_map(dom, cod);
  for (cplx& c : f.a)
    if (rng.coin(density)) c = cplx{rng.unit() + 0.05, 0.0};
  return f;
}

inline Vec random_vec(Rng& rng, const TensorSpace& s) {
  Vec v = zero_vec(s);
  for (cplx& c : v.coords) c = rng.scalar();
  return v;
}

inline Vec random_unit_vec(Rng& rng, const TensorSpace& s) {
  Vec v = random_vec(rng, s);
  while (norm(v) < 1e-6) v = random_vec(rng, s);
  return scale(1.0 / norm(v), v);
}

// Random unitary: Gram-Schmidt on random rows (rows are the images of
// the domain basis under our storage convention).
inline LinMap random_unitary(Rng& rng, const TensorSpace& s) {
  const std::size_t n = s.dim();
  LinMap m = zero_map(s, s);
  for (std::size_t i = 0; i < n; ++i) {
    for (;;) {
      std::vector<cplx> row(n);
      for (cplx& c : row) c = rng.scalar();
      // Remove projections on previous rows.
      for (std::size_t k = 0; k < i; ++k) {
        cplx overlap{};
        for (std::size_t j = 0; j < n; ++j)
          overlap += std::conj(m.a[k * n + j]) * row[j];
        for (std::size_t j = 0; j < n; ++j) row[j] -= overlap * m.a[k * n + j];
      }
      double norm2 = 0.0;
      for (const cplx& c : row) norm2 += std::norm(c);
      if (norm2 < 1e-6) continue;  // retry a degenerate draw
      const double inv = 1.0 / std::sqrt(norm2);
      for (std::size_t j = 0; j < n; ++j) m.a[i * n + j] = row[j] * inv;
      break;
    }
  }
  return m;
}

inline LinMap conj_entries(const LinMap& f) {
  LinMap out = f;
  for (cplx& c : out.a) c = std::conj(c);
  return out;
}

}  // namespace goi::oracle
