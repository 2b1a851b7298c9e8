#pragma once
// Dense complex vectors and linear maps over tensor-typed spaces.
//
// Entry convention: a LinMap stores a[i * cod_dim + j] = f_ij where i
// indexes the DOMAIN basis and j the CODOMAIN basis, i.e. f(v_i) =
// sum_j f_ij w_j. This is the transpose of the usual column-vector
// layout. Consequences:
//   * composition "f then g" is the plain matrix product of the arrays,
//     (f;g)_ik = sum_j f_ij g_jk;
//   * applying f to a coordinate row x gives y_j = sum_i x_i f_ij;
//   * the adjoint is still the conjugate transpose of the stored array.
// Multi-indices over factor lists flatten first-factor-major (leftmost
// factor varies slowest).

#include <complex>
#include <optional>
#include <vector>

#include "goi/spaces.hpp"

namespace goi {

using cplx = std::complex<double>;

struct Vec {
  TensorSpace space;
  std::vector<cplx> coords;  // length == space.dim()
};

Vec make_vec(TensorSpace space, std::vector<cplx> coords);
Vec zero_vec(const TensorSpace& space);
Vec basis_vec(const TensorSpace& space, std::size_t index);

struct LinMap {
  TensorSpace dom, cod;
  std::vector<cplx> a;  // a[i * cod.dim() + j] = f_ij

  cplx& at(std::size_t i, std::size_t j) { return a[i * cod.dim() + j]; }
  const cplx& at(std::size_t i, std::size_t j) const {
    return a[i * cod.dim() + j];
  }
};

LinMap make_map(TensorSpace dom, TensorSpace cod, std::vector<cplx> entries);
LinMap zero_map(const TensorSpace& dom, const TensorSpace& cod);
LinMap identity_map(const TensorSpace& s);

// Conjugate-linear in the first argument, linear in the second.
cplx inner(const Vec& u, const Vec& v);
double norm(const Vec& v);

Vec apply(const LinMap& f, const Vec& v);
LinMap compose(const LinMap& f, const LinMap& g);  // f then g
LinMap kron(const LinMap& f, const LinMap& g);
Vec kron_vec(const Vec& u, const Vec& v);
LinMap adjoint(const LinMap& f);

Vec scale(cplx c, const Vec& v);
LinMap scale(cplx c, const LinMap& f);
Vec add(const Vec& u, const Vec& v);
LinMap add(const LinMap& f, const LinMap& g);
Vec sub(const Vec& u, const Vec& v);

// v |-> conj(v) viewed in the dualized space; involutive.
Vec dualize(const Vec& v);

// Unitary reordering of tensor factors: the result sends the basis
// vector with multi-index (i_0,...,i_{n-1}) to the one whose k-th
// index is i_{perm[k]}; its codomain factors are factors[perm[k]].
LinMap permute_factors(const TensorSpace& s, const std::vector<std::size_t>& perm);

// Same, treating each listed space as one aggregated factor.
LinMap permute_blocks(const std::vector<TensorSpace>& blocks,
                      const std::vector<std::size_t>& perm);

// sigma_p ; sigma_q == sigma_{compose_perms(p, q)}
std::vector<std::size_t> compose_perms(const std::vector<std::size_t>& p,
                                       const std::vector<std::size_t>& q);
std::vector<std::size_t> invert_perm(const std::vector<std::size_t>& p);

struct Proportionality {
  cplx factor;
  bool degenerate;  // both vectors (numerically) zero; factor is 0
};

// Finds c with u == c * v entrywise within tol. Absent when no such c
// exists; zero-vs-zero yields the degenerate result by convention.
std::optional<Proportionality> proportional(const Vec& u, const Vec& v,
                                            double tol = kDefaultTol);
std::optional<Proportionality> proportional(const LinMap& u, const LinMap& v,
                                            double tol = kDefaultTol);

double max_abs_diff(const LinMap& f, const LinMap& g);
double max_abs_diff(const Vec& u, const Vec& v);
bool approx_eq(const LinMap& f, const LinMap& g, double tol = kDefaultTol);
bool approx_eq(const Vec& u, const Vec& v, double tol = kDefaultTol);

// Map from the unit space sending 1 to v.
LinMap unit_to(const Vec& v);

// (<u| tensor id) psi for psi in U tensor Rest; u's factors must be a
// prefix of psi's.
Vec contract_left(const Vec& u, const Vec& psi);

}  // namespace goi
