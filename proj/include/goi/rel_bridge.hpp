#pragma once
// The support functor from complex matrices to relations, its strict
// restriction to nonnegative matrices, the laxity counterexample, state
// abstraction, and nonnegative-weighted multirelations.

#include <vector>

#include "goi/linalg.hpp"
#include "goi/relation.hpp"

namespace goi {

// A tensor space with a chosen basis labelling; tensoring pairs the
// labels up.
struct BasedSpace {
  TensorSpace space;
  std::vector<std::string> labels;  // length == space.dim()
};

BasedSpace based(const TensorSpace& space, std::vector<std::string> labels);
BasedSpace based_default(const TensorSpace& space);  // labels "0", "1", ...
BasedSpace tensor(const BasedSpace& a, const BasedSpace& b);

// Support relation of a matrix: (i, j) included iff |f_ij| > tol.
// Lax-functorial on all matrices, strictly functorial on nonnegative
// ones.
Rel functor_r(const LinMap& f, const BasedSpace& dom, const BasedSpace& cod,
              double tol = kDefaultTol);
Rel functor_r(const LinMap& f, double tol = kDefaultTol);

struct LaxReport {
  bool inclusion = false;  // R(f;g) included in R(f);R(g)
  bool equality = false;
  Rel composite_support;   // R(f;g)
  Rel support_composite;   // R(f);R(g)
};
LaxReport check_lax(const LinMap& f, const LinMap& g, double tol = kDefaultTol);

// The 2x2 matrix with entries 1/sqrt(2) except -1/sqrt(2) in the last,
// which squares to the identity: cancellation collapses the support of
// the composite strictly below the composite of supports.
struct LaxCounterexample {
  LinMap f;
  Rel composite_support;   // identity relation
  Rel support_composite;   // full relation
};
LaxCounterexample laxity_counterexample();

bool is_nonnegative(const LinMap& f, double tol = kDefaultTol);

struct TracePreservationReport {
  bool holds = false;
  Rel support_of_trace;  // R(trace(f))
  Rel trace_of_support;  // trace over (Rel,x) of R(f)
};
// Requires nonnegative entries (cancellation would break the claim).
TracePreservationReport r_preserves_trace(const LinMap& f, const TensorSpace& v,
                                          const TensorSpace& w,
                                          const TensorSpace& u,
                                          double tol = kDefaultTol);

// Support of a state: indices of coordinates above tolerance.
std::vector<std::size_t> abstract_state(const Vec& psi, double tol = kDefaultTol);

// Image of a subset under a relation.
std::vector<std::size_t> rel_image(const Rel& r, const std::vector<std::size_t>& t);

// Nonnegative-real weighted relation; composition sums products of
// weights.
struct Multirel {
  std::vector<std::string> dom, cod;
  std::vector<double> w;  // w[i * cod.size() + j] >= 0

  double at(std::size_t i, std::size_t j) const { return w[i * cod.size() + j]; }
};

Multirel make_multirel(std::vector<std::string> dom, std::vector<std::string> cod,
                       std::vector<double> weights);
Multirel multirel_identity(const std::vector<std::string>& names);
std::vector<double> multirel_apply(const Multirel& r, const std::vector<double>& t);
Multirel multirel_compose(const Multirel& r, const Multirel& s);
Multirel multirel_tensor(const Multirel& r, const Multirel& s);
Multirel multirel_trace(const Multirel& r, const std::vector<std::string>& x,
                        const std::vector<std::string>& y,
                        const std::vector<std::string>& z);
bool multirel_eq(const Multirel& r, const Multirel& s, double tol = kDefaultTol);

// Entrywise correspondence between nonnegative matrices and
// multirelations; preserves composition, tensor and trace.
Multirel vec_iso(const LinMap& f, double tol = kDefaultTol);
LinMap vec_iso_inverse(const Multirel& m);

}  // namespace goi
