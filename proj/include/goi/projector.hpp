#pragma once
// Projector-only realization of traces and linear maps, Born-rule
// measurement, the teleport/clone demos, and composition of interaction
// morphisms as a projector network.
//
// Projectors are stored true (idempotent, self-adjoint); the dimension
// and normalization multipliers that turn them back into the traced or
// applied map are carried separately in `scale`.

#include <optional>

#include "goi/interaction.hpp"
#include "goi/linalg.hpp"

namespace goi {

struct Projector {
  LinMap map;               // idempotent, self-adjoint endomap
  std::optional<Vec> ray;   // unit vector spanning the image when rank 1
  double scale = 1.0;       // the dimension N or squared weight M
};

// Sum_a e_a (x) dual(e_a) in U (x) U*; base independent, norm^2 = dim U.
Vec bell_vector(const FdSpace& u);
Vec bell_vector(const TensorSpace& u);

// Delta-pattern vector in first (x) second for two spaces of equal dim.
Vec bell_pair(const TensorSpace& first, const TensorSpace& second);

// Rank-1 projector onto the normalized bell vector of U (x) U*;
// scale = dim U.
Projector bell_projector(const TensorSpace& u);
// Same with the factors swapped: lives on U* (x) U.
Projector bell_projector_swapped(const TensorSpace& u);

// Rank-1 projector onto the normalized vector sum_ij f_ij
// (dual(v_i) (x) w_j) in V* (x) W that encodes f : V -> W;
// scale = M = sum |f_ij|^2. Throws on f == 0.
Projector map_projector(const LinMap& f, double tol = kDefaultTol);

// The V* (x) W vector encoding f (coordinates are f's entries).
Vec map_vector(const LinMap& f);

// Wraps a verified idempotent self-adjoint map.
Projector projector_from_map(LinMap p, double scale = 1.0,
                             double tol = kDefaultTol);

// id_left (x) p.map (x) id_right as a projector on the padded space.
Projector extend(const Projector& p, const TensorSpace& left,
                 const TensorSpace& right);

// Scaled projector composite realizing the trace of f : V(x)U -> W(x)U
// on V (x) U (x) U*:
//   tau   = N * (f (x) id_U* ; id_W (x) P)     with P the bell projector,
//   theta = (id_V (x) P) ; tau.
// On v (x) bell, tau yields trace(f)(v) (x) bell; theta does the same
// for any context u with the bell projection applied first, and is the
// zero map on contexts orthogonal to the bell vector.
LinMap tau(const LinMap& f, const TensorSpace& v, const TensorSpace& u,
           const TensorSpace& w);
LinMap theta(const LinMap& f, const TensorSpace& v, const TensorSpace& u,
             const TensorSpace& w);

// Scaled projector composite realizing application of f : V -> W on
// V (x) V* (x) W:
//   xi   = N * (P_V* (x) id_W),
//   zeta = (id_V (x) P_f) ; xi.
// On v (x) map_vector(f), xi yields bell_V (x) f(v); zeta scales the
// same output by k_coefficient(f, u) for an arbitrary context u.
LinMap xi(const LinMap& f);
LinMap zeta(const LinMap& f, double tol = kDefaultTol);

// <map_vector(f) | u> / M; depends on the context u only, not on the
// state the network acts on. Zero signals the failure branch.
cplx k_coefficient(const LinMap& f, const Vec& u);

struct MeasurementOutcome {
  int outcome = 0;               // 1 = projector fired, 0 = complement
  double probability = 0.0;
  std::optional<Vec> post_state;  // absent on a zero-probability branch
};

struct Measurement {
  MeasurementOutcome pass;  // outcome 1
  MeasurementOutcome fail;  // outcome 0
};

// Born rule plus projection-postulate update for a normalized state;
// both branches are returned so callers stay deterministic.
Measurement measure(const Projector& p, const Vec& psi,
                    double tol = kDefaultTol);

// Seeded draw between the two branches.
const MeasurementOutcome& sample_outcome(const Measurement& m, Rng& rng);

struct DemoReport {
  bool failure_branch = false;  // the context never passes the first gate
  double probability = 0.0;     // chance that every projector fires
  std::optional<Vec> output_factor;
  bool proportional_to_expected = false;
  cplx scalar{};  // output = scalar * expected when proportional
};

// Sequential measurement chain realizing f = id on state v with context
// u in V* (x) V: project the context onto the identity's map vector,
// then project the first two factors onto the bell ray, and read the
// transported state off the last factor.
DemoReport teleport_demo(const Vec& v, const Vec& u, double tol = kDefaultTol);

// Same chain with f the basis-copy map V -> V (x) V and its own map
// vector as context. The copy is linear, so a superposition input comes
// out as the matching superposition of doubled basis vectors, not as
// the product state with itself.
DemoReport clone_demo(const Vec& v, double tol = kDefaultTol);

// The three-stage projector composite realizing interaction composition
// of f : (V+,V-) -> (U+,U-) and g : (U+,U-) -> (W+,W-) on the state
// space V+ (x) (U- (x) U-* (x) U+* (x) U+) (x) W-.
LinMap interaction_network(const GoiFdvec::Morphism& f,
                           const GoiFdvec::Morphism& g);

// The bell-style context the network is primed with.
Vec network_context(const TensorSpace& u_minus, const TensorSpace& u_plus);

struct NetworkCheck {
  bool proportional = false;
  cplx scalar{};
  double max_err = 0.0;
};

// Feeds the network the bell context and compares the induced map on
// V+ (x) W- against the traced composition, up to one nonzero scalar.
NetworkCheck check_network_against_interaction(const GoiFdvec::Morphism& f,
                                               const GoiFdvec::Morphism& g,
                                               double tol = kDefaultTol);

}  // namespace goi
