#include "goi/projector.hpp"

#include <cmath>

namespace goi {

namespace {

void check(bool ok, const char* msg) {
  if (!ok) throw DimensionError(msg);
}

// P_v for a unit vector: P(e_a) = conj(v_a) * v, so the stored entry
// (a, b) is conj(v_a) * v_b.
LinMap ray_projector_map(const Vec& unit_ray) {
  const std::size_t n = unit_ray.coords.size();
  LinMap p = zero_map(unit_ray.space, unit_ray.space);
  for (std::size_t a = 0; a < n; ++a) {
    const cplx ca = std::conj(unit_ray.coords[a]);
    for (std::size_t b = 0; b < n; ++b) p.a[a * n + b] = ca * unit_ray.coords[b];
  }
  return p;
}

}  // namespace

Vec bell_pair(const TensorSpace& first, const TensorSpace& second) {
  check(first.dim() == second.dim(), "bell_pair needs factors of equal dim");
  const std::size_t n = first.dim();
  Vec v = zero_vec(tensor(first, second));
  for (std::size_t a = 0; a < n; ++a) v.coords[a * n + a] = 1.0;
  return v;
}

Vec bell_vector(const TensorSpace& u) { return bell_pair(u, u.dualized()); }

Vec bell_vector(const FdSpace& u) { return bell_vector(space_of(u)); }

Projector projector_from_map(LinMap p, double scale, double tol) {
  check(p.dom == p.cod, "projector must be an endomap");
  if (max_abs_diff(compose(p, p), p) > tol)
    throw Error("projector_from_map: map is not idempotent");
  if (max_abs_diff(adjoint(p), p) > tol)
    throw Error("projector_from_map: map is not self-adjoint");
  return Projector{std::move(p), std::nullopt, scale};
}

namespace {

Projector rank_one(const Vec& raw, double carried_scale, double tol) {
  const double n = norm(raw);
  if (n <= tol) throw Error("degenerate ray: cannot project onto zero vector");
  const Vec ray = scale(cplx{1.0 / n, 0.0}, raw);  // unit
  return Projector{ray_projector_map(ray), ray, carried_scale};
}

}  // namespace

Projector bell_projector(const TensorSpace& u) {
  const Vec b = bell_vector(u);
  return rank_one(b, static_cast<double>(u.dim()), kDefaultTol);
}

Projector bell_projector_swapped(const TensorSpace& u) {
  const Vec b = bell_pair(u.dualized(), u);
  return rank_one(b, static_cast<double>(u.dim()), kDefaultTol);
}

Vec map_vector(const LinMap& f) {
  // Coordinates over (i, j) in V* (x) W are exactly the stored f_ij.
  return Vec{tensor(f.dom.dualized(), f.cod), f.a};
}

Projector map_projector(const LinMap& f, double tol) {
  const Vec vf = map_vector(f);
  const double m = norm(vf) * norm(vf);
  if (m <= tol) throw Error("map_projector: zero map has no ray");
  return rank_one(vf, m, tol);
}

Projector extend(const Projector& p, const TensorSpace& left,
                 const TensorSpace& right) {
  LinMap m = p.map;
  if (!left.is_unit()) m = kron(identity_map(left), m);
  if (!right.is_unit()) m = kron(m, identity_map(right));
  std::optional<Vec> ray;  // extension is no longer rank 1
  return Projector{std::move(m), ray, p.scale};
}

LinMap tau(const LinMap& f, const TensorSpace& v, const TensorSpace& u,
           const TensorSpace& w) {
  check(f.dom == tensor(v, u) && f.cod == tensor(w, u),
        "tau: f must map V(x)U -> W(x)U");
  const Projector p = bell_projector(u);
  const LinMap stage1 = kron(f, identity_map(u.dualized()));
  const LinMap stage2 = kron(identity_map(w), p.map);
  return scale(cplx{p.scale, 0.0}, compose(stage1, stage2));
}

LinMap theta(const LinMap& f, const TensorSpace& v, const TensorSpace& u,
             const TensorSpace& w) {
  const Projector p = bell_projector(u);
  const LinMap project_ctx = kron(identity_map(v), p.map);
  return compose(project_ctx, tau(f, v, u, w));
}

LinMap xi(const LinMap& f) {
  const Projector p = bell_projector(f.dom);
  return scale(cplx{p.scale, 0.0}, kron(p.map, identity_map(f.cod)));
}

LinMap zeta(const LinMap& f, double tol) {
  const Projector pf = map_projector(f, tol);
  const LinMap project_ctx = kron(identity_map(f.dom), pf.map);
  return compose(project_ctx, xi(f));
}

cplx k_coefficient(const LinMap& f, const Vec& u) {
  const Vec vf = map_vector(f);
  check(u.space.dim() == vf.space.dim(), "k_coefficient: context has wrong dim");
  cplx acc{};
  for (std::size_t i = 0; i < vf.coords.size(); ++i)
    acc += std::conj(vf.coords[i]) * u.coords[i];
  const double m = norm(vf) * norm(vf);
  return acc / m;
}

Measurement measure(const Projector& p, const Vec& psi, double tol) {
  check(p.map.dom == psi.space, "measure: state lives in the wrong space");
  if (std::abs(norm(psi) - 1.0) > std::max(tol, 1e-9))
    throw Error("measure: state must be normalized");
  const Vec projected = apply(p.map, psi);
  const Vec rest = sub(psi, projected);
  const double p1 = norm(projected) * norm(projected);
  const double p0 = norm(rest) * norm(rest);

  Measurement m;
  m.pass.outcome = 1;
  m.pass.probability = p1;
  if (p1 > tol) m.pass.post_state = scale(1.0 / norm(projected), projected);
  m.fail.outcome = 0;
  m.fail.probability = p0;
  if (p0 > tol) m.fail.post_state = scale(1.0 / norm(rest), rest);
  return m;
}

const MeasurementOutcome& sample_outcome(const Measurement& m, Rng& rng) {
  return rng.unit() < m.pass.probability ? m.pass : m.fail;
}

namespace {

// Shared chain for the teleport and clone demos: measure id (x) P_f on
// v (x) u, then P_bell (x) id on the survivor, then split the post
// state as bell_ray (x) output.
DemoReport projector_chain_demo(const LinMap& f, const Vec& v, const Vec& u,
                                double tol) {
  const TensorSpace& vsp = f.dom;
  DemoReport report;

  const Projector pf = map_projector(f, tol);
  const Projector gate1 = extend(pf, vsp, unit_space());
  const Vec psi = kron_vec(v, u);
  const Measurement m1 = measure(gate1, psi, tol);
  if (!m1.pass.post_state) {
    report.failure_branch = true;
    return report;
  }

  const Projector pbell = bell_projector(vsp);
  const Projector gate2 = extend(pbell, unit_space(), f.cod);
  const Measurement m2 = measure(gate2, *m1.pass.post_state, tol);
  if (!m2.pass.post_state) {
    report.failure_branch = true;
    report.probability = 0.0;
    return report;
  }

  report.probability = m1.pass.probability * m2.pass.probability;

  const Vec& final_state = *m2.pass.post_state;
  const Vec bell_ray = *pbell.ray;
  Vec out = contract_left(bell_ray, final_state);
  report.output_factor = out;

  // The post state must factor as bell_ray (x) out; then compare the
  // output against f(v) up to one scalar.
  const Vec rebuilt = kron_vec(bell_ray, out);
  if (!approx_eq(rebuilt, final_state, std::max(tol, 1e-9))) return report;
  const Vec expected = apply(f, v);
  if (auto prop = proportional(out, expected, std::max(tol, 1e-9));
      prop && !prop->degenerate) {
    report.proportional_to_expected = true;
    report.scalar = prop->factor;
  }
  return report;
}

}  // namespace

DemoReport teleport_demo(const Vec& v, const Vec& u, double tol) {
  const TensorSpace& vsp = v.space;
  check(u.space.dim() == vsp.dim() * vsp.dim(),
        "teleport_demo: context must live in V* (x) V");
  if (std::abs(norm(v) - 1.0) > std::max(tol, 1e-9))
    throw Error("teleport_demo: input state must be normalized");
  return projector_chain_demo(identity_map(vsp), v, u, tol);
}

DemoReport clone_demo(const Vec& v, double tol) {
  const TensorSpace& vsp = v.space;
  if (std::abs(norm(v) - 1.0) > std::max(tol, 1e-9))
    throw Error("clone_demo: input state must be normalized");
  const std::size_t n = vsp.dim();
  // Basis-copy map V -> V (x) V.
  LinMap delta = zero_map(vsp, tensor(vsp, vsp));
  for (std::size_t i = 0; i < n; ++i) delta.a[i * (n * n) + (i * n + i)] = 1.0;
  const Vec u = scale(1.0 / norm(map_vector(delta)), map_vector(delta));
  return projector_chain_demo(delta, v, u, tol);
}

LinMap interaction_network(const GoiFdvec::Morphism& f,
                           const GoiFdvec::Morphism& g) {
  if (!(f.dst == g.src))
    throw DimensionError("interaction_network: endpoint mismatch");
  const TensorSpace &vp = f.src.pos, &vn = f.src.neg;
  const TensorSpace &up = f.dst.pos, &un = f.dst.neg;
  const TensorSpace &wp = g.dst.pos, &wn = g.dst.neg;

  const Projector p_un_dual = bell_projector(un);          // on U- (x) U-*
  const Projector p_up_swap = bell_projector_swapped(up);  // on U+* (x) U+

  // State space: V+ (x) U- (x) U-* (x) U+* (x) U+ (x) W-.
  const LinMap stage1 =
      kron(identity_map(vp),
           kron(p_un_dual.map, kron(p_up_swap.map, identity_map(wn))));
  const LinMap stage2 =
      kron(f.under, kron(identity_map(un.dualized()),
                         kron(identity_map(up.dualized()), g.under)));
  // Middle of the codomain is U+ (x) U-* (x) U+* (x) U-; the closing
  // projector pair acts with its second and third slots swapped.
  const LinMap swap23 = permute_blocks({up, un.dualized(), up.dualized(), un},
                                       {0, 2, 1, 3});
  const Projector p_up_dual = bell_projector(up);          // on U+ (x) U+*
  const Projector p_un_swap = bell_projector_swapped(un);  // on U-* (x) U-
  const LinMap closing = compose(
      compose(swap23, kron(p_up_dual.map, p_un_swap.map)),
      permute_blocks({up, up.dualized(), un.dualized(), un}, {0, 2, 1, 3}));
  const LinMap stage3 = kron(identity_map(vn), kron(closing, identity_map(wp)));
  return compose(compose(stage1, stage2), stage3);
}

Vec network_context(const TensorSpace& u_minus, const TensorSpace& u_plus) {
  return kron_vec(bell_vector(u_minus), bell_pair(u_plus.dualized(), u_plus));
}

NetworkCheck check_network_against_interaction(const GoiFdvec::Morphism& f,
                                               const GoiFdvec::Morphism& g,
                                               double tol) {
  const TensorSpace &vp = f.src.pos, &vn = f.src.neg;
  const TensorSpace &up = f.dst.pos, &un = f.dst.neg;
  const TensorSpace &wp = g.dst.pos, &wn = g.dst.neg;

  const LinMap net = interaction_network(f, g);
  const Vec ctx = network_context(un, up);

  // Induced map on V+ (x) W-: prime the middle slots with the context.
  const LinMap prime =
      kron(kron(identity_map(vp), unit_to(ctx)), identity_map(wn));
  const LinMap induced = compose(prime, net);

  // Expected: the traced composition with the post-measurement context
  // parked in the middle slots.
  const GoiFdvec::Morphism h = GoiFdvec::compose(f, g);
  const Vec post_ctx =
      apply(permute_blocks({up, up.dualized(), un.dualized(), un}, {0, 2, 1, 3}),
            kron_vec(bell_vector(up), bell_pair(un.dualized(), un)));
  const LinMap place = permute_blocks(
      {vn, wp, tensor(tensor(up, un.dualized()), tensor(up.dualized(), un))},
      {0, 2, 1});
  const LinMap expected = compose(kron(h.under, unit_to(post_ctx)), place);

  NetworkCheck out;
  if (auto prop = proportional(induced, expected, tol); prop) {
    out.proportional = !prop->degenerate;
    out.scalar = prop->factor;
  }
  out.max_err = 0.0;
  if (out.proportional) {
    const LinMap scaled = scale(out.scalar, expected);
    out.max_err = max_abs_diff(induced, scaled);
  }
  return out;
}

}  // namespace goi
