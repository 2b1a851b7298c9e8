// Acceptance suite: one verdict line per criterion, nonzero exit on any
// failure. Tolerances are fixed here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "goi/json_io.hpp"
#include "goi/lambda.hpp"
#include "goi/projector.hpp"
#include "goi/rel_bridge.hpp"
#include "oracles.hpp"

using namespace goi;

namespace {

constexpr double kTol = 1e-9;

int failures = 0;

void criterion(int number, const std::string& label,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
    ok = false;
  }
  std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", number,
              label.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++failures;
}

GoiFdvec::Morphism random_goi_fdvec(Rng& rng, const GoiFdvec::Object& src,
                                    const GoiFdvec::Object& dst) {
  return GoiFdvec::make(src, dst,
                        oracle::random_map(rng, tensor(src.pos, dst.neg),
                                           tensor(src.neg, dst.pos)));
}

template <class C>
bool goi_laws_for_instance(Rng& rng, double tol, std::string& detail) {
  using G = Goi<C>;
  for (int s = 0; s < 50; ++s) {
    const typename G::Object a{C::random_obj(rng, 3), C::random_obj(rng, 3)};
    const typename G::Object b{C::random_obj(rng, 3), C::random_obj(rng, 3)};
    const typename G::Object c{C::random_obj(rng, 3), C::random_obj(rng, 3)};
    const typename G::Object d{C::random_obj(rng, 3), C::random_obj(rng, 3)};
    auto rnd = [&rng](const typename G::Object& x, const typename G::Object& y) {
      return G::make(x, y,
                     C::random_mor(rng, C::tensor_obj(x.pos, y.neg),
                                   C::tensor_obj(x.neg, y.pos)));
    };
    const auto f = rnd(a, b);
    const auto g = rnd(b, c);
    const auto h = rnd(c, d);
    if (!G::mor_eq(G::compose(f, G::identity(b)), f, tol) ||
        !G::mor_eq(G::compose(G::identity(a), f), f, tol)) {
      detail = std::string(cat_name(C::tag)) + ": unit law failed at sample " +
               std::to_string(s);
      return false;
    }
    if (!G::mor_eq(G::compose(G::compose(f, g), h), G::compose(f, G::compose(g, h)),
                   tol)) {
      detail = std::string(cat_name(C::tag)) +
               ": associativity failed at sample " + std::to_string(s);
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "trace axioms for all three instances (50 samples, tol 1e-9, < 10 s)",
            [](std::string& detail) {
              const auto start = std::chrono::steady_clock::now();
              bool ok = true;
              for (const CatTag tag :
                   {CatTag::FdvecTensor, CatTag::FrelTimes, CatTag::FrelPlus}) {
                for (const auto& c : trace_axiom_suite(tag, 50, 2024, kTol)) {
                  if (!c.passed) {
                    detail = c.category + "/" + c.axiom + ": " + c.counterexample;
                    ok = false;
                  }
                }
              }
              const double secs =
                  std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                start)
                      .count();
              if (secs >= 10.0) {
                detail = "suite took " + std::to_string(secs) + " s";
                ok = false;
              }
              return ok;
            });

  criterion(2, "trace realization: theta factorizes and dies off the bell ray",
            [](std::string& detail) {
              Rng rng(1002);
              struct Shape { std::size_t v, w, u; };
              for (const Shape sh : {Shape{2, 2, 2}, Shape{2, 3, 2}}) {
                const TensorSpace v = make_space("V", sh.v);
                const TensorSpace w = make_space("V", sh.w);
                const TensorSpace u = make_space("V", sh.u);
                for (int s = 0; s < 50; ++s) {
                  const LinMap f =
                      oracle::random_map(rng, tensor(v, u), tensor(w, u));
                  const LinMap lhs = theta(f, v, u, w);
                  const LinMap rhs =
                      kron(vec_trace(f, v, w, u), bell_projector(u).map);
                  if (!approx_eq(lhs, rhs, kTol)) {
                    detail = "factorization failed at sample " + std::to_string(s);
                    return false;
                  }
                  Vec orth = zero_vec(tensor(u, u.dualized()));
                  orth.coords[1] = 1.0;  // e_0 (x) dual(e_1), off the bell ray
                  const Vec out = apply(theta(f, v, u, w),
                                        kron_vec(oracle::random_vec(rng, v), orth));
                  if (norm(out) > kTol) {
                    detail = "orthogonal context leaked at sample " +
                             std::to_string(s);
                    return false;
                  }
                }
              }
              return true;
            });

  criterion(3, "application realization: xi moves map vectors, K is a context scalar",
            [](std::string& detail) {
              Rng rng(1003);
              const TensorSpace v = make_space("V", 2), w = make_space("V", 3);
              for (int s = 0; s < 50; ++s) {
                const LinMap f = oracle::random_map(rng, v, w);
                const Vec state = oracle::random_vec(rng, v);
                const Vec lhs = apply(xi(f), kron_vec(state, map_vector(f)));
                const Vec rhs = kron_vec(bell_vector(v), apply(f, state));
                if (max_abs_diff(lhs, rhs) > kTol) {
                  detail = "pipe identity failed at sample " + std::to_string(s);
                  return false;
                }
                const Vec u = oracle::random_vec(rng, tensor(v.dualized(), w));
                const cplx k = k_coefficient(f, u);
                const LinMap z = zeta(f);
                for (int probe = 0; probe < 2; ++probe) {
                  const Vec x = oracle::random_vec(rng, v);
                  const Vec out = apply(z, kron_vec(x, u));
                  const Vec expect =
                      scale(k, kron_vec(bell_vector(v), apply(f, x)));
                  if (max_abs_diff(out, expect) > kTol) {
                    detail = "context coefficient drifted at sample " +
                             std::to_string(s);
                    return false;
                  }
                }
              }
              return true;
            });

  criterion(4, "interaction laws and the trace-preserving embedding",
            [](std::string& detail) {
              Rng rng(1004);
              if (!goi_laws_for_instance<FdvecTensor>(rng, kTol, detail))
                return false;
              if (!goi_laws_for_instance<FrelTimes>(rng, 0.0, detail))
                return false;
              if (!goi_laws_for_instance<FrelPlus>(rng, 0.0, detail)) return false;
              for (int s = 0; s < 50; ++s) {
                const TensorSpace a = FdvecTensor::random_obj(rng, 3);
                const TensorSpace b = FdvecTensor::random_obj(rng, 3);
                const TensorSpace c = FdvecTensor::random_obj(rng, 3);
                const LinMap f = oracle::random_map(rng, a, b);
                const LinMap g = oracle::random_map(rng, b, c);
                if (!GoiFdvec::mor_eq(
                        GoiFdvec::compose(GoiFdvec::embed(f, a, b),
                                          GoiFdvec::embed(g, b, c)),
                        GoiFdvec::embed(compose(f, g), a, c), kTol)) {
                  detail = "embedding not functorial at sample " +
                           std::to_string(s);
                  return false;
                }
                const TensorSpace u = FdvecTensor::random_obj(rng, 3);
                const LinMap t =
                    oracle::random_map(rng, tensor(a, u), tensor(b, u));
                const GoiFdvec::Object ga{a, unit_space()}, gb{b, unit_space()},
                    gu{u, unit_space()};
                if (!GoiFdvec::mor_eq(
                        GoiFdvec::embed(vec_trace(t, a, b, u), a, b),
                        GoiFdvec::trace(
                            GoiFdvec::embed(t, tensor(a, u), tensor(b, u)), ga,
                            gb, gu),
                        kTol)) {
                  detail = "embedding broke the trace at sample " +
                           std::to_string(s);
                  return false;
                }
              }
              return true;
            });

  criterion(5, "projector network proportional to interaction composition (25 pairs)",
            [](std::string& detail) {
              Rng rng(1005);
              for (int s = 0; s < 25; ++s) {
                const GoiFdvec::Object a{make_space("V", rng.integer(1, 2)),
                                         make_space("V", rng.integer(1, 2))};
                const GoiFdvec::Object b{make_space("V", rng.integer(1, 2)),
                                         make_space("V", rng.integer(1, 2))};
                const GoiFdvec::Object c{make_space("V", rng.integer(1, 2)),
                                         make_space("V", rng.integer(1, 2))};
                const auto f = random_goi_fdvec(rng, a, b);
                const auto g = random_goi_fdvec(rng, b, c);
                const NetworkCheck chk = check_network_against_interaction(f, g, kTol);
                if (!chk.proportional || std::abs(chk.scalar) <= kTol) {
                  detail = "pair " + std::to_string(s) +
                           " not proportional to the traced composite";
                  return false;
                }
              }
              return true;
            });

  criterion(6, "teleportation: probability 1/4 and a unit-modulus transport scalar",
            [](std::string& detail) {
              Rng rng(1006);
              for (int s = 0; s < 10; ++s) {
                const TensorSpace v2 = make_space("V", 2);
                const Vec state = oracle::random_unit_vec(rng, v2);
                const Vec ctx = scale(1.0 / std::sqrt(2.0),
                                      bell_pair(v2.dualized(), v2));
                const DemoReport r = teleport_demo(state, ctx, kTol);
                if (r.failure_branch || std::abs(r.probability - 0.25) > kTol) {
                  detail = "probability " + std::to_string(r.probability);
                  return false;
                }
                if (!r.proportional_to_expected ||
                    std::abs(std::abs(r.scalar) - 1.0) > 1e-6) {
                  detail = "transported state not a phase of the input";
                  return false;
                }
              }
              return true;
            });

  criterion(7, "support functor: counterexample, lax inclusion, strictness",
            [](std::string& detail) {
              const LaxCounterexample ce = laxity_counterexample();
              if (!rel_eq(ce.composite_support,
                          rel_identity(numbered_names("", 2))) ||
                  !rel_eq(ce.support_composite,
                          rel_full(numbered_names("", 2), numbered_names("", 2)))) {
                detail = "counterexample relations are wrong";
                return false;
              }
              Rng rng(1007);
              const TensorSpace v2 = make_space("V", 2), v3 = make_space("V", 3);
              for (int s = 0; s < 100; ++s) {
                const LinMap f = oracle::random_map(rng, v2, v3);
                const LinMap g = oracle::random_map(rng, v3, v2);
                if (!check_lax(f, g, kTol).inclusion) {
                  detail = "lax inclusion failed at sample " + std::to_string(s);
                  return false;
                }
              }
              for (int s = 0; s < 50; ++s) {
                const LinMap f = oracle::random_nonneg_map(rng, v2, v3);
                const LinMap g = oracle::random_nonneg_map(rng, v3, v2);
                if (!check_lax(f, g, kTol).equality) {
                  detail = "strict functoriality failed at sample " +
                           std::to_string(s);
                  return false;
                }
                if (!rel_eq(functor_r(kron(f, g), kTol),
                            rel_tensor_times(functor_r(f, kTol),
                                             functor_r(g, kTol)))) {
                  detail = "tensor preservation failed at sample " +
                           std::to_string(s);
                  return false;
                }
              }
              for (int s = 0; s < 50; ++s) {
                const LinMap f = oracle::random_nonneg_map(rng, tensor(v2, v3),
                                                           tensor(v2, v3), 0.4);
                if (!r_preserves_trace(f, v2, v2, v3, kTol).holds) {
                  detail = "trace preservation failed at sample " +
                           std::to_string(s);
                  return false;
                }
              }
              return true;
            });

  criterion(8, "weight correspondence preserves composition, tensor and trace",
            [](std::string& detail) {
              Rng rng(1008);
              const TensorSpace v2 = make_space("V", 2), v3 = make_space("V", 3);
              for (int s = 0; s < 30; ++s) {
                const LinMap f = oracle::random_nonneg_map(rng, v2, v3);
                const LinMap g = oracle::random_nonneg_map(rng, v3, v2);
                if (!multirel_eq(multirel_compose(vec_iso(f), vec_iso(g)),
                                 vec_iso(compose(f, g)), kTol) ||
                    !multirel_eq(multirel_tensor(vec_iso(f), vec_iso(g)),
                                 vec_iso(kron(f, g)), kTol)) {
                  detail = "composition/tensor failed at sample " +
                           std::to_string(s);
                  return false;
                }
                const LinMap t =
                    oracle::random_nonneg_map(rng, tensor(v2, v3), tensor(v2, v3));
                if (!multirel_eq(
                        multirel_trace(vec_iso(t), numbered_names("", 2),
                                       numbered_names("", 2),
                                       numbered_names("", 3)),
                        vec_iso(vec_trace(t, v2, v2, v3)), kTol)) {
                  detail = "trace failed at sample " + std::to_string(s);
                  return false;
                }
                if (max_abs_diff(vec_iso_inverse(vec_iso(f)), f) > 0.0) {
                  detail = "round trip not exact at sample " + std::to_string(s);
                  return false;
                }
              }
              return true;
            });

  criterion(9, "compiler: data movers denote, reduction preserves denotations",
            [](std::string& detail) {
              using namespace goi::lam;
              {
                const LinMap d =
                    denote(compile_term(typecheck(parse("\\x:B2. x"))));
                if (!approx_eq(d, identity_map(make_space("B", 2)), kTol)) {
                  detail = "identity term does not denote the identity";
                  return false;
                }
              }
              {
                const LinMap d = denote(
                    compile_term(typecheck(parse("\\x:B2. \\y:B2. (y, x)"))));
                const TensorSpace b2 = make_space("B", 2);
                if (!(max_abs_diff(d, permute_blocks({b2, b2}, {1, 0})) <= kTol)) {
                  detail = "swap term does not denote the swap";
                  return false;
                }
              }
              {
                const LinMap d = denote(compile_term(typecheck(parse(
                    "\\p:(B2*B2)*B2. let (q,z) = p in let (x,y) = q in (x,(y,z))"))));
                for (std::size_t i = 0; i < 8; ++i)
                  for (std::size_t j = 0; j < 8; ++j)
                    if (std::abs(d.at(i, j) - (i == j ? cplx{1.0} : cplx{})) >
                        kTol) {
                      detail = "associator does not regroup cleanly";
                      return false;
                    }
              }
              const std::vector<const char*> corpus = {
                  "\\x:B2. x",
                  "\\y:B2. (\\x:B2. x) y",
                  "\\x:B2. \\y:B2. (y, x)",
                  "\\p:B2*B2. let (a,b) = p in (b,a)",
                  "\\p:(B2*B2)*B2. let (q,z) = p in let (x,y) = q in (x,(y,z))",
                  "(\\f:B2-oB2. \\x:B2. f x) (\\y:B2. y)",
                  "\\x:B2. \\y:B2. (\\p:B2*B2. p) (x, y)",
                  "\\x:B2*B2. let (a,b) = (\\p:B2*B2. p) x in (b,a)",
                  "\\x:B2. (\\y:B2. (\\z:B2. z) y) x",
                  "\\p:B2*B2. let (a,b) = p in (\\q:B2*B2. q) (b,a)",
                  "\\f:B2-oB2. \\x:B2. (\\g:B2-oB2. g x) f",
                  "\\x:B3. x",
              };
              for (const char* src : corpus) {
                const TermPtr t = parse(src);
                const Compiled before = compile_term(typecheck(t));
                const Compiled after = compile_term(typecheck(beta_reduce(t)));
                if (!approx_eq(before.morphism.under, after.morphism.under,
                               kTol)) {
                  detail = std::string("reduction changed the denotation of ") +
                           src;
                  return false;
                }
              }
              try {
                typecheck(parse("\\x:B2. (x, x)"));
                detail = "contraction was accepted";
                return false;
              } catch (const TypeError&) {
              }
              return true;
            });

  if (failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", failures);
  return 1;
}
