// Command line front end: every suite and demo, JSON on stdout.
// Exit status: 0 all checks passed, 1 a property failed, 2 usage error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "goi/json_io.hpp"
#include "goi/lambda.hpp"
#include "goi/projector.hpp"
#include "goi/rel_bridge.hpp"

using namespace goi;

namespace {

struct Options {
  int samples = 50;
  std::uint64_t seed = 0;
  double tol = kDefaultTol;
};

LinMap random_map(Rng& rng, const TensorSpace& dom, const TensorSpace& cod) {
  LinMap f = zero_map(dom, cod);
  for (cplx& c : f.a) c = rng.scalar();
  return f;
}

Vec random_unit(Rng& rng, const TensorSpace& s) {
  Vec v = zero_vec(s);
  for (cplx& c : v.coords) c = rng.scalar();
  if (norm(v) < 1e-9) v.coords[0] = 1.0;
  return scale(1.0 / norm(v), v);
}

int run_axioms(const std::string& cat, const Options& opt) {
  std::vector<CatTag> tags;
  if (cat == "all")
    tags = {CatTag::FdvecTensor, CatTag::FrelTimes, CatTag::FrelPlus};
  else
    tags = {cat_from_name(cat)};
  bool all_ok = true;
  for (const CatTag tag : tags) {
    for (const AxiomCheck& c : trace_axiom_suite(tag, opt.samples, opt.seed, opt.tol)) {
      std::cout << to_json(c).dump() << "\n";
      all_ok = all_ok && c.passed;
    }
  }
  return all_ok ? 0 : 1;
}

int run_lemma1(const Options& opt) {
  Rng rng(opt.seed);
  bool all_ok = true;
  struct Shape { std::size_t v, w, u; };
  for (const Shape sh : {Shape{2, 2, 2}, Shape{2, 3, 2}}) {
    const TensorSpace v = make_space("V", sh.v), w = make_space("V", sh.w),
                      u = make_space("V", sh.u);
    double max_err = 0.0, leak = 0.0;
    for (int s = 0; s < opt.samples; ++s) {
      const LinMap f = random_map(rng, tensor(v, u), tensor(w, u));
      max_err = std::max(
          max_err, max_abs_diff(theta(f, v, u, w),
                                kron(vec_trace(f, v, w, u), bell_projector(u).map)));
      Vec orth = zero_vec(tensor(u, u.dualized()));
      orth.coords[1] = 1.0;
      leak = std::max(leak, norm(apply(theta(f, v, u, w),
                                       kron_vec(random_unit(rng, v), orth))));
    }
    const bool ok = max_err <= opt.tol && leak <= opt.tol;
    all_ok = all_ok && ok;
    std::cout << json{{"check", "trace-factorization"},
                      {"dims", {sh.v, sh.w, sh.u}},
                      {"samples", opt.samples},
                      {"max_err", max_err},
                      {"orthogonal_context_leak", leak},
                      {"passed", ok}}
                     .dump()
              << "\n";
  }
  return all_ok ? 0 : 1;
}

int run_lemma2(const Options& opt) {
  Rng rng(opt.seed);
  const TensorSpace v = make_space("V", 2), w = make_space("V", 3);
  double pipe_err = 0.0, coeff_err = 0.0;
  for (int s = 0; s < opt.samples; ++s) {
    const LinMap f = random_map(rng, v, w);
    const Vec state = random_unit(rng, v);
    pipe_err = std::max(
        pipe_err, max_abs_diff(apply(xi(f), kron_vec(state, map_vector(f))),
                               kron_vec(bell_vector(v), apply(f, state))));
    const Vec u = random_unit(rng, tensor(v.dualized(), w));
    const cplx k = k_coefficient(f, u);
    for (int probe = 0; probe < 2; ++probe) {
      const Vec x = random_unit(rng, v);
      coeff_err = std::max(
          coeff_err,
          max_abs_diff(apply(zeta(f), kron_vec(x, u)),
                       scale(k, kron_vec(bell_vector(v), apply(f, x)))));
    }
  }
  const bool ok = pipe_err <= opt.tol && coeff_err <= opt.tol;
  std::cout << json{{"check", "apply-factorization"},
                    {"samples", opt.samples},
                    {"pipe_err", pipe_err},
                    {"context_coefficient_err", coeff_err},
                    {"passed", ok}}
                   .dump()
            << "\n";
  return ok ? 0 : 1;
}

int run_teleport(std::size_t dim, const std::string& state, bool sample,
                 const Options& opt) {
  Rng rng(opt.seed);
  const TensorSpace v = make_space("V", dim);
  const Vec input = state == "random" ? random_unit(rng, v) : basis_vec(v, 0);
  const Vec b = bell_pair(v.dualized(), v);
  const Vec ctx = scale(1.0 / norm(b), b);
  const DemoReport r = teleport_demo(input, ctx, opt.tol);
  json out = to_json(r);
  out["input"] = to_json(input);
  if (sample) {
    // Seeded stochastic run of the two-gate chain.
    out["sampled_pass"] = rng.unit() < r.probability;
  }
  std::cout << out.dump() << "\n";
  return r.failure_branch ? 1 : 0;
}

int run_clone(std::size_t dim, const std::string& state, const Options& opt) {
  Rng rng(opt.seed);
  const TensorSpace v = make_space("V", dim);
  const Vec input = state == "random" ? random_unit(rng, v) : basis_vec(v, 0);
  const DemoReport r = clone_demo(input, opt.tol);
  json out = to_json(r);
  out["input"] = to_json(input);
  std::cout << out.dump() << "\n";
  return r.failure_branch ? 1 : 0;
}

template <class C>
bool goi_checks(const Options& opt, double tol) {
  using G = Goi<C>;
  Rng rng(opt.seed);
  bool unit_ok = true, assoc_ok = true, embed_ok = true;
  for (int s = 0; s < opt.samples; ++s) {
    const typename G::Object a{C::random_obj(rng, 3), C::random_obj(rng, 3)};
    const typename G::Object b{C::random_obj(rng, 3), C::random_obj(rng, 3)};
    const typename G::Object c{C::random_obj(rng, 3), C::random_obj(rng, 3)};
    auto rnd = [&rng](const typename G::Object& x, const typename G::Object& y) {
      return G::make(x, y,
                     C::random_mor(rng, C::tensor_obj(x.pos, y.neg),
                                   C::tensor_obj(x.neg, y.pos)));
    };
    const auto f = rnd(a, b);
    const auto g = rnd(b, c);
    unit_ok = unit_ok && G::mor_eq(G::compose(f, G::identity(b)), f, tol) &&
              G::mor_eq(G::compose(G::identity(a), f), f, tol);
    const auto h = rnd(c, a);
    assoc_ok = assoc_ok && G::mor_eq(G::compose(G::compose(f, g), h),
                                     G::compose(f, G::compose(g, h)), tol);
    const auto base_a = C::random_obj(rng, 3);
    const auto base_b = C::random_obj(rng, 3);
    const auto base_c = C::random_obj(rng, 3);
    const auto m1 = C::random_mor(rng, base_a, base_b);
    const auto m2 = C::random_mor(rng, base_b, base_c);
    embed_ok = embed_ok &&
               G::mor_eq(G::compose(G::embed(m1, base_a, base_b),
                                    G::embed(m2, base_b, base_c)),
                         G::embed(C::compose(m1, m2), base_a, base_c), tol);
  }
  bool all_ok = true;
  for (const auto& [name, ok] :
       {std::pair<const char*, bool>{"unit", unit_ok},
        std::pair<const char*, bool>{"associativity", assoc_ok},
        std::pair<const char*, bool>{"embed-functorial", embed_ok}}) {
    std::cout << json{{"check", name},
                      {"category", cat_name(C::tag)},
                      {"samples", opt.samples},
                      {"passed", ok}}
                     .dump()
              << "\n";
    all_ok = all_ok && ok;
  }
  return all_ok;
}

int run_goi_compose(const std::string& cat, const Options& opt) {
  bool ok = true;
  const bool all = cat == "all";
  if (all || cat == "fdvec") ok = goi_checks<FdvecTensor>(opt, opt.tol) && ok;
  if (all || cat == "relx") ok = goi_checks<FrelTimes>(opt, 0.0) && ok;
  if (all || cat == "relplus") ok = goi_checks<FrelPlus>(opt, 0.0) && ok;
  return ok ? 0 : 1;
}

int run_network(const Options& opt) {
  Rng rng(opt.seed);
  bool all_ok = true;
  for (int s = 0; s < opt.samples; ++s) {
    const GoiFdvec::Object a{make_space("V", rng.integer(1, 2)),
                             make_space("V", rng.integer(1, 2))};
    const GoiFdvec::Object b{make_space("V", rng.integer(1, 2)),
                             make_space("V", rng.integer(1, 2))};
    const GoiFdvec::Object c{make_space("V", rng.integer(1, 2)),
                             make_space("V", rng.integer(1, 2))};
    const auto f = GoiFdvec::make(
        a, b, random_map(rng, tensor(a.pos, b.neg), tensor(a.neg, b.pos)));
    const auto g = GoiFdvec::make(
        b, c, random_map(rng, tensor(b.pos, c.neg), tensor(b.neg, c.pos)));
    const NetworkCheck chk = check_network_against_interaction(f, g, opt.tol);
    const bool ok = chk.proportional && std::abs(chk.scalar) > opt.tol;
    all_ok = all_ok && ok;
    std::cout << json{{"check", "network-vs-trace"},
                      {"sample", s},
                      {"proportional", chk.proportional},
                      {"scalar", complex_to_json(chk.scalar)},
                      {"max_err", chk.max_err},
                      {"passed", ok}}
                     .dump()
              << "\n";
  }
  return all_ok ? 0 : 1;
}

int run_functor_r(bool counterexample, const Options& opt) {
  if (counterexample) {
    const LaxCounterexample ce = laxity_counterexample();
    std::cout << json{{"matrix", to_json(ce.f)},
                      {"support_of_composite", to_json(ce.composite_support)},
                      {"composite_of_supports", to_json(ce.support_composite)},
                      {"equal", rel_eq(ce.composite_support, ce.support_composite)}}
                     .dump()
              << "\n";
    return 0;
  }
  Rng rng(opt.seed);
  const TensorSpace v2 = make_space("V", 2), v3 = make_space("V", 3);
  bool lax_ok = true, strict_ok = true, trace_ok = true;
  for (int s = 0; s < opt.samples; ++s) {
    const LinMap f = random_map(rng, v2, v3);
    const LinMap g = random_map(rng, v3, v2);
    lax_ok = lax_ok && check_lax(f, g, opt.tol).inclusion;
    LinMap fp = zero_map(v2, v3), gp = zero_map(v3, v2);
    for (cplx& c : fp.a) c = rng.coin(0.6) ? cplx{rng.unit() + 0.05, 0.0} : cplx{};
    for (cplx& c : gp.a) c = rng.coin(0.6) ? cplx{rng.unit() + 0.05, 0.0} : cplx{};
    strict_ok = strict_ok && check_lax(fp, gp, opt.tol).equality;
    LinMap t = zero_map(tensor(v2, v3), tensor(v2, v3));
    for (cplx& c : t.a) c = rng.coin(0.4) ? cplx{rng.unit() + 0.05, 0.0} : cplx{};
    trace_ok = trace_ok && r_preserves_trace(t, v2, v2, v3, opt.tol).holds;
  }
  bool all_ok = true;
  for (const auto& [name, ok] :
       {std::pair<const char*, bool>{"lax-inclusion", lax_ok},
        std::pair<const char*, bool>{"strict-on-nonnegative", strict_ok},
        std::pair<const char*, bool>{"trace-preservation", trace_ok}}) {
    std::cout << json{{"check", name}, {"samples", opt.samples}, {"passed", ok}}
                     .dump()
              << "\n";
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}

int run_descent() {
  // A fixed nonnegative network with a doubled path, stepped down from
  // matrices to relations to a particle-style feedback network.
  const TensorSpace v = make_space("V", 2), u = make_space("U", 2);
  LinMap f = zero_map(tensor(v, u), tensor(v, u));
  // Two u-paths from x0 to y0 (weights 1 + 1), one half-weight loop on
  // x1, and a cross path x1 -> y0.
  f.at(0 * 2 + 0, 0 * 2 + 0) = 1.0;  // (x0,u0) -> (y0,u0)
  f.at(0 * 2 + 1, 0 * 2 + 1) = 1.0;  // (x0,u1) -> (y0,u1)
  f.at(1 * 2 + 0, 1 * 2 + 0) = 0.5;  // (x1,u0) -> (y1,u0)
  f.at(1 * 2 + 1, 0 * 2 + 1) = 1.0;  // (x1,u1) -> (y0,u1)

  const LinMap traced = vec_trace(f, v, v, u);
  const Rel rf = functor_r(f);
  const Rel r_traced = functor_r(traced);
  const Rel rel_traced = rel_times_trace(rf, numbered_names("", 2),
                                         numbered_names("", 2),
                                         numbered_names("", 2));

  // The same connectivity as a particle network: direct exits x0 -> y0
  // and x1 -> y1, plus a feedback chain x1 -> z0 -> y0 with a z-loop.
  const Rel particle = make_rel({"x0", "x1", "z0"}, {"y0", "y1", "z0"},
                                {{0, 0}, {1, 1}, {1, 2}, {2, 2}, {2, 0}});
  const PlusTraceDetail fed = rel_plus_trace_detailed(
      particle, {"x0", "x1"}, {"y0", "y1"}, {"z0"});

  const LaxCounterexample ce = laxity_counterexample();

  json out;
  out["fdvec"] = {{"map", to_json(f)}, {"trace", to_json(traced)}};
  out["relx"] = {{"support", to_json(rf)},
                 {"trace", to_json(rel_traced)},
                 {"trace_matches_support_of_trace", rel_eq(r_traced, rel_traced)},
                 {"trace_realization", "one-shot"}};
  out["relplus"] = {{"network", to_json(particle)},
                    {"trace", to_json(fed.result)},
                    {"trace_matches_relx", rel_eq(fed.result, rel_traced)},
                    {"trace_realization", "recursive"},
                    {"closure_iterations", fed.closure_iterations}};
  out["losses"] = {
      {"cancellation_lost",
       {{"evidence_equal_supports", rel_eq(ce.composite_support, ce.support_composite)},
        {"support_of_composite", to_json(ce.composite_support)},
        {"composite_of_supports", to_json(ce.support_composite)}}},
      {"multiplicities_lost",
       {{"weights", to_json(vec_iso(traced))},
        {"support", to_json(r_traced)}}}};
  std::cout << out.dump() << "\n";
  return 0;
}

int run_compile(const std::string& path, bool denote_flag, bool full_json) {
  std::ifstream in(path);
  if (!in) {
    std::cout << json{{"error", "cannot open file: " + path}}.dump() << "\n";
    return 1;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    const lam::TermPtr term = lam::parse(buffer.str());
    const lam::TypedTerm typed = lam::typecheck(term);
    const lam::Compiled compiled = lam::compile_term(typed);
    json out{{"term", lam::show(term)},
             {"type", lam::show(typed.type)},
             {"src", to_json(compiled.morphism.src)},
             {"dst", to_json(compiled.morphism.dst)}};
    if (full_json) out["morphism"] = to_json(compiled.morphism);
    if (denote_flag) {
      const LinMap d = lam::denote(compiled);
      out["denotation"] = to_json(d);
    }
    std::cout << out.dump() << "\n";
    return 0;
  } catch (const lam::ParseError& e) {
    std::cout << json{{"error", e.what()}, {"line", e.line}, {"col", e.col}}.dump()
              << "\n";
    return 1;
  } catch (const Error& e) {
    std::cout << json{{"error", e.what()}}.dump() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"traced categories, interaction composition, projector networks"};
  app.require_subcommand(1);
  // Shared flags stay valid after the subcommand name.
  app.fallthrough();

  Options opt;
  app.add_option("--samples", opt.samples, "suite size")
      ->check(CLI::Range(1, 1000000))
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "rng seed")->capture_default_str();
  app.add_option("--tol", opt.tol, "numeric tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  const auto cat_names = CLI::IsMember({"fdvec", "relx", "relplus", "all"});
  std::string cat = "all";
  auto* axioms = app.add_subcommand("axioms", "trace axiom suite");
  axioms->add_option("--cat", cat, "fdvec|relx|relplus|all")->check(cat_names);

  auto* lemma1 = app.add_subcommand("lemma1", "projector realization of the trace");
  auto* lemma2 = app.add_subcommand("lemma2", "projector realization of maps");

  std::size_t dim = 2;
  std::string state = "basis";
  bool sample = false;
  auto* teleport = app.add_subcommand("teleport", "probabilistic teleportation demo");
  teleport->add_option("--dim", dim, "state space dimension")
      ->check(CLI::PositiveNumber);
  teleport->add_option("--state", state, "basis|random")
      ->check(CLI::IsMember({"basis", "random"}));
  teleport->add_flag("--sample", sample, "seeded stochastic outcome");

  auto* clone = app.add_subcommand("clone", "probabilistic copy demo");
  clone->add_option("--dim", dim, "state space dimension")
      ->check(CLI::PositiveNumber);
  clone->add_option("--state", state, "basis|random")
      ->check(CLI::IsMember({"basis", "random"}));

  std::string goi_cat = "all";
  auto* goi_cmd = app.add_subcommand("goi-compose", "interaction category laws");
  goi_cmd->add_option("--cat", goi_cat, "fdvec|relx|relplus|all")->check(cat_names);

  auto* network = app.add_subcommand("network", "projector network vs traced composition");

  bool counterexample = false;
  auto* functor = app.add_subcommand("functor-r", "support functor checks");
  functor->add_flag("--counterexample", counterexample,
                    "emit the cancellation counterexample");

  auto* descent = app.add_subcommand("descent", "matrix -> relation -> particle comparison");

  std::string file;
  bool denote_flag = false, full_json = false;
  auto* compile_cmd = app.add_subcommand("compile", "compile an affine lambda term");
  compile_cmd->add_option("file", file, "term file (.lam)")->required();
  compile_cmd->add_flag("--denote", denote_flag, "extract the first-order matrix");
  compile_cmd->add_flag("--json", full_json, "include the full morphism");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (axioms->parsed()) return run_axioms(cat, opt);
    if (lemma1->parsed()) return run_lemma1(opt);
    if (lemma2->parsed()) return run_lemma2(opt);
    if (teleport->parsed()) return run_teleport(dim, state, sample, opt);
    if (clone->parsed()) return run_clone(dim, state, opt);
    if (goi_cmd->parsed()) return run_goi_compose(goi_cat, opt);
    if (network->parsed()) return run_network(opt);
    if (functor->parsed()) return run_functor_r(counterexample, opt);
    if (descent->parsed()) return run_descent();
    if (compile_cmd->parsed()) return run_compile(file, denote_flag, full_json);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
