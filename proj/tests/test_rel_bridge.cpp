#include <cmath>

#include "doctest.h"
#include "goi/projector.hpp"
#include "goi/rel_bridge.hpp"
#include "oracles.hpp"

using namespace goi;

namespace {
const TensorSpace V2 = make_space("V", 2);
const TensorSpace V3 = make_space("V", 3);
}  // namespace

TEST_CASE("the support of the identity is the diagonal") {
  CHECK(rel_eq(functor_r(identity_map(V3)), rel_identity(numbered_names("", 3))));
  CHECK(rel_eq(functor_r(zero_map(V2, V3)),
               rel_empty(numbered_names("", 2), numbered_names("", 3))));
}

TEST_CASE("the support functor preserves the tensor on nonnegative maps") {
  Rng rng(71);
  for (int s = 0; s < 30; ++s) {
    const LinMap f = oracle::random_nonneg_map(rng, V2, V3);
    const LinMap g = oracle::random_nonneg_map(rng, V3, V2);
    CHECK(rel_eq(functor_r(kron(f, g)),
                 rel_tensor_times(functor_r(f), functor_r(g))));
  }
}

TEST_CASE("the cancellation counterexample") {
  const LaxCounterexample ce = laxity_counterexample();
  CHECK(rel_eq(ce.composite_support, rel_identity(numbered_names("", 2))));
  CHECK(rel_eq(ce.support_composite,
               rel_full(numbered_names("", 2), numbered_names("", 2))));
  CHECK_FALSE(rel_eq(ce.composite_support, ce.support_composite));
  // The matrix itself squares to the identity.
  CHECK(approx_eq(compose(ce.f, ce.f), identity_map(V2), 1e-9));
}

TEST_CASE("lax inclusion holds for arbitrary complex maps") {
  Rng rng(72);
  for (int s = 0; s < 100; ++s) {
    const LinMap f = oracle::random_map(rng, V2, V3);
    const LinMap g = oracle::random_map(rng, V3, V2);
    const LaxReport r = check_lax(f, g);
    CHECK(r.inclusion);
  }
}

TEST_CASE("composition of supports is exact on nonnegative maps") {
  Rng rng(73);
  for (int s = 0; s < 50; ++s) {
    const LinMap f = oracle::random_nonneg_map(rng, V2, V3);
    const LinMap g = oracle::random_nonneg_map(rng, V3, V2);
    const LaxReport r = check_lax(f, g);
    CHECK(r.inclusion);
    CHECK(r.equality);
  }
}

TEST_CASE("a zero row never breaks the inclusion") {
  Rng rng(74);
  for (int s = 0; s < 30; ++s) {
    LinMap f = oracle::random_map(rng, V2, V3);
    for (std::size_t j = 0; j < 3; ++j) f.at(0, j) = cplx{};
    const LinMap g = oracle::random_map(rng, V3, V2);
    CHECK(check_lax(f, g).inclusion);
  }
}

TEST_CASE("the support functor preserves the trace on nonnegative maps") {
  SUBCASE("identity case") {
    const TracePreservationReport r =
        r_preserves_trace(identity_map(tensor(V2, V3)), V2, V2, V3);
    CHECK(r.holds);
    CHECK(rel_eq(r.support_of_trace, rel_identity(numbered_names("", 2))));
  }
  SUBCASE("random nonnegative maps") {
    Rng rng(75);
    for (int s = 0; s < 30; ++s) {
      const LinMap f =
          oracle::random_nonneg_map(rng, tensor(V2, V3), tensor(V3, V3), 0.4);
      CHECK(r_preserves_trace(f, V2, V3, V3).holds);
    }
  }
  SUBCASE("negative entries are rejected up front") {
    LinMap f = zero_map(tensor(V2, V2), tensor(V2, V2));
    f.a[0] = cplx{-1.0, 0.0};
    CHECK_THROWS_AS(r_preserves_trace(f, V2, V2, V2), Error);
  }
}

TEST_CASE("state abstraction is the support of the coordinates") {
  CHECK(abstract_state(basis_vec(V2, 0)) == std::vector<std::size_t>{0});
  const double r = 1.0 / std::sqrt(2.0);
  const Vec plus = make_vec(V2, {cplx{r}, cplx{r}});
  CHECK(abstract_state(plus) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("abstraction commutes with the relational image on theta networks") {
  Rng rng(76);
  for (int s = 0; s < 20; ++s) {
    // A nonnegative projector network: every stage of theta has
    // nonnegative entries, so no cancellation can hide support.
    const LinMap f =
        oracle::random_nonneg_map(rng, tensor(V2, V2), tensor(V3, V2), 0.5);
    const LinMap network = theta(f, V2, V2, V3);
    Vec psi = oracle::random_unit_vec(rng, network.dom);
    for (cplx& c : psi.coords) c = cplx{std::abs(c) + 0.01, 0.0};
    const Vec out = apply(network, psi);
    const auto lhs = abstract_state(out);
    const auto rhs = rel_image(functor_r(network), abstract_state(psi));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("dual bases send the star operation to the relational converse") {
  Rng rng(77);
  for (int s = 0; s < 30; ++s) {
    const LinMap f = oracle::random_nonneg_map(rng, V2, V3);
    // For nonnegative real entries the adjoint is the transpose.
    CHECK(rel_eq(functor_r(adjoint(f)), rel_converse(functor_r(f))));
  }
}

TEST_CASE("multirelations act linearly on weight vectors") {
  const Multirel id = multirel_identity(numbered_names("a", 3));
  const std::vector<double> t{0.5, 2.0, 0.0};
  CHECK(multirel_apply(id, t) == t);

  const Multirel r = make_multirel(numbered_names("a", 2), numbered_names("b", 2),
                                   {1.0, 2.0, 0.0, 3.0});
  const std::vector<double> out = multirel_apply(r, {1.0, 1.0});
  CHECK(out[0] == doctest::Approx(1.0));
  CHECK(out[1] == doctest::Approx(5.0));
  CHECK_THROWS_AS(multirel_apply(r, {-1.0, 0.0}), Error);
  CHECK_THROWS_AS(make_multirel(numbered_names("a", 1), numbered_names("b", 1),
                                {-0.5}),
                  Error);
}

TEST_CASE("the weight correspondence preserves structure") {
  Rng rng(78);
  SUBCASE("composition") {
    for (int s = 0; s < 30; ++s) {
      const LinMap f = oracle::random_nonneg_map(rng, V2, V3);
      const LinMap g = oracle::random_nonneg_map(rng, V3, V2);
      CHECK(multirel_eq(multirel_compose(vec_iso(f), vec_iso(g)),
                        vec_iso(compose(f, g)), 1e-9));
    }
  }
  SUBCASE("tensor") {
    for (int s = 0; s < 15; ++s) {
      const LinMap f = oracle::random_nonneg_map(rng, V2, V2);
      const LinMap g = oracle::random_nonneg_map(rng, V3, V2);
      CHECK(multirel_eq(multirel_tensor(vec_iso(f), vec_iso(g)),
                        vec_iso(kron(f, g)), 1e-9));
    }
  }
  SUBCASE("trace") {
    for (int s = 0; s < 15; ++s) {
      const LinMap f =
          oracle::random_nonneg_map(rng, tensor(V2, V3), tensor(V2, V3));
      CHECK(multirel_eq(
          multirel_trace(vec_iso(f), numbered_names("", 2), numbered_names("", 2),
                         numbered_names("", 3)),
          vec_iso(vec_trace(f, V2, V2, V3)), 1e-9));
    }
  }
  SUBCASE("round trip copies entries") {
    const LinMap f = oracle::random_nonneg_map(rng, V2, V2);
    const LinMap back = vec_iso_inverse(vec_iso(f));
    CHECK(max_abs_diff(back, f) < 1e-12);
  }
  SUBCASE("negative and complex entries are rejected") {
    LinMap f = zero_map(V2, V2);
    f.a[0] = cplx{0.0, 1.0};
    CHECK_THROWS_AS(vec_iso(f), Error);
  }
}
