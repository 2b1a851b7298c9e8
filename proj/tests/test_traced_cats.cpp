#include "doctest.h"
#include "goi/category.hpp"
#include "oracles.hpp"

using namespace goi;

namespace {
const TensorSpace V2 = make_space("V", 2);
const TensorSpace V3 = make_space("V", 3);
}  // namespace

TEST_CASE("vec_trace of the identity scales by the traced dimension") {
  const TensorSpace vu = tensor(V2, V3);
  const LinMap t = vec_trace(identity_map(vu), V2, V2, V3);
  CHECK(approx_eq(t, scale(cplx{3.0}, identity_map(V2)), 1e-12));
}

TEST_CASE("vec_trace yanks the symmetry to the identity") {
  const LinMap sigma = permute_blocks({V3, V3}, {1, 0});
  CHECK(approx_eq(vec_trace(sigma, V3, V3, V3), identity_map(V3), 1e-12));
}

TEST_CASE("vec_trace equals the compact closed pipeline") {
  Rng rng(31);
  for (int s = 0; s < 30; ++s) {
    const LinMap f = oracle::random_map(rng, tensor(V2, V3), tensor(V2, V3));
    CHECK(approx_eq(vec_trace(f, V2, V2, V3), oracle::cc_trace(f, V2, V2, V3),
                    1e-9));
  }
}

TEST_CASE("vec_trace is linear") {
  Rng rng(32);
  const TensorSpace vu = tensor(V2, V2);
  const LinMap f = oracle::random_map(rng, vu, vu);
  const LinMap g = oracle::random_map(rng, vu, vu);
  const cplx a = rng.scalar(), b = rng.scalar();
  const LinMap lhs = vec_trace(add(scale(a, f), scale(b, g)), V2, V2, V2);
  const LinMap rhs =
      add(scale(a, vec_trace(f, V2, V2, V2)), scale(b, vec_trace(g, V2, V2, V2)));
  CHECK(approx_eq(lhs, rhs, 1e-9));
}

TEST_CASE("product trace on identities and the empty relation") {
  const auto x = numbered_names("x", 3);
  const auto z = numbered_names("z", 2);
  const TimesObj xz = FrelTimes::tensor_obj(times_obj(carrier("x", 3)),
                                            times_obj(carrier("z", 2)));
  SUBCASE("identity on X x Z traces to the identity on X") {
    const Rel id = rel_identity(xz.element_names());
    CHECK(rel_eq(rel_times_trace(id, x, x, z), rel_identity(x)));
  }
  SUBCASE("the empty relation traces to the empty relation") {
    const Rel none = rel_empty(xz.element_names(), xz.element_names());
    CHECK(rel_eq(rel_times_trace(none, x, x, z), rel_empty(x, x)));
  }
}

TEST_CASE("product trace matches the existential scan") {
  Rng rng(33);
  const auto x = numbered_names("x", 3), y = numbered_names("y", 3);
  const auto z = numbered_names("z", 2);
  for (int s = 0; s < 50; ++s) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::uint32_t i = 0; i < 6; ++i)
      for (std::uint32_t j = 0; j < 6; ++j)
        if (rng.coin(0.3)) pairs.emplace_back(i, j);
    const Rel r = make_rel(numbered_names("d", 6), numbered_names("c", 6),
                           std::move(pairs));
    CHECK(rel_eq(rel_times_trace(r, x, y, z), oracle::brute_times_trace(r, 3, 3, 2)));
  }
}

TEST_CASE("feedback trace: direct exits, chains, and dead loops") {
  const auto x = numbered_names("x", 1), y = numbered_names("y", 1);
  SUBCASE("a lone direct pair survives") {
    const auto z = numbered_names("z", 1);
    const Rel r = make_rel({"x0", "z0"}, {"y0", "z0"}, {{0, 0}});
    const Rel t = rel_plus_trace(r, x, y, z);
    CHECK(rel_eq(t, make_rel(x, y, {{0, 0}})));
  }
  SUBCASE("a two-step chain through Z comes out") {
    const auto z = numbered_names("z", 2);
    // x0 -> z0, z0 -> z1, z1 -> y0
    const Rel r = make_rel({"x0", "z0", "z1"}, {"y0", "z0", "z1"},
                           {{0, 1}, {1, 2}, {2, 0}});
    CHECK(rel_eq(rel_plus_trace(r, x, y, z), make_rel(x, y, {{0, 0}})));
  }
  SUBCASE("a Z cycle with no exit halts the particle") {
    const auto z = numbered_names("z", 2);
    // x0 -> z0, z0 -> z1, z1 -> z0: loops forever
    const Rel r = make_rel({"x0", "z0", "z1"}, {"y0", "z0", "z1"},
                           {{0, 1}, {1, 2}, {2, 1}});
    CHECK(rel_eq(rel_plus_trace(r, x, y, z), rel_empty(x, y)));
  }
}

TEST_CASE("feedback trace equals bounded chain enumeration") {
  Rng rng(34);
  for (int s = 0; s < 60; ++s) {
    const std::size_t nx = rng.integer(1, 4), ny = rng.integer(1, 4);
    const std::size_t nz = rng.integer(1, 4);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::uint32_t i = 0; i < nx + nz; ++i)
      for (std::uint32_t j = 0; j < ny + nz; ++j)
        if (rng.coin(0.3)) pairs.emplace_back(i, j);
    const Rel r = make_rel(numbered_names("d", nx + nz),
                           numbered_names("c", ny + nz), std::move(pairs));
    const auto x = numbered_names("x", nx), y = numbered_names("y", ny);
    const auto z = numbered_names("z", nz);
    CHECK(rel_eq(rel_plus_trace(r, x, y, z),
                 oracle::chain_plus_trace(r, nx, ny, nz)));
  }
}

TEST_CASE("relational composition and tensors") {
  Rng rng(35);
  const auto names3 = numbered_names("a", 3);
  SUBCASE("composition with the identity") {
    for (int s = 0; s < 20; ++s) {
      const Rel r = FrelTimes::random_mor(rng, times_obj(carrier("a", 3)),
                                          times_obj(carrier("b", 4)));
      CHECK(rel_eq(rel_compose(r, rel_identity(numbered_names("b", 4))), r));
      CHECK(rel_eq(rel_compose(rel_identity(names3), r), r));
    }
  }
  SUBCASE("disjoint union with the empty relation on the empty carrier") {
    const Rel r = FrelPlus::random_mor(rng, plus_obj(carrier("a", 3)),
                                       plus_obj(carrier("b", 2)));
    const Rel zero = rel_empty({}, {});
    CHECK(rel_eq(rel_tensor_plus(r, zero), r));
    CHECK(rel_eq(rel_tensor_plus(zero, r), r));
  }
  SUBCASE("the product tensor is bifunctorial") {
    for (int s = 0; s < 20; ++s) {
      const TimesObj a = times_obj(carrier("a", 2)), b = times_obj(carrier("b", 3));
      const TimesObj c = times_obj(carrier("c", 2)), d = times_obj(carrier("d", 2));
      const Rel r = FrelTimes::random_mor(rng, a, b);
      const Rel s1 = FrelTimes::random_mor(rng, b, c);
      const Rel rp = FrelTimes::random_mor(rng, d, a);
      const Rel sp = FrelTimes::random_mor(rng, a, d);
      const Rel lhs = rel_tensor_times(rel_compose(r, s1), rel_compose(rp, sp));
      const Rel rhs = rel_compose(rel_tensor_times(r, rp), rel_tensor_times(s1, sp));
      CHECK(rel_eq(lhs, rhs));
    }
  }
  SUBCASE("the disjoint-union tensor is bifunctorial") {
    for (int s = 0; s < 20; ++s) {
      const PlusObj a = plus_obj(carrier("a", 2)), b = plus_obj(carrier("b", 3));
      const PlusObj c = plus_obj(carrier("c", 2)), d = plus_obj(carrier("d", 2));
      const Rel r = FrelPlus::random_mor(rng, a, b);
      const Rel s1 = FrelPlus::random_mor(rng, b, c);
      const Rel rp = FrelPlus::random_mor(rng, d, a);
      const Rel sp = FrelPlus::random_mor(rng, a, d);
      const Rel lhs = rel_tensor_plus(rel_compose(r, s1), rel_compose(rp, sp));
      const Rel rhs = rel_compose(rel_tensor_plus(r, rp), rel_tensor_plus(s1, sp));
      CHECK(rel_eq(lhs, rhs));
    }
  }
}

TEST_CASE("relational symmetries are involutive") {
  const TimesObj a = times_obj(carrier("a", 2)), b = times_obj(carrier("b", 3));
  const Rel s_x = rel_symmetry_times(a, b);
  CHECK(rel_eq(rel_compose(s_x, rel_symmetry_times(b, a)),
               rel_identity(FrelTimes::tensor_obj(a, b).element_names())));
  const PlusObj p = plus_obj(carrier("a", 2)), q = plus_obj(carrier("b", 3));
  const Rel s_p = rel_symmetry_plus(p, q);
  CHECK(rel_eq(rel_compose(s_p, rel_symmetry_plus(q, p)),
               rel_identity(FrelPlus::tensor_obj(p, q).element_names())));
}

TEST_CASE("yanking is exact for both relational instances") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const TimesObj tx = times_obj(carrier("u", n));
    const Rel sigma_x = FrelTimes::block_permutation({tx, tx}, {1, 0});
    CHECK(rel_eq(FrelTimes::trace(sigma_x, tx, tx, tx), FrelTimes::identity(tx)));

    const PlusObj pu = plus_obj(carrier("u", n));
    const Rel sigma_p = FrelPlus::block_permutation({pu, pu}, {1, 0});
    CHECK(rel_eq(FrelPlus::trace(sigma_p, pu, pu, pu), FrelPlus::identity(pu)));
  }
}

TEST_CASE("sliding endorelations around the feedback trace") {
  Rng rng(36);
  for (int s = 0; s < 40; ++s) {
    const PlusObj x = plus_obj(carrier("x", rng.integer(1, 4)));
    const PlusObj y = plus_obj(carrier("y", rng.integer(1, 4)));
    const PlusObj z = plus_obj(carrier("z", rng.integer(1, 4)));
    const Rel r = FrelPlus::random_mor(rng, FrelPlus::tensor_obj(x, z),
                                       FrelPlus::tensor_obj(y, z));
    const Rel g = FrelPlus::random_mor(rng, z, z);
    const Rel lhs = FrelPlus::trace(
        rel_compose(rel_tensor_plus(rel_identity(x.element_names()), g), r), x,
        y, z);
    const Rel rhs = FrelPlus::trace(
        rel_compose(r, rel_tensor_plus(rel_identity(y.element_names()), g)), x,
        y, z);
    CHECK(rel_eq(lhs, rhs));
  }
}

TEST_CASE("the full axiom suite passes for all three instances") {
  for (const CatTag tag :
       {CatTag::FdvecTensor, CatTag::FrelTimes, CatTag::FrelPlus}) {
    const auto checks = trace_axiom_suite(tag, 50, 7);
    REQUIRE(checks.size() == 5);
    for (const auto& c : checks) {
      INFO(c.category, "/", c.axiom, ": ", c.counterexample);
      CHECK(c.passed);
    }
  }
}

TEST_CASE("the axiom suite is deterministic for a fixed seed") {
  const auto a = trace_axiom_suite(CatTag::FdvecTensor, 10, 42);
  const auto b = trace_axiom_suite(CatTag::FdvecTensor, 10, 42);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].axiom == b[i].axiom);
    CHECK(a[i].passed == b[i].passed);
    CHECK(a[i].counterexample == b[i].counterexample);
  }
}

TEST_CASE("carrier mismatches raise dimension errors") {
  const Rel r = rel_identity(numbered_names("a", 3));
  CHECK_THROWS_AS(rel_compose(r, rel_identity(numbered_names("b", 2))),
                  DimensionError);
  CHECK_THROWS_AS(
      rel_times_trace(r, numbered_names("x", 2), numbered_names("y", 2),
                      numbered_names("z", 2)),
      DimensionError);
  CHECK_THROWS_AS(
      rel_plus_trace(r, numbered_names("x", 3), numbered_names("y", 3),
                     numbered_names("z", 2)),
      DimensionError);
}
