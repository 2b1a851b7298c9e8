#pragma once
// The three traced symmetric monoidal category instances and the
// randomized trace-axiom suite.
//
// Each instance is a struct of static operations over its object and
// morphism types, so the interaction construction and the axiom suite
// can be written once and instantiated per category.

#include <cstdint>
#include <string>
#include <vector>

#include "goi/linalg.hpp"
#include "goi/relation.hpp"

namespace goi {

enum class CatTag { FdvecTensor, FrelTimes, FrelPlus };

const char* cat_name(CatTag tag);
CatTag cat_from_name(const std::string& name);  // throws Error on unknown names

// Deterministic RNG with explicitly coded value derivations, so the
// same seed produces the same stream on every platform.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next();                                  // splitmix64 step
  double unit();                                         // [0, 1)
  double sym();                                          // [-1, 1]
  cplx scalar();                                         // re, im in [-1, 1]
  std::uint64_t integer(std::uint64_t lo, std::uint64_t hi);  // inclusive
  bool coin(double p);
  Rng fork(std::uint64_t stream) const;
};

// Trace of (FDVec,(x)): result_ik = sum_a f[(i,a)][(k,a)] for
// f : V(x)U -> W(x)U.
LinMap vec_trace(const LinMap& f, const TensorSpace& v, const TensorSpace& w,
                 const TensorSpace& u);

// An atomic named carrier, the building block of relational objects.
struct Carrier {
  std::string label;
  std::vector<std::string> elems;

  friend bool operator==(const Carrier&, const Carrier&) = default;
};

// Object of (FRel,x): a flat product of atomic carriers. The empty
// product is the one-element unit, and tensoring is concatenation, so
// the monoidal structure is strict.
struct TimesObj {
  std::vector<Carrier> atoms;

  std::size_t size() const;
  std::vector<std::string> element_names() const;  // row-major tuples

  friend bool operator==(const TimesObj&, const TimesObj&) = default;
};

// Object of (FRel,+): a flat disjoint union of atomic carriers; the
// empty union is the zero-element unit.
struct PlusObj {
  std::vector<Carrier> atoms;

  std::size_t size() const;
  std::vector<std::string> element_names() const;  // concatenated blocks

  friend bool operator==(const PlusObj&, const PlusObj&) = default;
};

TimesObj times_obj(Carrier c);
PlusObj plus_obj(Carrier c);
Carrier carrier(const std::string& label, std::size_t n);

struct FdvecTensor {
  static constexpr CatTag tag = CatTag::FdvecTensor;
  using Obj = TensorSpace;
  using Mor = LinMap;

  static Obj unit() { return unit_space(); }
  static Obj tensor_obj(const Obj& a, const Obj& b) {
    return ::goi::tensor(a, b);
  }
  static bool obj_eq(const Obj& a, const Obj& b) { return a == b; }
  static std::size_t obj_size(const Obj& a) { return a.dim(); }

  static Mor identity(const Obj& a) { return identity_map(a); }
  static Mor compose(const Mor& f, const Mor& g) { return goi::compose(f, g); }
  static Mor tensor(const Mor& f, const Mor& g) { return goi::kron(f, g); }
  static Mor trace(const Mor& f, const Obj& x, const Obj& y, const Obj& u) {
    return vec_trace(f, x, y, u);
  }
  static Mor block_permutation(const std::vector<Obj>& blocks,
                               const std::vector<std::size_t>& perm) {
    return permute_blocks(blocks, perm);
  }
  static bool mor_eq(const Mor& f, const Mor& g, double tol) {
    return approx_eq(f, g, tol);
  }

  static Obj random_obj(Rng& rng, std::size_t max_dim);
  static Mor random_mor(Rng& rng, const Obj& dom, const Obj& cod);
  static std::string describe(const Mor& f);
};

struct FrelTimes {
  static constexpr CatTag tag = CatTag::FrelTimes;
  using Obj = TimesObj;
  using Mor = Rel;

  static Obj unit() { return TimesObj{}; }
  static Obj tensor_obj(const Obj& a, const Obj& b);
  static bool obj_eq(const Obj& a, const Obj& b) { return a == b; }
  static std::size_t obj_size(const Obj& a) { return a.size(); }

  static Mor identity(const Obj& a) { return rel_identity(a.element_names()); }
  static Mor compose(const Mor& f, const Mor& g) { return rel_compose(f, g); }
  static Mor tensor(const Mor& f, const Mor& g) { return rel_tensor_times(f, g); }
  static Mor trace(const Mor& f, const Obj& x, const Obj& y, const Obj& u) {
    return rel_times_trace(f, x.element_names(), y.element_names(),
                           u.element_names());
  }
  static Mor block_permutation(const std::vector<Obj>& blocks,
                               const std::vector<std::size_t>& perm);
  static bool mor_eq(const Mor& f, const Mor& g, double) { return rel_eq(f, g); }

  static Obj random_obj(Rng& rng, std::size_t max_size);
  static Mor random_mor(Rng& rng, const Obj& dom, const Obj& cod);
  static std::string describe(const Mor& f) { return show(f); }
};

struct FrelPlus {
  static constexpr CatTag tag = CatTag::FrelPlus;
  using Obj = PlusObj;
  using Mor = Rel;

  static Obj unit() { return PlusObj{}; }
  static Obj tensor_obj(const Obj& a, const Obj& b);
  static bool obj_eq(const Obj& a, const Obj& b) { return a == b; }
  static std::size_t obj_size(const Obj& a) { return a.size(); }

  static Mor identity(const Obj& a) { return rel_identity(a.element_names()); }
  static Mor compose(const Mor& f, const Mor& g) { return rel_compose(f, g); }
  static Mor tensor(const Mor& f, const Mor& g) { return rel_tensor_plus(f, g); }
  static Mor trace(const Mor& f, const Obj& x, const Obj& y, const Obj& u) {
    return rel_plus_trace(f, x.element_names(), y.element_names(),
                          u.element_names());
  }
  static Mor block_permutation(const std::vector<Obj>& blocks,
                               const std::vector<std::size_t>& perm);
  static bool mor_eq(const Mor& f, const Mor& g, double) { return rel_eq(f, g); }

  static Obj random_obj(Rng& rng, std::size_t max_size);
  static Mor random_mor(Rng& rng, const Obj& dom, const Obj& cod);
  static std::string describe(const Mor& f) { return show(f); }
};

inline Rel rel_symmetry_times(const TimesObj& a, const TimesObj& b) {
  return FrelTimes::block_permutation({a, b}, {1, 0});
}

inline Rel rel_symmetry_plus(const PlusObj& a, const PlusObj& b) {
  return FrelPlus::block_permutation({a, b}, {1, 0});
}

// One randomized axiom check: tightening (naturality in the free
// objects), sliding (dinaturality in the traced object), vanishing
// (unit and two-factor traces), superposing, yanking.
struct AxiomCheck {
  std::string axiom;
  std::string category;
  int samples = 0;
  bool passed = false;
  std::string counterexample;  // empty when passed
};

template <class C>
std::vector<AxiomCheck> trace_axiom_suite(int samples, std::uint64_t seed,
                                          double tol = kDefaultTol);

std::vector<AxiomCheck> trace_axiom_suite(CatTag tag, int samples,
                                          std::uint64_t seed,
                                          double tol = kDefaultTol);

}  // namespace goi
