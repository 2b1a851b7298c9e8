#pragma once
// The interaction (GoI) construction over a traced category instance.
//
// Objects are pairs (pos, neg) of base objects; a morphism
// (A+,A-) -> (B+,B-) is carried by a base morphism A+ (x) B- -> A- (x) B+.
// Composition traces out the middle object from the tensor of the two
// carriers. The base tensor is not literally associative on morphism
// operands, so explicit block permutations align the factors:
//   pre  : A+ (x) C- (x) B+ (x) B-  ->  A+ (x) B- (x) B+ (x) C-
//   post : A- (x) B+ (x) B- (x) C+  ->  A- (x) C+ (x) B+ (x) B-
// after which the trace over B+ (x) B- yields the composite carrier
// A+ (x) C- -> A- (x) C+.

#include <vector>

#include "goi/category.hpp"

namespace goi {

template <class C>
struct Goi {
  using BaseObj = typename C::Obj;
  using BaseMor = typename C::Mor;

  struct Object {
    BaseObj pos, neg;

    friend bool operator==(const Object&, const Object&) = default;
  };

  struct Morphism {
    Object src, dst;
    BaseMor under;  // src.pos (x) dst.neg -> src.neg (x) dst.pos
  };

  static Object unit_object() { return Object{C::unit(), C::unit()}; }

  static Object dual(const Object& a) { return Object{a.neg, a.pos}; }

  static Object tensor_obj(const Object& a, const Object& b) {
    return Object{C::tensor_obj(a.pos, b.pos), C::tensor_obj(a.neg, b.neg)};
  }

  static Morphism make(Object src, Object dst, BaseMor under) {
    const BaseObj want_dom = C::tensor_obj(src.pos, dst.neg);
    const BaseObj want_cod = C::tensor_obj(src.neg, dst.pos);
    if (!carrier_fits(under, want_dom, want_cod))
      throw DimensionError(
          "interaction morphism: carrier does not match endpoint objects");
    return Morphism{std::move(src), std::move(dst), std::move(under)};
  }

  static Morphism identity(const Object& a) {
    BaseMor under = C::block_permutation({a.pos, a.neg}, {1, 0});
    return Morphism{a, a, std::move(under)};
  }

  static Morphism compose(const Morphism& f, const Morphism& g) {
    if (!(f.dst == g.src))
      throw DimensionError("interaction compose: endpoint mismatch");
    const BaseObj &ap = f.src.pos, &an = f.src.neg;
    const BaseObj &bp = f.dst.pos, &bn = f.dst.neg;
    const BaseObj &cp = g.dst.pos, &cn = g.dst.neg;
    const BaseMor pre = C::block_permutation({ap, cn, bp, bn}, {0, 3, 2, 1});
    const BaseMor mid = C::tensor(f.under, g.under);
    const BaseMor post = C::block_permutation({an, bp, bn, cp}, {0, 3, 1, 2});
    const BaseMor whole = C::compose(C::compose(pre, mid), post);
    const BaseObj x = C::tensor_obj(ap, cn);
    const BaseObj y = C::tensor_obj(an, cp);
    const BaseObj u = C::tensor_obj(bp, bn);
    BaseMor traced = C::trace(whole, x, y, u);
    return Morphism{f.src, g.dst, std::move(traced)};
  }

  static Morphism tensor(const Morphism& f, const Morphism& g) {
    const BaseObj &ap = f.src.pos, &an = f.src.neg;
    const BaseObj &bp = f.dst.pos, &bn = f.dst.neg;
    const BaseObj &cp = g.src.pos, &cn = g.src.neg;
    const BaseObj &dp = g.dst.pos, &dn = g.dst.neg;
    const BaseMor pre = C::block_permutation({ap, cp, bn, dn}, {0, 2, 1, 3});
    const BaseMor mid = C::tensor(f.under, g.under);
    const BaseMor post = C::block_permutation({an, bp, cn, dp}, {0, 2, 1, 3});
    BaseMor under = C::compose(C::compose(pre, mid), post);
    return Morphism{tensor_obj(f.src, g.src), tensor_obj(f.dst, g.dst),
                    std::move(under)};
  }

  // Identity-wiring permutation of tensored objects: the k-th factor of
  // the result is objs[perm[k]].
  static Morphism block_perm(const std::vector<Object>& objs,
                             const std::vector<std::size_t>& perm) {
    const std::size_t n = objs.size();
    const std::vector<std::size_t> pinv = invert_perm(perm);
    std::vector<BaseObj> blocks;
    blocks.reserve(2 * n);
    for (std::size_t k = 0; k < n; ++k) blocks.push_back(objs[k].pos);
    for (std::size_t k = 0; k < n; ++k) blocks.push_back(objs[perm[k]].neg);
    std::vector<std::size_t> q(2 * n);
    for (std::size_t k = 0; k < n; ++k) q[k] = n + pinv[k];
    for (std::size_t k = 0; k < n; ++k) q[n + k] = perm[k];
    Object src = unit_object(), dst = unit_object();
    for (std::size_t k = 0; k < n; ++k) src = tensor_obj(src, objs[k]);
    for (std::size_t k = 0; k < n; ++k) dst = tensor_obj(dst, objs[perm[k]]);
    BaseMor under = C::block_permutation(blocks, q);
    return Morphism{std::move(src), std::move(dst), std::move(under)};
  }

  static Morphism symmetry(const Object& a, const Object& b) {
    return block_perm({a, b}, {1, 0});
  }

  // Unit and counit of the compact closed structure; all four are pure
  // wiring. The carrier of I -> Y runs Y.neg -> Y.pos and the carrier
  // of Y -> I runs Y.pos -> Y.neg.
  static Morphism eta(const Object& x) {  // I -> X (x) X*
    return make(unit_object(), tensor_obj(x, dual(x)),
                C::block_permutation({x.neg, x.pos}, {1, 0}));
  }
  static Morphism eta_rev(const Object& x) {  // I -> X* (x) X
    return make(unit_object(), tensor_obj(dual(x), x),
                C::block_permutation({x.pos, x.neg}, {1, 0}));
  }
  static Morphism eps(const Object& x) {  // X (x) X* -> I
    return make(tensor_obj(x, dual(x)), unit_object(),
                C::block_permutation({x.pos, x.neg}, {1, 0}));
  }
  static Morphism eps_rev(const Object& x) {  // X* (x) X -> I
    return make(tensor_obj(dual(x), x), unit_object(),
                C::block_permutation({x.neg, x.pos}, {1, 0}));
  }

  // Full and faithful embedding of the base category, A |-> (A, I).
  static Morphism embed(const BaseMor& c, const BaseObj& dom, const BaseObj& cod) {
    return make(Object{dom, C::unit()}, Object{cod, C::unit()}, c);
  }

  // Canonical trace of the compact closed structure, used to check that
  // the embedding preserves the base trace.
  static Morphism trace(const Morphism& h, const Object& a, const Object& b,
                        const Object& u) {
    if (!(h.src == tensor_obj(a, u) && h.dst == tensor_obj(b, u)))
      throw DimensionError("interaction trace: h must map A(x)U -> B(x)U");
    const Morphism step1 = tensor(identity(a), eta(u));
    const Morphism step2 = tensor(h, identity(dual(u)));
    const Morphism step3 = tensor(identity(b), symmetry(u, dual(u)));
    const Morphism step4 = tensor(identity(b), eps_rev(u));
    return compose(compose(compose(step1, step2), step3), step4);
  }

  static bool mor_eq(const Morphism& f, const Morphism& g, double tol) {
    return f.src == g.src && f.dst == g.dst && C::mor_eq(f.under, g.under, tol);
  }

 private:
  // Vector-space carriers must match the endpoint factor lists exactly;
  // relational carriers are checked by size (names are display only).
  static bool carrier_fits(const LinMap& m, const TensorSpace& dom,
                           const TensorSpace& cod) {
    return m.dom == dom && m.cod == cod;
  }
  template <class Obj>
  static bool carrier_fits(const Rel& m, const Obj& dom, const Obj& cod) {
    return m.dom.size() == C::obj_size(dom) && m.cod.size() == C::obj_size(cod);
  }
};

using GoiFdvec = Goi<FdvecTensor>;
using GoiRelTimes = Goi<FrelTimes>;
using GoiRelPlus = Goi<FrelPlus>;

}  // namespace goi
