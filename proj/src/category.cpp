#include "goi/category.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

namespace goi {

const char* cat_name(CatTag tag) {
  switch (tag) {
    case CatTag::FdvecTensor: return "fdvec";
    case CatTag::FrelTimes: return "relx";
    case CatTag::FrelPlus: return "relplus";
  }
  return "?";
}

CatTag cat_from_name(const std::string& name) {
  if (name == "fdvec") return CatTag::FdvecTensor;
  if (name == "relx") return CatTag::FrelTimes;
  if (name == "relplus") return CatTag::FrelPlus;
  throw Error("unknown category '" + name + "' (expected fdvec|relx|relplus)");
}

// ---------------------------------------------------------------- rng

std::uint64_t Rng::next() {
  // splitmix64
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::sym() { return 2.0 * unit() - 1.0; }

cplx Rng::scalar() {
  const double re = sym();
  const double im = sym();
  return cplx{re, im};
}

std::uint64_t Rng::integer(std::uint64_t lo, std::uint64_t hi) {
  return lo + next() % (hi - lo + 1);
}

bool Rng::coin(double p) { return unit() < p; }

Rng Rng::fork(std::uint64_t stream) const {
  Rng sub(state ^ (0xa0761d6478bd642full * (stream + 1)));
  sub.next();
  return sub;
}

// ---------------------------------------------------------- vec trace

LinMap vec_trace(const LinMap& f, const TensorSpace& v, const TensorSpace& w,
                 const TensorSpace& u) {
  if (!(f.dom == tensor(v, u) && f.cod == tensor(w, u)))
    throw DimensionError("vec_trace: f must map V(x)U -> W(x)U with the same U");
  const std::size_t nv = v.dim(), nw = w.dim(), nu = u.dim();
  LinMap t = zero_map(v, w);
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t k = 0; k < nw; ++k) {
      cplx acc{};
      for (std::size_t a = 0; a < nu; ++a)
        acc += f.a[(i * nu + a) * (nw * nu) + (k * nu + a)];
      t.a[i * nw + k] = acc;
    }
  return t;
}

// ------------------------------------------------- relational objects

Carrier carrier(const std::string& label, std::size_t n) {
  Carrier c;
  c.label = label;
  c.elems = numbered_names(label, n);
  return c;
}

TimesObj times_obj(Carrier c) { return TimesObj{{std::move(c)}}; }
PlusObj plus_obj(Carrier c) { return PlusObj{{std::move(c)}}; }

std::size_t TimesObj::size() const {
  std::size_t s = 1;
  for (const auto& a : atoms) s *= a.elems.size();
  return s;
}

std::vector<std::string> TimesObj::element_names() const {
  std::vector<std::string> names{""};
  for (const auto& a : atoms) {
    std::vector<std::string> next;
    next.reserve(names.size() * a.elems.size());
    for (const auto& p : names)
      for (const auto& e : a.elems)
        next.push_back(p.empty() ? e : p + "," + e);
    names = std::move(next);
  }
  if (atoms.empty()) names = {"*"};
  return names;
}

std::size_t PlusObj::size() const {
  std::size_t s = 0;
  for (const auto& a : atoms) s += a.elems.size();
  return s;
}

std::vector<std::string> PlusObj::element_names() const {
  std::vector<std::string> names;
  names.reserve(size());
  for (const auto& a : atoms)
    names.insert(names.end(), a.elems.begin(), a.elems.end());
  return names;
}

TimesObj FrelTimes::tensor_obj(const Obj& a, const Obj& b) {
  TimesObj out = a;
  out.atoms.insert(out.atoms.end(), b.atoms.begin(), b.atoms.end());
  return out;
}

PlusObj FrelPlus::tensor_obj(const Obj& a, const Obj& b) {
  PlusObj out = a;
  out.atoms.insert(out.atoms.end(), b.atoms.begin(), b.atoms.end());
  return out;
}

namespace {

template <class Obj>
std::vector<std::string> folded_names(const std::vector<Obj>& blocks) {
  Obj all;
  for (const auto& b : blocks)
    all.atoms.insert(all.atoms.end(), b.atoms.begin(), b.atoms.end());
  return all.element_names();
}

void check_perm(std::size_t n, const std::vector<std::size_t>& perm) {
  if (perm.size() != n) throw DimensionError("permutation arity mismatch");
  std::vector<bool> seen(n, false);
  for (std::size_t p : perm) {
    if (p >= n || seen[p]) throw DimensionError("not a permutation");
    seen[p] = true;
  }
}

}  // namespace

Rel FrelTimes::block_permutation(const std::vector<Obj>& blocks,
                                 const std::vector<std::size_t>& perm) {
  const std::size_t n = blocks.size();
  check_perm(n, perm);
  std::vector<std::size_t> sizes;
  sizes.reserve(n);
  std::size_t total = 1;
  for (const auto& b : blocks) {
    sizes.push_back(b.size());
    total *= b.size();
  }
  std::vector<std::size_t> cstride(n, 1);
  for (std::size_t k = n; k-- > 1;) cstride[k - 1] = cstride[k] * sizes[perm[k]];

  std::vector<Obj> permuted;
  permuted.reserve(n);
  for (std::size_t k = 0; k < n; ++k) permuted.push_back(blocks[perm[k]]);

  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  pairs.reserve(total);
  std::vector<std::size_t> idx(n, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rem = flat;
    for (std::size_t k = n; k-- > 0;) {
      idx[k] = sizes[k] == 0 ? 0 : rem % sizes[k];
      rem = sizes[k] == 0 ? rem : rem / sizes[k];
    }
    std::size_t out = 0;
    for (std::size_t k = 0; k < n; ++k) out += idx[perm[k]] * cstride[k];
    pairs.emplace_back(static_cast<std::uint32_t>(flat),
                       static_cast<std::uint32_t>(out));
  }
  return make_rel(folded_names(blocks), folded_names(permuted), std::move(pairs));
}

Rel FrelPlus::block_permutation(const std::vector<Obj>& blocks,
                                const std::vector<std::size_t>& perm) {
  const std::size_t n = blocks.size();
  check_perm(n, perm);
  std::vector<std::size_t> dom_off(n + 1, 0);
  for (std::size_t k = 0; k < n; ++k) dom_off[k + 1] = dom_off[k] + blocks[k].size();
  // cod offset of each original block = offset of its position in the
  // permuted order.
  const std::vector<std::size_t> pinv = invert_perm(perm);
  std::vector<std::size_t> cod_off_by_pos(n + 1, 0);
  for (std::size_t k = 0; k < n; ++k)
    cod_off_by_pos[k + 1] = cod_off_by_pos[k] + blocks[perm[k]].size();

  std::vector<Obj> permuted;
  permuted.reserve(n);
  for (std::size_t k = 0; k < n; ++k) permuted.push_back(blocks[perm[k]]);

  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t i = 0; i < blocks[b].size(); ++i)
      pairs.emplace_back(static_cast<std::uint32_t>(dom_off[b] + i),
                         static_cast<std::uint32_t>(cod_off_by_pos[pinv[b]] + i));
  return make_rel(folded_names(blocks), folded_names(permuted), std::move(pairs));
}

// ------------------------------------------------- random generators

TensorSpace FdvecTensor::random_obj(Rng& rng, std::size_t max_dim) {
  return make_space("V", rng.integer(1, max_dim));
}

LinMap FdvecTensor::random_mor(Rng& rng, const Obj& dom, const Obj& cod) {
  LinMap f = zero_map(dom, cod);
  for (cplx& c : f.a) c = rng.scalar();
  return f;
}

std::string FdvecTensor::describe(const Mor& f) {
  std::ostringstream os;
  os << f.dom.dim() << "x" << f.cod.dim() << " [";
  for (std::size_t i = 0; i < f.a.size(); ++i) {
    if (i) os << ", ";
    os << f.a[i].real() << (f.a[i].imag() < 0 ? "-" : "+")
       << std::abs(f.a[i].imag()) << "i";
  }
  os << "]";
  return os.str();
}

TimesObj FrelTimes::random_obj(Rng& rng, std::size_t max_size) {
  return times_obj(carrier("X", rng.integer(1, max_size)));
}

Rel FrelTimes::random_mor(Rng& rng, const Obj& dom, const Obj& cod) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t i = 0; i < dom.size(); ++i)
    for (std::uint32_t j = 0; j < cod.size(); ++j)
      if (rng.coin(0.4)) pairs.emplace_back(i, j);
  return make_rel(dom.element_names(), cod.element_names(), std::move(pairs));
}

PlusObj FrelPlus::random_obj(Rng& rng, std::size_t max_size) {
  return plus_obj(carrier("X", rng.integer(1, max_size)));
}

Rel FrelPlus::random_mor(Rng& rng, const Obj& dom, const Obj& cod) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t i = 0; i < dom.size(); ++i)
    for (std::uint32_t j = 0; j < cod.size(); ++j)
      if (rng.coin(0.4)) pairs.emplace_back(i, j);
  return make_rel(dom.element_names(), cod.element_names(), std::move(pairs));
}

// ------------------------------------------------------- axiom suite

namespace {

template <class C>
using AxiomBody = std::function<std::optional<std::string>(Rng&)>;

template <class C>
AxiomCheck run_axiom(const char* axiom, int samples, std::uint64_t seed,
                     std::uint64_t stream, const AxiomBody<C>& body) {
  std::vector<std::string> failures(static_cast<std::size_t>(samples));
  std::vector<char> failed(static_cast<std::size_t>(samples), 0);
  // Samples are independent; each gets its own forked rng so the
  // parallel schedule cannot change the outcome.
#pragma omp parallel for schedule(static)
  for (int s = 0; s < samples; ++s) {
    Rng rng = Rng(seed).fork(stream * 7919 + static_cast<std::uint64_t>(s));
    if (auto bad = body(rng)) {
      failed[static_cast<std::size_t>(s)] = 1;
      failures[static_cast<std::size_t>(s)] =
          "sample " + std::to_string(s) + ": " + *bad;
    }
  }
  AxiomCheck out;
  out.axiom = axiom;
  out.category = cat_name(C::tag);
  out.samples = samples;
  out.passed = true;
  for (int s = 0; s < samples; ++s) {
    if (failed[static_cast<std::size_t>(s)]) {
      out.passed = false;
      out.counterexample = failures[static_cast<std::size_t>(s)];
      break;
    }
  }
  return out;
}

constexpr std::size_t kSuiteMaxSize = 4;

}  // namespace

template <class C>
std::vector<AxiomCheck> trace_axiom_suite(int samples, std::uint64_t seed,
                                          double tol) {
  if (samples < 1) throw Error("axiom suite needs samples >= 1");
  using Obj = typename C::Obj;
  using Mor = typename C::Mor;
  const auto sz = kSuiteMaxSize;

  const AxiomBody<C> tightening = [tol, sz](Rng& rng) -> std::optional<std::string> {
    const Obj a2 = C::random_obj(rng, sz), a = C::random_obj(rng, sz);
    const Obj b = C::random_obj(rng, sz), b2 = C::random_obj(rng, sz);
    const Obj u = C::random_obj(rng, sz);
    const Mor g = C::random_mor(rng, a2, a);
    const Mor f = C::random_mor(rng, C::tensor_obj(a, u), C::tensor_obj(b, u));
    const Mor h = C::random_mor(rng, b, b2);
    const Mor left_lhs =
        C::trace(C::compose(C::tensor(g, C::identity(u)), f), a2, b, u);
    const Mor left_rhs = C::compose(g, C::trace(f, a, b, u));
    if (!C::mor_eq(left_lhs, left_rhs, tol))
      return "left tightening failed for f=" + C::describe(f) +
             ", g=" + C::describe(g);
    const Mor right_lhs =
        C::trace(C::compose(f, C::tensor(h, C::identity(u))), a, b2, u);
    const Mor right_rhs = C::compose(C::trace(f, a, b, u), h);
    if (!C::mor_eq(right_lhs, right_rhs, tol))
      return "right tightening failed for f=" + C::describe(f) +
             ", h=" + C::describe(h);
    return std::nullopt;
  };

  const AxiomBody<C> sliding = [tol, sz](Rng& rng) -> std::optional<std::string> {
    const Obj a = C::random_obj(rng, sz), b = C::random_obj(rng, sz);
    const Obj u = C::random_obj(rng, sz), u2 = C::random_obj(rng, sz);
    const Mor f = C::random_mor(rng, C::tensor_obj(a, u), C::tensor_obj(b, u2));
    const Mor g = C::random_mor(rng, u2, u);
    const Mor lhs =
        C::trace(C::compose(f, C::tensor(C::identity(b), g)), a, b, u);
    const Mor rhs =
        C::trace(C::compose(C::tensor(C::identity(a), g), f), a, b, u2);
    if (!C::mor_eq(lhs, rhs, tol))
      return "sliding failed for f=" + C::describe(f) + ", g=" + C::describe(g);
    return std::nullopt;
  };

  const AxiomBody<C> vanishing = [tol, sz](Rng& rng) -> std::optional<std::string> {
    // Trace over the unit is the morphism itself.
    const Obj a = C::random_obj(rng, sz), b = C::random_obj(rng, sz);
    const Mor f = C::random_mor(rng, a, b);
    if (!C::mor_eq(C::trace(f, a, b, C::unit()), f, tol))
      return "unit vanishing failed for f=" + C::describe(f);
    // Trace over U(x)V is the nested trace.
    const Obj u = C::random_obj(rng, sz), v = C::random_obj(rng, sz);
    const Obj auv = C::tensor_obj(C::tensor_obj(a, u), v);
    const Obj buv = C::tensor_obj(C::tensor_obj(b, u), v);
    const Mor h = C::random_mor(rng, auv, buv);
    const Mor once = C::trace(h, a, b, C::tensor_obj(u, v));
    const Mor nested = C::trace(
        C::trace(h, C::tensor_obj(a, u), C::tensor_obj(b, u), v), a, b, u);
    if (!C::mor_eq(once, nested, tol))
      return "pair vanishing failed for f=" + C::describe(h);
    return std::nullopt;
  };

  const AxiomBody<C> superposing = [tol, sz](Rng& rng) -> std::optional<std::string> {
    const Obj c = C::random_obj(rng, sz), d = C::random_obj(rng, sz);
    const Obj a = C::random_obj(rng, sz), b = C::random_obj(rng, sz);
    const Obj u = C::random_obj(rng, sz);
    const Mor g = C::random_mor(rng, c, d);
    const Mor f = C::random_mor(rng, C::tensor_obj(a, u), C::tensor_obj(b, u));
    const Mor lhs = C::trace(C::tensor(g, f), C::tensor_obj(c, a),
                             C::tensor_obj(d, b), u);
    const Mor rhs = C::tensor(g, C::trace(f, a, b, u));
    if (!C::mor_eq(lhs, rhs, tol))
      return "superposing failed for f=" + C::describe(f) +
             ", g=" + C::describe(g);
    return std::nullopt;
  };

  const AxiomBody<C> yanking = [tol, sz](Rng& rng) -> std::optional<std::string> {
    const Obj u = C::random_obj(rng, sz);
    const Mor sigma = C::block_permutation({u, u}, {1, 0});
    const Mor traced = C::trace(sigma, u, u, u);
    if (!C::mor_eq(traced, C::identity(u), tol))
      return "yanking failed on an object of size " +
             std::to_string(C::obj_size(u));
    return std::nullopt;
  };

  std::vector<AxiomCheck> out;
  out.push_back(run_axiom<C>("tightening", samples, seed, 1, tightening));
  out.push_back(run_axiom<C>("sliding", samples, seed, 2, sliding));
  out.push_back(run_axiom<C>("vanishing", samples, seed, 3, vanishing));
  out.push_back(run_axiom<C>("superposing", samples, seed, 4, superposing));
  out.push_back(run_axiom<C>("yanking", samples, seed, 5, yanking));
  return out;
}

template std::vector<AxiomCheck> trace_axiom_suite<FdvecTensor>(int, std::uint64_t,
                                                                double);
template std::vector<AxiomCheck> trace_axiom_suite<FrelTimes>(int, std::uint64_t,
                                                              double);
template std::vector<AxiomCheck> trace_axiom_suite<FrelPlus>(int, std::uint64_t,
                                                             double);

std::vector<AxiomCheck> trace_axiom_suite(CatTag tag, int samples,
                                          std::uint64_t seed, double tol) {
  switch (tag) {
    case CatTag::FdvecTensor:
      return trace_axiom_suite<FdvecTensor>(samples, seed, tol);
    case CatTag::FrelTimes:
      return trace_axiom_suite<FrelTimes>(samples, seed, tol);
    case CatTag::FrelPlus:
      return trace_axiom_suite<FrelPlus>(samples, seed, tol);
  }
  throw Error("unreachable category tag");
}

}  // namespace goi
