#include "goi/relation.hpp"

#include <algorithm>
#include <sstream>

namespace goi {

namespace {

void check(bool ok, const char* msg) {
  if (!ok) throw DimensionError(msg);
}

using Pair = std::pair<std::uint32_t, std::uint32_t>;

std::vector<Pair> normalized(std::vector<Pair> pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

// Dense boolean square matrix for the closure computation.
struct BoolMat {
  std::size_t n;
  std::vector<char> m;
  explicit BoolMat(std::size_t n_) : n(n_), m(n_ * n_, 0) {}
  char& at(std::size_t i, std::size_t j) { return m[i * n + j]; }
  char at(std::size_t i, std::size_t j) const { return m[i * n + j]; }
  bool operator==(const BoolMat& o) const { return m == o.m; }
};

BoolMat bool_mul(const BoolMat& a, const BoolMat& b) {
  BoolMat c(a.n);
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t k = 0; k < a.n; ++k) {
      if (!a.at(i, k)) continue;
      for (std::size_t j = 0; j < a.n; ++j)
        if (b.at(k, j)) c.at(i, j) = 1;
    }
  return c;
}

BoolMat bool_or(const BoolMat& a, const BoolMat& b) {
  BoolMat c(a.n);
  for (std::size_t i = 0; i < a.m.size(); ++i) c.m[i] = a.m[i] | b.m[i];
  return c;
}

}  // namespace

Rel make_rel(std::vector<std::string> dom, std::vector<std::string> cod,
             std::vector<Pair> pairs) {
  for (const auto& [i, j] : pairs)
    check(i < dom.size() && j < cod.size(), "relation pair index out of range");
  return Rel{std::move(dom), std::move(cod), normalized(std::move(pairs))};
}

std::vector<std::string> numbered_names(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

bool rel_eq(const Rel& r, const Rel& s) {
  return r.dom.size() == s.dom.size() && r.cod.size() == s.cod.size() &&
         r.pairs == s.pairs;
}

bool rel_subset(const Rel& r, const Rel& s) {
  if (r.dom.size() != s.dom.size() || r.cod.size() != s.cod.size()) return false;
  return std::includes(s.pairs.begin(), s.pairs.end(), r.pairs.begin(),
                       r.pairs.end());
}

bool rel_contains(const Rel& r, std::uint32_t i, std::uint32_t j) {
  return std::binary_search(r.pairs.begin(), r.pairs.end(), Pair{i, j});
}

Rel rel_identity(const std::vector<std::string>& names) {
  std::vector<Pair> pairs;
  pairs.reserve(names.size());
  for (std::uint32_t i = 0; i < names.size(); ++i) pairs.emplace_back(i, i);
  return Rel{names, names, std::move(pairs)};
}

Rel rel_empty(std::vector<std::string> dom, std::vector<std::string> cod) {
  return Rel{std::move(dom), std::move(cod), {}};
}

Rel rel_full(std::vector<std::string> dom, std::vector<std::string> cod) {
  std::vector<Pair> pairs;
  for (std::uint32_t i = 0; i < dom.size(); ++i)
    for (std::uint32_t j = 0; j < cod.size(); ++j) pairs.emplace_back(i, j);
  return Rel{std::move(dom), std::move(cod), std::move(pairs)};
}

Rel rel_compose(const Rel& r, const Rel& s) {
  check(r.cod.size() == s.dom.size(), "relation composition: carrier mismatch");
  std::vector<Pair> pairs;
  for (const auto& [i, j] : r.pairs)
    for (const auto& [j2, k] : s.pairs)
      if (j == j2) pairs.emplace_back(i, k);
  return Rel{r.dom, s.cod, normalized(std::move(pairs))};
}

Rel rel_converse(const Rel& r) {
  std::vector<Pair> pairs;
  pairs.reserve(r.pairs.size());
  for (const auto& [i, j] : r.pairs) pairs.emplace_back(j, i);
  return Rel{r.cod, r.dom, normalized(std::move(pairs))};
}

Rel rel_union(const Rel& r, const Rel& s) {
  check(r.dom.size() == s.dom.size() && r.cod.size() == s.cod.size(),
        "relation union: carrier mismatch");
  std::vector<Pair> pairs = r.pairs;
  pairs.insert(pairs.end(), s.pairs.begin(), s.pairs.end());
  return Rel{r.dom, r.cod, normalized(std::move(pairs))};
}

namespace {

std::vector<std::string> product_names(const std::vector<std::string>& a,
                                       const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x + "," + y);
  return out;
}

std::vector<std::string> tagged_names(const char* tag,
                                      const std::vector<std::string>& a) {
  std::vector<std::string> out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(tag + x);
  return out;
}

std::vector<std::string> sum_names(const std::vector<std::string>& a,
                                   const std::vector<std::string>& b) {
  std::vector<std::string> out = tagged_names("l:", a);
  const std::vector<std::string> right = tagged_names("r:", b);
  out.insert(out.end(), right.begin(), right.end());
  return out;
}

}  // namespace

Rel rel_tensor_times(const Rel& r, const Rel& s) {
  const std::uint32_t sd = static_cast<std::uint32_t>(s.dom.size());
  const std::uint32_t sc = static_cast<std::uint32_t>(s.cod.size());
  std::vector<Pair> pairs;
  pairs.reserve(r.pairs.size() * s.pairs.size());
  for (const auto& [i1, j1] : r.pairs)
    for (const auto& [i2, j2] : s.pairs)
      pairs.emplace_back(i1 * sd + i2, j1 * sc + j2);
  return Rel{product_names(r.dom, s.dom), product_names(r.cod, s.cod),
             normalized(std::move(pairs))};
}

Rel rel_tensor_plus(const Rel& r, const Rel& s) {
  const std::uint32_t od = static_cast<std::uint32_t>(r.dom.size());
  const std::uint32_t oc = static_cast<std::uint32_t>(r.cod.size());
  std::vector<Pair> pairs = r.pairs;
  for (const auto& [i, j] : s.pairs) pairs.emplace_back(od + i, oc + j);
  return Rel{sum_names(r.dom, s.dom), sum_names(r.cod, s.cod),
             normalized(std::move(pairs))};
}

Rel rel_times_trace(const Rel& r, const std::vector<std::string>& x,
                    const std::vector<std::string>& y,
                    const std::vector<std::string>& z) {
  const std::uint32_t nz = static_cast<std::uint32_t>(z.size());
  check(r.dom.size() == x.size() * z.size() && r.cod.size() == y.size() * z.size(),
        "rel_times_trace: carrier mismatch");
  std::vector<Pair> pairs;
  for (const auto& [a, b] : r.pairs) {
    const std::uint32_t i = a / nz, zi = a % nz;
    const std::uint32_t j = b / nz, zj = b % nz;
    if (zi == zj) pairs.emplace_back(i, j);
  }
  return Rel{x, y, normalized(std::move(pairs))};
}

PlusTraceDetail rel_plus_trace_detailed(const Rel& r,
                                        const std::vector<std::string>& x,
                                        const std::vector<std::string>& y,
                                        const std::vector<std::string>& z) {
  const std::size_t nx = x.size(), ny = y.size(), nz = z.size();
  check(r.dom.size() == nx + nz && r.cod.size() == ny + nz,
        "rel_plus_trace: carrier mismatch");

  // Z -> Z block, reflexive-transitive closure by iterated squaring.
  BoolMat zz(nz == 0 ? 1 : nz);
  if (nz > 0) {
    for (std::size_t i = 0; i < nz; ++i) zz.at(i, i) = 1;
    for (const auto& [a, b] : r.pairs)
      if (a >= nx && b >= ny) zz.at(a - nx, b - ny) = 1;
  }
  int iterations = 0;
  if (nz > 0) {
    for (;;) {
      BoolMat next = bool_or(zz, bool_mul(zz, zz));
      ++iterations;
      if (next == zz) break;
      zz = next;
    }
  }

  std::vector<Pair> pairs;
  // Direct X -> Y exits (the n = 0 chains).
  for (const auto& [a, b] : r.pairs)
    if (a < nx && b < ny) pairs.emplace_back(a, b);
  // X -> Z ; Z* ; Z -> Y.
  for (const auto& [a, z1] : r.pairs) {
    if (a >= nx || z1 < ny) continue;
    for (const auto& [z2, b] : r.pairs) {
      if (z2 < nx || b >= ny) continue;
      if (zz.at(z1 - ny, z2 - nx))
        pairs.emplace_back(a, static_cast<std::uint32_t>(b));
    }
  }
  return PlusTraceDetail{Rel{x, y, normalized(std::move(pairs))}, iterations};
}

Rel rel_plus_trace(const Rel& r, const std::vector<std::string>& x,
                   const std::vector<std::string>& y,
                   const std::vector<std::string>& z) {
  return rel_plus_trace_detailed(r, x, y, z).result;
}

std::string show(const Rel& r) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [i, j] : r.pairs) {
    if (!first) os << ", ";
    first = false;
    os << "(" << (i < r.dom.size() ? r.dom[i] : std::to_string(i)) << ","
       << (j < r.cod.size() ? r.cod[j] : std::to_string(j)) << ")";
  }
  os << "}";
  return os.str();
}

}  // namespace goi
