#pragma once
// Tensor-typed finite-dimensional spaces with explicit dual-space flags.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace goi {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Operand shapes or spaces do not line up.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Absolute tolerance used by every approximate equality in the library,
// overridable per call.
inline constexpr double kDefaultTol = 1e-9;

// One tensor factor. The dual of a space is the same storage with the
// `dual` flag toggled; dual coordinates are kept conjugated so that the
// dual basis is again orthonormal.
struct FdSpace {
  std::string label;
  std::size_t dim = 1;
  bool dual = false;

  FdSpace dualized() const { return FdSpace{label, dim, !dual}; }

  friend bool operator==(const FdSpace&, const FdSpace&) = default;
};

// Ordered list of factors; the empty list is the monoidal unit (dim 1).
// Tensoring is factor-list concatenation, so the unit is strict.
struct TensorSpace {
  std::vector<FdSpace> factors;

  std::size_t dim() const {
    std::size_t d = 1;
    for (const auto& f : factors) d *= f.dim;
    return d;
  }
  bool is_unit() const { return factors.empty(); }

  TensorSpace dualized() const {
    TensorSpace out;
    out.factors.reserve(factors.size());
    for (const auto& f : factors) out.factors.push_back(f.dualized());
    return out;
  }

  friend bool operator==(const TensorSpace&, const TensorSpace&) = default;
};

inline TensorSpace unit_space() { return TensorSpace{}; }

inline TensorSpace space_of(FdSpace f) {
  if (f.dim < 1) throw DimensionError("FdSpace dim must be >= 1");
  return TensorSpace{{std::move(f)}};
}

inline TensorSpace make_space(const std::string& label, std::size_t dim,
                              bool dual = false) {
  return space_of(FdSpace{label, dim, dual});
}

inline TensorSpace tensor(const TensorSpace& a, const TensorSpace& b) {
  TensorSpace out = a;
  out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
  return out;
}

std::string show(const TensorSpace& s);

}  // namespace goi
