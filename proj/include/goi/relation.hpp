#pragma once
// Finite binary relations between named carriers.
//
// Carriers are lists of element names. Semantics live in the index
// pairs; names are kept for display and serialization, so equality and
// compatibility checks compare carrier sizes and pairs, not names.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "goi/spaces.hpp"

namespace goi {

struct Rel {
  std::vector<std::string> dom, cod;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;  // sorted, unique
};

// Normalizes (sorts, dedups) and range-checks the pairs.
Rel make_rel(std::vector<std::string> dom, std::vector<std::string> cod,
             std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs);

std::vector<std::string> numbered_names(const std::string& prefix, std::size_t n);

bool rel_eq(const Rel& r, const Rel& s);
bool rel_subset(const Rel& r, const Rel& s);
bool rel_contains(const Rel& r, std::uint32_t i, std::uint32_t j);

Rel rel_identity(const std::vector<std::string>& names);
Rel rel_empty(std::vector<std::string> dom, std::vector<std::string> cod);
Rel rel_full(std::vector<std::string> dom, std::vector<std::string> cod);
Rel rel_compose(const Rel& r, const Rel& s);
Rel rel_converse(const Rel& r);
Rel rel_union(const Rel& r, const Rel& s);

// Cartesian-product tensor: carriers pair up, (x,x') R (y,y') iff both
// components are related. Element names join with ','.
Rel rel_tensor_times(const Rel& r, const Rel& s);

// Disjoint-union tensor: carriers concatenate, the left block keeps its
// indices and the right block is offset. Names get l:/r: markers.
Rel rel_tensor_plus(const Rel& r, const Rel& s);

// Trace of (Rel,x): for r between X x Z and Y x Z, relate (x,y) iff
// there is z with (x,z) r (y,z).
Rel rel_times_trace(const Rel& r, const std::vector<std::string>& x,
                    const std::vector<std::string>& y,
                    const std::vector<std::string>& z);

// Trace of (Rel,+): feedback through Z. A pair (x,y) is in the result
// iff x r y directly or some chain x r z_1 r ... r z_n r y exists with
// all z_i in Z. Computed as R_XY + R_XZ ; (R_ZZ)* ; R_ZY with the
// reflexive-transitive closure done by iterated squaring.
Rel rel_plus_trace(const Rel& r, const std::vector<std::string>& x,
                   const std::vector<std::string>& y,
                   const std::vector<std::string>& z);

struct PlusTraceDetail {
  Rel result;
  int closure_iterations;  // squaring steps until the closure saturated
};
PlusTraceDetail rel_plus_trace_detailed(const Rel& r,
                                        const std::vector<std::string>& x,
                                        const std::vector<std::string>& y,
                                        const std::vector<std::string>& z);

std::string show(const Rel& r);

}  // namespace goi
