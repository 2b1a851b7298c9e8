#pragma once
// Serial reference implementations of the dense kernels. These stay
// single-threaded and deliberately naive; the unit tests use them as an
// independent oracle for the parallel kernels and the benchmark uses
// them as the baseline.

#include "goi/linalg.hpp"

namespace goi::reference {

LinMap compose(const LinMap& f, const LinMap& g);
LinMap kron(const LinMap& f, const LinMap& g);
Vec apply(const LinMap& f, const Vec& v);

// Partial trace over the trailing factor block u: result_ik = sum_a
// f[(i,a)][(k,a)].
LinMap vec_trace(const LinMap& f, const TensorSpace& v, const TensorSpace& w,
                 const TensorSpace& u);

}  // namespace goi::reference
