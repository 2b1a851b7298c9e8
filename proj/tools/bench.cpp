// Timing comparison of the OpenMP kernels against the serial reference
// implementations on synthetic sizes past the desk scale.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "goi/category.hpp"
#include "goi/reference.hpp"

using namespace goi;

namespace {

LinMap random_map(Rng& rng, const TensorSpace& dom, const TensorSpace& cod) {
  LinMap f = zero_map(dom, cod);
  for (cplx& c : f.a) c = rng.scalar();
  return f;
}

template <class F>
double time_best_of(int reps, F&& body) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto start = std::chrono::steady_clock::now();
    body();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (secs < best) best = secs;
  }
  return best;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("openmp: %d threads\n", omp_get_max_threads());
#else
  std::printf("openmp: not enabled (serial build)\n");
#endif
  std::printf("%-10s %-8s %12s %12s %9s\n", "kernel", "size", "serial[s]",
              "parallel[s]", "speedup");

  Rng rng(99);
  for (const std::size_t n : {64ul, 128ul, 192ul, 256ul}) {
    const TensorSpace s = make_space("V", n);
    const LinMap f = random_map(rng, s, s);
    const LinMap g = random_map(rng, s, s);
    volatile double sink = 0.0;

    const double serial = time_best_of(3, [&] {
      const LinMap h = reference::compose(f, g);
      sink = sink + h.a[0].real();
    });
    const double parallel = time_best_of(3, [&] {
      const LinMap h = compose(f, g);
      sink = sink + h.a[0].real();
    });
    // The two paths must agree before the timing means anything.
    if (!approx_eq(compose(f, g), reference::compose(f, g), 1e-9)) {
      std::printf("kernel mismatch at size %zu\n", n);
      return 1;
    }
    std::printf("%-10s %-8zu %12.6f %12.6f %8.2fx\n", "compose", n, serial,
                parallel, serial / parallel);
  }

  for (const std::size_t n : {24ul, 32ul, 48ul}) {
    const TensorSpace s = make_space("V", n);
    const LinMap f = random_map(rng, s, s);
    const LinMap g = random_map(rng, make_space("V", 8), make_space("V", 8));
    volatile double sink = 0.0;
    const double serial = time_best_of(3, [&] {
      const LinMap h = reference::kron(f, g);
      sink = sink + h.a[0].real();
    });
    const double parallel = time_best_of(3, [&] {
      const LinMap h = kron(f, g);
      sink = sink + h.a[0].real();
    });
    if (!approx_eq(kron(f, g), reference::kron(f, g), 1e-12)) {
      std::printf("kernel mismatch at size %zu\n", n);
      return 1;
    }
    std::printf("%-10s %-8zu %12.6f %12.6f %8.2fx\n", "kron", n, serial,
                parallel, serial / parallel);
  }
  return 0;
}
