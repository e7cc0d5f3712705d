// Compares the OpenMP sweeps against their serial reference kernels.
#include <chrono>
#include <cstdio>
#include <string>

#include "mring/enumerate.hpp"
#include "mring/ring.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double time_ms(F&& f) {
  const auto t0 = Clock::now();
  f();
  const auto t1 = Clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-34s serial %9.1f ms   parallel %9.1f ms   speedup %.2fx\n", name, serial_ms,
              parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (OpenMP disabled)\n");
#endif

  {
    std::vector<std::vector<int>> a, b;
    const double ts = time_ms([&] { a = mring::pairing_matrix_serial(3, 6); });
    const double tp = time_ms([&] { b = mring::pairing_matrix(3, 6); });
    if (a != b) {
      std::printf("pairing kernels disagree\n");
      return 1;
    }
    report("pairing_matrix(3,6)", ts, tp);
  }
  {
    std::vector<mring::Matroid> a, b;
    const double ts = time_ms([&] { a = mring::enumerate_loopfree_matroids_serial(5); });
    const double tp = time_ms([&] { b = mring::enumerate_loopfree_matroids(5); });
    if (a != b) {
      std::printf("enumeration kernels disagree\n");
      return 1;
    }
    report("enumerate_loopfree_matroids(5)", ts, tp);
    std::printf("  (%zu matroids)\n", a.size());

    // Decomposition sweep over the full n=5 pool, serial vs parallel.
    auto sweep = [&](bool parallel) {
      long long terms = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : terms) if (parallel)
#endif
      for (std::size_t i = 0; i < a.size(); ++i)
        terms += static_cast<long long>(mring::decompose_to_nested(a[i]).size());
      return terms;
    };
    long long t1 = 0, t2 = 0;
    const double ds = time_ms([&] { t1 = sweep(false); });
    const double dp = time_ms([&] { t2 = sweep(true); });
    if (t1 != t2) {
      std::printf("decomposition sweeps disagree\n");
      return 1;
    }
    report("decompose sweep (all n=5)", ds, dp);
  }
  return 0;
}
