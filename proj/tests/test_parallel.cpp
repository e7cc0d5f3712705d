#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mring/enumerate.hpp"
#include "mring/ring.hpp"

using namespace mring;

// The OpenMP sweeps must reproduce their serial reference kernels exactly.

TEST_CASE("pairing kernels agree") {
  for (int n = 2; n <= 5; ++n)
    for (int r = 1; r <= n; ++r) CHECK(pairing_matrix(r, n) == pairing_matrix_serial(r, n));
}

TEST_CASE("enumeration kernels agree") {
  for (int n = 1; n <= 5; ++n)
    CHECK(enumerate_loopfree_matroids(n) == enumerate_loopfree_matroids_serial(n));
}

TEST_CASE("parallel decomposition sweep is deterministic") {
  const auto pool = enumerate_loopfree_matroids(4);
  std::vector<FormalSum> serial(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) serial[i] = decompose_to_nested(pool[i]);
  std::vector<FormalSum> parallel(pool.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4)
#endif
  for (std::size_t i = 0; i < pool.size(); ++i) parallel[i] = decompose_to_nested(pool[i]);
  CHECK(serial == parallel);
}
