#include "mring/enumerate.hpp"

#include <algorithm>

#include "mring/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mring {

namespace {

bool exchange_holds(const std::vector<eset>& bases) {
  for (eset b1 : bases)
    for (eset b2 : bases) {
      if (b1 == b2) continue;
      for (eset xs = b1 & ~b2; xs; xs &= xs - 1) {
        const eset x = xs & (eset{0} - xs);
        bool found = false;
        for (eset ys = b2 & ~b1; ys && !found; ys &= ys - 1) {
          const eset y = ys & (eset{0} - ys);
          if (std::binary_search(bases.begin(), bases.end(), (b1 & ~x) | y)) found = true;
        }
        if (!found) return false;
      }
    }
  return true;
}

std::vector<Matroid> enumerate_impl(int n, bool parallel) {
  (void)parallel;
  if (n < 1 || n > 5)
    fail(errc::resource_limit, "exhaustive enumeration is held to n <= 5, got n = " + std::to_string(n));
  std::vector<Matroid> out;
  const eset full = sets::full(n);
  for (int r = 1; r <= n; ++r) {
    std::vector<eset> candidates;
    for (eset s = 0; s <= full; ++s) {
      if (sets::size(s) == r) candidates.push_back(s);
      if (s == full) break;
    }
    const int k = static_cast<int>(candidates.size());
    const std::uint32_t families = std::uint32_t{1} << k;
    std::vector<std::vector<Matroid>> found;
#ifdef _OPENMP
    const int threads = parallel ? omp_get_max_threads() : 1;
#else
    const int threads = 1;
#endif
    found.resize(threads);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 256) num_threads(threads) if (parallel)
#endif
    for (std::int64_t fam = 1; fam < families; ++fam) {
      std::vector<eset> bases;
      eset covered = 0;
      for (int i = 0; i < k; ++i)
        if ((fam >> i) & 1) {
          bases.push_back(candidates[i]);
          covered |= candidates[i];
        }
      if (covered != full) continue;  // loops otherwise
      if (!exchange_holds(bases)) continue;
#ifdef _OPENMP
      found[omp_get_thread_num()].push_back(Matroid::unchecked(n, std::move(bases)));
#else
      found[0].push_back(Matroid::unchecked(n, std::move(bases)));
#endif
    }
    for (auto& bucket : found)
      for (auto& m : bucket) out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Matroid> enumerate_loopfree_matroids(int n) { return enumerate_impl(n, true); }

std::vector<Matroid> enumerate_loopfree_matroids_serial(int n) { return enumerate_impl(n, false); }

}  // namespace mring
