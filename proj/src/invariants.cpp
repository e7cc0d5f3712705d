#include "mring/invariants.hpp"

#include "mring/cyclic_flats.hpp"
#include "mring/error.hpp"

namespace mring {

long long TuttePolynomial::eval(long long x, long long y) const {
  long long total = 0;
  for (const auto& [deg, c] : coeffs) {
    long long term = c;
    for (int i = 0; i < deg.first; ++i) term *= x;
    for (int i = 0; i < deg.second; ++i) term *= y;
    total += term;
  }
  return total;
}

GInvariant g_invariant(const Matroid& m) {
  if (!is_loopfree(m)) fail(errc::input_has_loops, "catenary data is defined for loopfree matroids");
  GInvariant out{m.n(), m.rank(), {}};
  MatroidTables t(m);
  for (const auto& chain : maximal_flat_chains(t)) {
    Composition comp;
    comp.parts.push_back(0);  // loopfree: the chain starts at the empty flat
    eset prev = 0;
    for (eset f : chain) {
      comp.parts.push_back(sets::size(f & ~prev));
      prev = f;
    }
    ++out.counts[comp];
  }
  return out;
}

GInvariant g_invariant_of_combination(const FormalSum& terms) {
  if (terms.empty()) return GInvariant{};
  GInvariant out{terms.front().second.n(), terms.front().second.rank(), {}};
  for (const auto& [c, m] : terms) {
    if (m.n() != out.n || m.rank() != out.r)
      fail(errc::grade_mismatch, "combination mixes ranks or ground sets");
    for (const auto& [comp, cnt] : g_invariant(m).counts) {
      out.counts[comp] += c * cnt;
      if (out.counts[comp] == 0) out.counts.erase(comp);
    }
  }
  return out;
}

TuttePolynomial tutte(const Matroid& m) {
  // t(x,y) = sum over subsets of (x-1)^corank (y-1)^nullity, expanded.
  const int n = m.n();
  const int r = m.rank();
  MatroidTables t(m);
  std::vector<std::vector<long long>> binom(n + 1, std::vector<long long>(n + 1, 0));
  for (int i = 0; i <= n; ++i) {
    binom[i][0] = 1;
    for (int j = 1; j <= i; ++j) binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
  }
  TuttePolynomial out;
  for (eset s = 0; s < (eset{1} << n); ++s) {
    const int cr = r - t.rank_of(s);
    const int nl = sets::size(s) - t.rank_of(s);
    for (int i = 0; i <= cr; ++i)
      for (int j = 0; j <= nl; ++j) {
        const long long sgn = ((cr - i) + (nl - j)) % 2 == 0 ? 1 : -1;
        out.coeffs[{i, j}] += sgn * binom[cr][i] * binom[nl][j];
      }
  }
  std::erase_if(out.coeffs, [](const auto& kv) { return kv.second == 0; });
  return out;
}

namespace {

long long count_chains_from(const MatroidTables& t, const std::vector<std::vector<eset>>& by_rank,
                            int level, int top, const std::vector<int>& sizes, int offset, eset below) {
  if (level > top) return 1;
  long long total = 0;
  for (eset f : by_rank[level]) {
    if (sets::size(f) != sizes[level - offset]) continue;
    if (level > offset && !sets::proper_subset(below, f)) continue;
    total += count_chains_from(t, by_rank, level + 1, top, sizes, offset, f);
  }
  return total;
}

}  // namespace

long long chain_count(const Matroid& m, int h, int k, const std::vector<int>& sizes) {
  if (h < 0 || k < h || k > m.rank()) fail(errc::bad_range, "chain range [" + std::to_string(h) + "," + std::to_string(k) + "]");
  if (static_cast<int>(sizes.size()) != k - h + 1) fail(errc::bad_range, "need one size per rank");
  MatroidTables t(m);
  const auto by_rank = t.flats_by_rank();
  return count_chains_from(t, by_rank, h, k, sizes, h, 0);
}

long long flat_count(const Matroid& m, int k, int s, int c) {
  if (k < 0 || k > m.rank()) fail(errc::bad_range, "flat rank " + std::to_string(k));
  MatroidTables t(m);
  long long total = 0;
  for (eset f = 0; f < (eset{1} << m.n()); ++f) {
    if (!t.is_flat(f) || t.rank_of(f) != k || sets::size(f) != s) continue;
    // Coloops of the restriction form the free part of the flat.
    eset cyc = 0;
    for (eset xs = f; xs; xs &= xs - 1) {
      const eset x = xs & (eset{0} - xs);
      if (t.rank_of(f & ~x) == k) cyc |= x;
    }
    if (sets::size(f & ~cyc) == c) ++total;
  }
  return total;
}

}  // namespace mring
