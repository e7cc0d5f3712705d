#include "mring/random_gen.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "mring/cyclic_flats.hpp"
#include "mring/error.hpp"
#include "mring/nested.hpp"

namespace mring {

const char* gen_kind_name(GenKind k) {
  switch (k) {
    case GenKind::transversal: return "transversal";
    case GenKind::chain_product: return "chain-product";
    case GenKind::graphic: return "graphic";
    case GenKind::uniform_minor: return "uniform-minor";
  }
  return "?";
}

namespace {

using Rng = std::mt19937_64;

std::uint64_t mix(const RandomMatroidSpec& s) {
  std::uint64_t h = s.seed;
  h ^= 0x9e3779b97f4a7c15ull + (static_cast<std::uint64_t>(s.kind) << 32) +
       (static_cast<std::uint64_t>(s.n) << 16) + static_cast<std::uint64_t>(s.rank);
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ull;
  h ^= h >> 27;
  return h;
}

eset random_subset(Rng& rng, eset inside, int want) {
  std::vector<int> pool = sets::elements(inside);
  std::shuffle(pool.begin(), pool.end(), rng);
  eset out = 0;
  for (int i = 0; i < want; ++i) out |= sets::single(pool[i]);
  return out;
}

Matroid gen_transversal(int n, int r, Rng& rng) {
  // r random sets whose union covers the ground set; retried until the
  // matching rank comes out right.
  for (int attempt = 0; attempt < 4096; ++attempt) {
    std::vector<eset> pres(r);
    for (auto& a : pres) {
      const int want = 1 + static_cast<int>(rng() % n);
      a = random_subset(rng, sets::full(n), want);
    }
    eset missing = sets::full(n);
    for (eset a : pres) missing &= ~a;
    for (eset xs = missing; xs; xs &= xs - 1)
      pres[rng() % r] |= xs & (eset{0} - xs);
    Matroid m = transversal(n, pres);
    if (m.rank() == r) return m;
  }
  fail(errc::infeasible_spec, "no transversal matroid of rank " + std::to_string(r) + " found");
}

Matroid gen_chain_product(int n, int r, Rng& rng) {
  const int c = n - r;
  if (c == 0) return uniform(n, n);
  if (c > n - 1) fail(errc::infeasible_spec, "corank too large");
  // Strictly increasing sizes in [0, n-2], then nested random sets.
  std::vector<int> all_sizes(n - 1);
  std::iota(all_sizes.begin(), all_sizes.end(), 0);
  std::shuffle(all_sizes.begin(), all_sizes.end(), rng);
  std::vector<int> sizes(all_sizes.begin(), all_sizes.begin() + c);
  std::sort(sizes.begin(), sizes.end());
  std::vector<eset> chain(c);
  eset prev = 0;
  for (int i = 0; i < c; ++i) {
    chain[i] = prev | random_subset(rng, sets::full(n) & ~prev, sizes[i] - sets::size(prev));
    prev = chain[i];
  }
  return chain_product(make_chain(n, std::move(chain)));
}

Matroid gen_graphic(int n, int r, Rng& rng) {
  // Cycle matroid of a connected random multigraph on r+1 vertices.
  const int v = r + 1;
  if (v > 5) fail(errc::infeasible_spec, "graphic generator keeps at most 5 vertices (rank <= 4)");
  if (n < r) fail(errc::infeasible_spec, "too few edges for the requested rank");
  for (int attempt = 0; attempt < 4096; ++attempt) {
    std::vector<std::pair<int, int>> edges(n);
    for (auto& e : edges) {
      const int a = static_cast<int>(rng() % v);
      int b = static_cast<int>(rng() % (v - 1));
      if (b >= a) ++b;
      e = {a, b};
    }
    // Spanning trees as edge subsets: acyclic and touching every vertex class.
    std::vector<eset> bases;
    for (eset s = 0; s < (eset{1} << n); ++s) {
      if (sets::size(s) != v - 1) continue;
      std::vector<int> parent(v);
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      bool acyclic = true;
      for (eset t = s; t && acyclic; t &= t - 1) {
        const auto& [a, b] = edges[sets::lowest(t & (eset{0} - t)) - 1];
        const int ra = find(a), rb = find(b);
        if (ra == rb)
          acyclic = false;
        else
          parent[ra] = rb;
      }
      if (acyclic) bases.push_back(s);
    }
    if (!bases.empty()) {
      Matroid m = Matroid::unchecked(n, std::move(bases));
      if (m.rank() == r && is_loopfree(m)) return m;
    }
  }
  fail(errc::infeasible_spec, "no connected multigraph found");
}

Matroid gen_uniform_minor(int n, int r, Rng& rng) {
  // A random minor chain of a larger uniform matroid ending at (r, n).
  const int extra = static_cast<int>(rng() % (kMaxGroundSet - n + 1));
  int big_n = n + extra;
  int contracts = extra == 0 ? 0 : static_cast<int>(rng() % (extra + 1));
  int big_r = r + contracts;
  Matroid m = uniform(big_r, big_n);
  int deletes = extra - contracts;
  while (contracts + deletes > 0) {
    const bool do_contract = contracts > 0 && (deletes == 0 || rng() % 2 == 0);
    const int e = 1 + static_cast<int>(rng() % m.n());
    if (do_contract) {
      m = contraction(m, e);
      --contracts;
    } else {
      m = deletion(m, e);
      --deletes;
    }
  }
  return m;
}

}  // namespace

Matroid random_matroid(const RandomMatroidSpec& spec) {
  if (spec.n < 1 || spec.n > kMaxGroundSet || spec.rank < 1 || spec.rank > spec.n)
    fail(errc::infeasible_spec, "rank " + std::to_string(spec.rank) + " on " + std::to_string(spec.n));
  Rng rng(mix(spec));
  switch (spec.kind) {
    case GenKind::transversal: return gen_transversal(spec.n, spec.rank, rng);
    case GenKind::chain_product: return gen_chain_product(spec.n, spec.rank, rng);
    case GenKind::graphic: return gen_graphic(spec.n, spec.rank, rng);
    case GenKind::uniform_minor: return gen_uniform_minor(spec.n, spec.rank, rng);
  }
  fail(errc::infeasible_spec, "unknown generator kind");
}

Matroid sample_matroid(int n, std::uint64_t seed, std::uint64_t index) {
  // Kinds rotate; ranks sweep the feasible range. Graphic caps at rank 4.
  static constexpr GenKind kinds[] = {GenKind::transversal, GenKind::chain_product,
                                      GenKind::graphic, GenKind::uniform_minor};
  const GenKind kind = kinds[index % 4];
  int rank = 2 + static_cast<int>((index / 4) % std::max(1, n - 1));
  if (kind == GenKind::graphic) rank = 2 + static_cast<int>((index / 4) % std::min(3, std::max(1, n - 1)));
  if (rank > n) rank = n;
  return random_matroid({kind, n, rank, seed + index});
}

}  // namespace mring
