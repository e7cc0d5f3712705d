#include "mring/nested.hpp"

#include <algorithm>
#include <map>

#include "mring/error.hpp"

namespace mring {

SetChain make_chain(int n, std::vector<eset> sets) {
  if (n < 1 || n > kMaxGroundSet) fail(errc::invalid_chain, "ground set size " + std::to_string(n));
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (!sets::subset(sets[i], sets::full(n)))
      fail(errc::invalid_chain, "set outside ground set: " + sets::to_string(sets[i]));
    if (i > 0 && !sets::proper_subset(sets[i - 1], sets[i]))
      fail(errc::invalid_chain,
           sets::to_string(sets[i - 1]) + " does not strictly precede " + sets::to_string(sets[i]));
  }
  if (!sets.empty() && sets::size(sets.back()) > n - 2)
    fail(errc::invalid_chain, "largest set " + sets::to_string(sets.back()) + " exceeds n-2 elements");
  return SetChain{n, std::move(sets)};
}

Matroid corank_one(int n, eset g) {
  if (n < 2 || n > kMaxGroundSet) fail(errc::validation_error, "ground set size " + std::to_string(n));
  if (!sets::subset(g, sets::full(n)) || sets::size(g) > n - 2)
    fail(errc::coloop_set_too_large, sets::to_string(g) + " on " + std::to_string(n) + " elements");
  std::vector<eset> bases;
  for (eset rest = sets::full(n) & ~g; rest; rest &= rest - 1)
    bases.push_back(sets::full(n) & ~(rest & (eset{0} - rest)));
  return Matroid::unchecked(n, std::move(bases));
}

Matroid chain_product(const SetChain& c) {
  const int n = c.n;
  if (n < 1 || n > kMaxGroundSet) fail(errc::invalid_chain, "ground set size " + std::to_string(n));
  const int k = static_cast<int>(c.sets.size());
  std::vector<eset> bases;
  for (eset b = 0; b < (eset{1} << n); ++b) {
    if (sets::size(b) != n - k) continue;
    bool ok = true;
    for (int i = 0; i < k; ++i)
      if (sets::size(c.sets[i] & ~b) > i) {
        ok = false;
        break;
      }
    if (ok) bases.push_back(b);
  }
  return Matroid::unchecked(n, std::move(bases));
}

SetChain chain_presentation(const Matroid& m) {
  if (!is_loopfree(m)) fail(errc::has_loops, "chain presentations need a loopfree matroid");
  if (!is_nested(m)) fail(errc::not_nested, "cyclic flats do not form a chain");
  const CyclicFlatList z = cyclic_flats(m);
  const auto& rs = z.records;  // (∅,0) = rs[0] up to the top cyclic flat
  const int n = m.n();
  const int k = static_cast<int>(rs.size()) - 1;
  std::vector<eset> chain;
  if (k == 0) return SetChain{n, chain};  // free matroid, empty product

  // Complements of the nonempty cyclic flats are the visible chain sets;
  // between them the nullity gaps dictate single-element padding steps.
  std::vector<int> null_of(k + 1, 0);
  for (int i = 0; i <= k; ++i) null_of[i] = sets::size(rs[i].set) - rs[i].rank;

  eset cur = sets::full(n) & ~rs[k].set;
  chain.push_back(cur);
  for (int i = k; i >= 1; --i) {
    const int pads = null_of[i] - null_of[i - 1] - 1;
    eset addable = rs[i].set & ~rs[i - 1].set;
    for (int p = 0; p < pads; ++p) {
      const eset bit = addable & (eset{0} - addable);
      addable &= addable - 1;
      cur |= bit;
      chain.push_back(cur);
    }
    if (i >= 2) {
      cur = sets::full(n) & ~rs[i - 1].set;
      chain.push_back(cur);
    }
  }
  return make_chain(n, std::move(chain));
}

std::vector<eset> transversal_presentation(const SetChain& c) {
  std::vector<eset> pres;
  const int k = static_cast<int>(c.sets.size());
  for (int i = 0; i < k; ++i) {
    const int mult = i == 0 ? sets::size(c.sets[0]) : sets::size(c.sets[i] & ~c.sets[i - 1]) - 1;
    for (int t = 0; t < mult; ++t) pres.push_back(c.sets[i]);
  }
  const int tail = k == 0 ? c.n : sets::size(sets::full(c.n) & ~c.sets[k - 1]) - 1;
  for (int t = 0; t < tail; ++t) pres.push_back(sets::full(c.n));
  return pres;
}

Matroid nested_from_cyclic_chain(int n, const std::vector<CyclicFlatRecord>& records) {
  if (records.empty() || records[0].set != 0 || records[0].rank != 0)
    fail(errc::not_a_chain, "chain must start with the empty set of rank zero");
  for (std::size_t i = 0; i + 1 < records.size(); ++i) {
    if (!sets::proper_subset(records[i].set, records[i + 1].set))
      fail(errc::not_a_chain, sets::to_string(records[i].set) + " does not strictly precede " +
                                  sets::to_string(records[i + 1].set));
    if (records[i].rank >= records[i + 1].rank)
      fail(errc::not_a_chain, "ranks must strictly increase");
  }
  return from_cyclic_flats(CyclicFlatList{n, records});
}

namespace {

// Enumerates nested matroids by choosing the rank and nullity sequences of the
// cyclic-flat chain and then the sets themselves, outermost first.
void choose_sets(int n, const std::vector<int>& sizes, int idx, eset inside,
                 std::vector<CyclicFlatRecord>& records, std::vector<Matroid>& out) {
  if (idx < 0) {
    std::vector<CyclicFlatRecord> full = records;
    full.push_back({0, 0});
    std::sort(full.begin(), full.end());
    out.push_back(nested_from_cyclic_chain(n, full));
    return;
  }
  const int want = sizes[idx];
  for (eset s = 0; s < (eset{1} << n); ++s) {
    if (sets::size(s) != want || !sets::subset(s, inside)) continue;
    records[idx].set = s;
    choose_sets(n, sizes, idx - 1, s, records, out);
  }
}

void choose_sequences(int r, int n, int k, std::vector<int>& ranks, std::vector<int>& nulls,
                      std::vector<Matroid>& out) {
  // ranks: strictly increasing in [1, r]; nulls: strictly increasing with
  // final value n - r (the top record misses exactly the coloops).
  std::vector<std::vector<int>> rank_seqs, null_seqs;
  std::vector<int> buf;
  auto gen = [&](auto&& self, int len, int lo, int hi, int forced_last,
                 std::vector<std::vector<int>>& sink) -> void {
    if (static_cast<int>(buf.size()) == len) {
      if (forced_last >= 0 && buf.back() != forced_last) return;
      sink.push_back(buf);
      return;
    }
    for (int v = lo + (buf.empty() ? 0 : buf.back() - lo + 1); v <= hi; ++v) {
      buf.push_back(v);
      self(self, len, lo, hi, forced_last, sink);
      buf.pop_back();
    }
  };
  buf.clear();
  gen(gen, k, 1, r, -1, rank_seqs);
  buf.clear();
  gen(gen, k, 1, n - r, n - r, null_seqs);
  for (const auto& rseq : rank_seqs)
    for (const auto& nseq : null_seqs) {
      ranks = rseq;
      nulls = nseq;
      std::vector<CyclicFlatRecord> records(k);
      std::vector<int> sizes(k);
      for (int i = 0; i < k; ++i) {
        records[i].rank = ranks[i];
        sizes[i] = ranks[i] + nulls[i];
      }
      if (sizes.back() > n) continue;
      choose_sets(n, sizes, k - 1, sets::full(n), records, out);
    }
}

}  // namespace

std::vector<Matroid> enumerate_nested(int r, int n) {
  if (n < 1 || n > kMaxGroundSet || r < 1 || r > n)
    fail(errc::rank_out_of_range, "rank " + std::to_string(r) + " on " + std::to_string(n) + " elements");
  std::vector<Matroid> out;
  if (r == n) {
    out.push_back(nested_from_cyclic_chain(n, {{0, 0}}));
    return out;
  }
  std::vector<int> ranks, nulls;
  for (int k = 1; k <= std::min(r, n - r); ++k) choose_sequences(r, n, k, ranks, nulls, out);
  std::sort(out.begin(), out.end());
  return out;
}

mpz_class count_nested(int r, int n) {
  if (n < 1 || r < 1 || r > n)
    fail(errc::rank_out_of_range, "rank " + std::to_string(r) + " on " + std::to_string(n) + " elements");
  static thread_local std::map<std::pair<int, int>, mpz_class> memo;
  auto rec = [&](auto&& self, int rr, int nn) -> mpz_class {
    if (rr == 1) return 1;
    auto it = memo.find({rr, nn});
    if (it != memo.end()) return it->second;
    mpz_class total = 1;
    for (int k = 1; k <= rr - 1; ++k)
      for (int s = k + 1; s <= k + nn - rr; ++s) {
        if (nn - s < rr - k || rr - k < 1) continue;
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), nn, s);
        total += binom * self(self, rr - k, nn - s);
      }
    memo[{rr, nn}] = total;
    return total;
  };
  return rec(rec, r, n);
}

mpz_class eulerian(int r, int n) {
  if (n < 1 || r < 0 || r >= n) return 0;
  // A(r,n) = (r+1) A(r,n-1) + (n-r) A(r-1,n-1)
  std::vector<std::vector<mpz_class>> a(n + 1);
  a[1] = {mpz_class(1)};
  for (int m = 2; m <= n; ++m) {
    a[m].assign(m, 0);
    for (int j = 0; j < m; ++j) {
      const mpz_class same = j < m - 1 ? a[m - 1][j] : mpz_class(0);
      const mpz_class prev = j >= 1 ? a[m - 1][j - 1] : mpz_class(0);
      a[m][j] = (j + 1) * same + (m - j) * prev;
    }
  }
  return a[n][r];
}

}  // namespace mring
