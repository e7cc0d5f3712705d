#include "mring/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "mring/enumerate.hpp"
#include "mring/error.hpp"
#include "mring/exact.hpp"
#include "mring/invariants.hpp"
#include "mring/io.hpp"
#include "mring/random_gen.hpp"
#include "mring/ring.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mring {

bool VerifyReport::all_ok() const {
  for (const auto& p : properties)
    if (!p.ok) return false;
  return true;
}

std::string format_report(const VerifyReport& report) {
  std::ostringstream out;
  for (const auto& p : report.properties) {
    out << (p.ok ? "[ok]   " : "[FAIL] ") << p.id << "  instances=" << p.instances;
    if (!p.ok) out << "\n       counterexample: " << p.counterexample;
    out << "\n";
  }
  out << (report.all_ok() ? "verify: all properties hold" : "verify: FAILURES present") << "\n";
  return out.str();
}

namespace {

using Rng = std::mt19937_64;

// Runs body(i) for i in [0, count); body returns a failure description or
// nothing. The failure with the smallest index wins, so the outcome does not
// depend on the thread schedule.
PropertyResult sweep(const std::string& id, long long count,
                     const std::function<std::optional<std::string>(long long)>& body) {
  PropertyResult res{id, count, true, ""};
  long long worst = -1;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (long long i = 0; i < count; ++i) {
    std::optional<std::string> f;
    try {
      f = body(i);
    } catch (const std::exception& e) {
      f = std::string("exception: ") + e.what();
    }
    if (f) {
#ifdef _OPENMP
#pragma omp critical(mring_verify_sweep)
#endif
      {
        if (worst < 0 || i < worst) {
          worst = i;
          res.ok = false;
          res.counterexample = *f;
        }
      }
    }
  }
  return res;
}

std::string describe(const Matroid& m) { return serialize_matroid(m); }

Matroid iterated_corank_one_product(const SetChain& c) {
  Matroid acc = uniform(c.n, c.n);
  for (eset g : c.sets) {
    auto p = product(acc, corank_one(c.n, g));
    if (!p) fail(errc::validation_error, "chain product vanished unexpectedly");
    acc = *p;
  }
  return acc;
}

SetChain random_set_chain(int n, int len, Rng& rng) {
  std::vector<int> sizes(n - 1);
  for (int i = 0; i <= n - 2; ++i) sizes[i] = i;
  std::shuffle(sizes.begin(), sizes.end(), rng);
  sizes.resize(len);
  std::sort(sizes.begin(), sizes.end());
  std::vector<eset> chain;
  eset prev = 0;
  for (int i = 0; i < len; ++i) {
    std::vector<int> pool = sets::elements(sets::full(n) & ~prev);
    std::shuffle(pool.begin(), pool.end(), rng);
    for (int j = 0; j < sizes[i] - sets::size(prev); ++j) prev |= sets::single(pool[j]);
    chain.push_back(prev);
  }
  return make_chain(n, std::move(chain));
}

Poset random_poset(int m, Rng& rng) {
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i) leq[i][i] = true;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) leq[i][j] = rng() % 3 == 0;
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (leq[i][k] && leq[k][j]) leq[i][j] = true;
  return Poset(std::move(leq));
}

// The four rank-2 matroids on four elements whose indicator vectors satisfy
// v(M1) + v(M2) = v(M3) + v(M4).
FormalSum known_kernel_relation() {
  const Matroid m1 = uniform(2, 4);
  const Matroid m2 = Matroid::from_bases(4, {0b0011, 0b0101, 0b1010, 0b1100});
  const Matroid m3 = nested_from_cyclic_chain(4, {{0, 0}, {0b1001, 1}, {0b1111, 2}});
  const Matroid m4 = nested_from_cyclic_chain(4, {{0, 0}, {0b0110, 1}, {0b1111, 2}});
  return {{1, m1}, {1, m2}, {-1, m3}, {-1, m4}};
}

// Integer kernel vectors of the indicator matrix of the given matroids.
std::vector<std::vector<long long>> kernel_relations(const std::vector<Matroid>& ms) {
  if (ms.empty()) return {};
  std::map<FlatChain, int> row_of;
  std::vector<RingElement> cols;
  for (const auto& m : ms) cols.push_back(indicator(m));
  for (const auto& col : cols)
    for (const auto& [chain, c] : col.coeffs()) row_of.emplace(chain, 0);
  int idx = 0;
  for (auto& [chain, i] : row_of) i = idx++;
  IntMat a(row_of.size(), std::vector<mpz_class>(ms.size(), 0));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [chain, c] : cols[j].coeffs()) a[row_of[chain]][j] = static_cast<long>(c);
  std::vector<std::vector<long long>> out;
  for (const auto& v : nullspace_exact(std::move(a))) {
    std::vector<long long> row(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].fits_slong_p()) return out;  // keep only small relations
      row[i] = v[i].get_si();
    }
    out.push_back(std::move(row));
  }
  return out;
}

struct Driver {
  VerifyOptions opt;
  std::vector<Matroid> pool;
  std::vector<std::pair<int, int>> pairs;  // index pairs into pool
  VerifyReport report;

  void add(PropertyResult r) { report.properties.push_back(std::move(r)); }

  const Matroid& at(long long i) const { return pool[static_cast<std::size_t>(i)]; }

  void build_pool() {
    if (opt.exhaustive) {
      pool = enumerate_loopfree_matroids(opt.n);
    } else {
      pool.reserve(opt.samples);
      for (long long i = 0; i < opt.samples; ++i)
        pool.push_back(sample_matroid(opt.n, opt.seed, static_cast<std::uint64_t>(i)));
    }
    Rng rng(opt.seed + 1);
    const std::size_t limit = 20000;
    if (pool.size() * pool.size() <= limit) {
      for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = 0; j < pool.size(); ++j) pairs.emplace_back(i, j);
    } else {
      for (std::size_t k = 0; k < limit; ++k)
        pairs.emplace_back(rng() % pool.size(), rng() % pool.size());
    }
  }

  void run_core() {
    add(sweep("core.closure-operator", pool.size(), [&](long long i) -> std::optional<std::string> {
      const Matroid& m = at(i);
      MatroidTables t(m);
      for (eset a = 0; a < (eset{1} << m.n()); ++a) {
        const eset cl = t.closure_of(a);
        if (!sets::subset(a, cl)) return "closure not extensive on " + describe(m);
        if (t.closure_of(cl) != cl) return "closure not idempotent on " + describe(m);
      }
      for (eset b = 0; b < (eset{1} << m.n()); ++b)
        for (eset a = b;; a = (a - 1) & b) {
          if (!sets::subset(t.closure_of(a), t.closure_of(b)))
            return "closure not monotone on " + describe(m);
          if (a == 0) break;
        }
      return std::nullopt;
    }));
    add(sweep("core.rank-monotone-unit", pool.size(), [&](long long i) -> std::optional<std::string> {
      const Matroid& m = at(i);
      MatroidTables t(m);
      for (eset b = 0; b < (eset{1} << m.n()); ++b)
        for (eset a = b;; a = (a - 1) & b) {
          const int ra = t.rank_of(a), rb = t.rank_of(b);
          if (!(ra <= rb && rb <= ra + sets::size(b & ~a)))
            return "rank growth violated: A=" + sets::to_string(a) + " B=" + sets::to_string(b) +
                   " in " + describe(m);
          if (a == 0) break;
        }
      return std::nullopt;
    }));
    add(sweep("core.rank-submodular", pool.size(), [&](long long i) -> std::optional<std::string> {
      const Matroid& m = at(i);
      MatroidTables t(m);
      Rng rng(opt.seed ^ (0x5151 + i));
      const bool full = m.n() <= 5;
      const long long reps = full ? (1LL << (2 * m.n())) : 4096;
      for (long long k = 0; k < reps; ++k) {
        eset a, b;
        if (full) {
          a = static_cast<eset>(k) & sets::full(m.n());
          b = static_cast<eset>(k >> m.n()) & sets::full(m.n());
        } else {
          a = static_cast<eset>(rng()) & sets::full(m.n());
          b = static_cast<eset>(rng()) & sets::full(m.n());
        }
        if (t.rank_of(a) + t.rank_of(b) < t.rank_of(a | b) + t.rank_of(a & b))
          return "submodularity violated: A=" + sets::to_string(a) + " B=" + sets::to_string(b) +
                 " in " + describe(m);
      }
      return std::nullopt;
    }));
    add(sweep("core.dual-involution", pool.size(), [&](long long i) -> std::optional<std::string> {
      const Matroid& m = at(i);
      if (dual(dual(m)) != m) return "dual not an involution on " + describe(m);
      if (dual(m).rank() != m.n() - m.rank()) return "dual rank wrong on " + describe(m);
      return std::nullopt;
    }));
    add(sweep("core.flat-meet-is-intersection", pool.size(), [&](long long i) -> std::optional<std::string> {
      const Matroid& m = at(i);
      MatroidTables t(m);
      const auto fl = flats(m);
      for (eset f : fl)
        for (eset g : fl)
          if (!t.is_flat(f & g))
            return sets::to_string(f) + " and " + sets::to_string(g) + " in " + describe(m);
      return std::nullopt;
    }));
    add(sweep("core.minor-commutation", pool.size(), [&](long long i) -> std::optional<std::string> {
      const Matroid& m = at(i);
      if (m.n() < 3) return std::nullopt;
      for (int e = 1; e <= m.n(); ++e)
        for (int f = e + 1; f <= m.n(); ++f) {
          // After removing e, element f sits at index f-1.
          if (deletion(deletion(m, e), f - 1) != deletion(deletion(m, f), e))
            return "deletions at " + std::to_string(e) + "," + std::to_string(f) + " on " + describe(m);
          const Matroid md = deletion(m, e);
          const Matroid mc = contraction(m, f);
          if (contraction(md, f - 1) != deletion(mc, e))
            return "delete/contract at " + std::to_string(e) + "," + std::to_string(f) + " on " +
                   describe(m);
        }
      return std::nullopt;
    }));
  }

  void run_cyclic() {
    add(sweep("cyclic.rank-splits-off-free-part", pool.size(), [&](long long i) -> std::optional<std::string> {
      const Matroid& m = at(i);
      for (eset f : flats(m)) {
        const eset cyc = cyclic_part(m, f);
        if (rank(m, f) != rank(m, cyc) + sets::size(f & ~cyc))
          return "flat " + sets::to_string(f) + " of " + describe(m);
      }
      return std::nullopt;
    }));
    add(sweep("cyclic.interval-above-cyclic-part", pool.size(), [&](long long i) -> std::optional<std::string> {
      const Matroid& m = at(i);
      MatroidTables t(m);
      for (eset f : flats(m)) {
        const eset cyc = cyclic_part(m, f);
        const eset freebits = f & ~cyc;
        for (eset s = freebits;; s = (s - 1) & freebits) {
          if (!t.is_flat(cyc | s))
            return sets::to_string(cyc | s) + " between cyc and " + sets::to_string(f) + " in " +
                   describe(m);
          if (s == 0) break;
        }
      }
      return std::nullopt;
    }));
    add(sweep("cyclic.axioms-hold-for-real-matroids", pool.size(), [&](long long i) -> std::optional<std::string> {
      const auto rep = validate_cyclic_axioms(cyclic_flats(at(i)));
      if (!rep.ok) return rep.detail + " for " + describe(at(i));
      return std::nullopt;
    }));
    add(sweep("cyclic.reconstruction-roundtrip", pool.size(), [&](long long i) -> std::optional<std::string> {
      const Matroid& m = at(i);
      const CyclicFlatList z = cyclic_flats(m);
      if (from_cyclic_flats(z) != m) return "roundtrip differs for " + describe(m);
      // Independent rank oracle from the records.
      MatroidTables t(m);
      for (eset a = 0; a < (eset{1} << m.n()); ++a) {
        int want = sets::size(a);
        for (const auto& rec : z.records)
          want = std::min(want, rec.rank + sets::size(a & ~rec.set));
        if (want != t.rank_of(a))
          return "rank formula differs at " + sets::to_string(a) + " for " + describe(m);
      }
      return std::nullopt;
    }));
    add(sweep("cyclic.reduction-flat-correspondence", pool.size(), [&](long long i) -> std::optional<std::string> {
      const Matroid& m = at(i);
      const CyclicChainLattice lattice = cyclic_chain_lattice(m);
      MatroidTables tm(m);
      const std::size_t cap = opt.exhaustive ? lattice.chains.size() : std::min<std::size_t>(lattice.chains.size(), 8);
      for (std::size_t ci = 0; ci < cap; ++ci) {
        const auto& records = lattice.chains[ci];
        const Matroid reduced = nested_from_cyclic_chain(m.n(), records);
        MatroidTables tr(reduced);
        std::set<eset> chain_sets;
        for (const auto& rec : records) chain_sets.insert(rec.set);
        for (eset f = 0; f < (eset{1} << m.n()); ++f) {
          if (!tm.is_flat(f)) continue;
          const bool same = tr.is_flat(f) && tr.rank_of(f) == tm.rank_of(f);
          const bool expected = chain_sets.count(cyclic_part(m, f)) > 0;
          if (same != expected)
            return "flat " + sets::to_string(f) + " against chain #" + std::to_string(ci) + " of " +
                   describe(m);
        }
      }
      return std::nullopt;
    }));
  }

  void run_nested() {
    const long long chain_reps = opt.exhaustive ? 200 : opt.samples;
    add(sweep("nested.chain-product-vs-iterated", chain_reps, [&](long long i) -> std::optional<std::string> {
      Rng rng(opt.seed ^ (0xc0de + i));
      const int len = 1 + static_cast<int>(rng() % (opt.n - 1));
      const SetChain c = random_set_chain(opt.n, len, rng);
      const Matroid direct = chain_product(c);
      if (direct != iterated_corank_one_product(c)) return "chain of length " + std::to_string(len);
      if (!is_loopfree(direct) || direct.rank() != opt.n - len || !is_nested(direct))
        return "chain product shape wrong for length " + std::to_string(len);
      return std::nullopt;
    }));
    add(sweep("nested.presentation-roundtrip", pool.size(), [&](long long i) -> std::optional<std::string> {
      const Matroid& m = at(i);
      if (!is_nested(m)) return std::nullopt;
      const SetChain c = chain_presentation(m);
      if (chain_product(c) != m) return "presentation roundtrip differs for " + describe(m);
      return std::nullopt;
    }));
    add(sweep("nested.maximal-presentation", chain_reps, [&](long long i) -> std::optional<std::string> {
      Rng rng(opt.seed ^ (0xfeed + i));
      const int len = 1 + static_cast<int>(rng() % (opt.n - 1));
      const SetChain c = random_set_chain(opt.n, len, rng);
      const auto pres = transversal_presentation(c);
      const Matroid m = chain_product(c);
      if (transversal(c.n, pres) != m) return "presentation does not present its chain product";
      for (eset a : pres) {
        if (a == sets::full(c.n)) continue;
        const Matroid r = restriction(m, sets::full(c.n) & ~a);
        if (coloops(r) != 0)
          return "restriction off " + sets::to_string(a) + " keeps coloops; chain product " + describe(m);
      }
      return std::nullopt;
    }));
    const int count_limit = std::min(opt.n, 7);
    add(sweep("nested.counting", 1, [&](long long) -> std::optional<std::string> {
      mpz_class total = 0;
      for (int r = 1; r <= count_limit; ++r) {
        const mpz_class by_enum = static_cast<long>(enumerate_nested(r, count_limit).size());
        const mpz_class by_rec = count_nested(r, count_limit);
        const mpz_class by_euler = eulerian(r - 1, count_limit);
        if (by_enum != by_rec || by_rec != by_euler)
          return "counts disagree at r=" + std::to_string(r) + ": " + by_enum.get_str() + " / " +
                 by_rec.get_str() + " / " + by_euler.get_str();
        total += by_rec;
      }
      mpz_class factorial = 1;
      for (int k = 2; k <= count_limit; ++k) factorial *= k;
      if (total != factorial) return "nested totals do not sum to n!";
      return std::nullopt;
    }));
    if (opt.exhaustive) {
      add(sweep("nested.representation-rigidity", 1, [&](long long) -> std::optional<std::string> {
        // All valid chains on [n], grouped by their chain product.
        std::vector<SetChain> all;
        std::vector<eset> cur;
        std::function<void()> grow = [&]() {
          if (!cur.empty()) all.push_back(SetChain{opt.n, cur});
          for (eset s = 0; s < (eset{1} << opt.n); ++s) {
            if (sets::size(s) > opt.n - 2) continue;
            if (!cur.empty() && !sets::proper_subset(cur.back(), s)) continue;
            cur.push_back(s);
            grow();
            cur.pop_back();
          }
        };
        grow();
        std::map<Matroid, std::vector<SetChain>> by_product;
        for (const auto& c : all) by_product[chain_product(c)].push_back(c);
        for (const auto& [m, chains] : by_product)
          for (const auto& c1 : chains)
            for (const auto& c2 : chains) {
              if (c1.sets.size() != c2.sets.size()) return "equal products, different lengths";
              for (std::size_t t = 0; t < c1.sets.size(); ++t) {
                if (sets::size(c1.sets[t]) != sets::size(c2.sets[t]))
                  return "equal products, different size profiles";
                const eset below = t == 0 ? 0 : c1.sets[t - 1];
                if (sets::size(c1.sets[t] & ~below) > 1 && c1.sets[t] != c2.sets[t])
                  return "forced chain set differs: " + sets::to_string(c1.sets[t]) + " vs " +
                         sets::to_string(c2.sets[t]);
              }
            }
        return std::nullopt;
      }));
    }
  }

  void run_ring() {
    add(sweep("ring.intersection-oracles", pairs.size(), [&](long long i) -> std::optional<std::string> {
      const Matroid& a = at(pairs[i].first);
      const Matroid& b = at(pairs[i].second);
      const Matroid w = matroid_intersection(a, b);
      // Basis characterization.
      std::vector<eset> expect;
      for (eset ba : a.bases())
        for (eset bb : b.bases())
          if (sets::size(ba & bb) == w.rank()) expect.push_back(ba & bb);
      std::sort(expect.begin(), expect.end());
      expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
      if (expect != w.bases())
        return "basis characterization differs for " + describe(a) + " and " + describe(b);
      // Spanning-set characterization.
      MatroidTables ta(a), tb(b), tw(w);
      std::vector<eset> sa, sb;
      for (eset s = 0; s < (eset{1} << a.n()); ++s) {
        if (ta.rank_of(s) == a.rank()) sa.push_back(s);
        if (tb.rank_of(s) == b.rank()) sb.push_back(s);
      }
      std::vector<std::uint8_t> spans(std::size_t{1} << a.n(), 0);
      for (eset s : sa)
        for (eset t2 : sb) spans[s & t2] = 1;
      for (eset s = 0; s < (eset{1} << a.n()); ++s)
        if (spans[s] != (tw.rank_of(s) == w.rank() ? 1 : 0))
          return "spanning characterization differs at " + sets::to_string(s) + " for " + describe(a) +
                 " and " + describe(b);
      if (!is_quotient(w, a) || !is_quotient(w, b))
        return "intersection is not a quotient of " + describe(a) + " and " + describe(b);
      return std::nullopt;
    }));
    add(sweep("ring.intersection-contraction-commutes", pairs.size(), [&](long long i) -> std::optional<std::string> {
      const Matroid& a = at(pairs[i].first);
      const Matroid& b = at(pairs[i].second);
      const Matroid w = matroid_intersection(a, b);
      for (eset f : flats(w)) {
        if (f == 0 || f == w.ground()) continue;
        if (contraction_set(w, f) != matroid_intersection(contraction_set(a, f), contraction_set(b, f)))
          return "contraction by " + sets::to_string(f) + " for " + describe(a) + " and " + describe(b);
      }
      return std::nullopt;
    }));
    add(sweep("ring.grading-of-products", pairs.size(), [&](long long i) -> std::optional<std::string> {
      const Matroid& a = at(pairs[i].first);
      const Matroid& b = at(pairs[i].second);
      try {
        product(a, b);  // grade violation throws
      } catch (const error& e) {
        if (e.code() == errc::grading_violation)
          return std::string(e.what()) + " for " + describe(a) + " and " + describe(b);
        throw;
      }
      return std::nullopt;
    }));
    add(sweep("ring.decomposition-identity", pool.size(), [&](long long i) -> std::optional<std::string> {
      const Matroid& m = at(i);
      const FormalSum terms = decompose_to_nested(m);
      for (const auto& [c, nm] : terms)
        if (!is_nested(nm)) return "non-nested summand for " + describe(m);
      if (indicator_sum(terms) != indicator(m)) return "indicator mismatch for " + describe(m);
      return std::nullopt;
    }));
    add(sweep("ring.mobius-identities", 64, [&](long long i) -> std::optional<std::string> {
      Rng rng(opt.seed ^ (0xabba + i));
      const Poset p = random_poset(2 + static_cast<int>(rng() % 7), rng);
      const int m = p.size();
      for (int x = 0; x < m; ++x)
        for (int z = 0; z < m; ++z) {
          if (!p.leq(x, z)) continue;
          long long col = 0;
          for (int y = 0; y < m; ++y)
            if (p.leq(x, y) && p.leq(y, z)) col += p.mobius(y, z);
          if (col != (x == z ? 1 : 0)) return "column sums wrong in a random poset";
        }
      // Dual recursion gives the same function.
      for (int x = 0; x < m; ++x)
        for (int z = 0; z < m; ++z) {
          if (!p.leq(x, z)) continue;
          long long dual_mu;
          if (x == z) {
            dual_mu = 1;
          } else {
            dual_mu = 0;
            for (int y = 0; y < m; ++y)
              if (p.leq(x, y) && p.leq(y, z) && y != x) dual_mu -= p.mobius(y, z);
          }
          if (dual_mu != p.mobius(x, z)) return "dual recursion disagrees in a random poset";
        }
      // Join-contractible posets have vanishing Möbius number.
      auto join_exists = [&](int x, int a2) {
        std::vector<int> uppers;
        for (int u = 0; u < m; ++u)
          if (p.leq(x, u) && p.leq(a2, u)) uppers.push_back(u);
        int minimal = 0;
        for (int u : uppers) {
          bool is_min = true;
          for (int v : uppers)
            if (v != u && p.leq(v, u)) {
              is_min = false;
              break;
            }
          if (is_min) ++minimal;
        }
        return minimal == 1;
      };
      bool contractible = false;
      for (int a2 = 0; a2 < m && !contractible; ++a2) {
        bool all = true;
        for (int x = 0; x < m && all; ++x)
          if (!join_exists(x, a2)) all = false;
        if (all) contractible = true;
      }
      if (contractible && p.mobius_number() != 0) return "join-contractible poset with nonzero mu";
      if (m <= 7 && p.mobius_number() != p.chain_poset().mobius_number())
        return "mu(P) differs from mu(Ch(P))";
      return std::nullopt;
    }));
    add(sweep("ring.vanishing-corank-one", pool.size(), [&](long long i) -> std::optional<std::string> {
      const Matroid& m = at(i);
      if (m.rank() < 2) return std::nullopt;
      for (eset g = 0; g < (eset{1} << m.n()); ++g) {
        if (sets::size(g) > m.n() - 2) continue;
        const bool predicted = vanishes_corank_one(m, g);
        const bool actual = !product(m, corank_one(m.n(), g)).has_value();
        if (predicted != actual)
          return "criterion disagrees at G=" + sets::to_string(g) + " for " + describe(m);
      }
      return std::nullopt;
    }));
    add(sweep("ring.vanishing-nested", pool.size(), [&](long long i) -> std::optional<std::string> {
      const Matroid& m = at(i);
      if (m.rank() < 2) return std::nullopt;
      Rng rng(opt.seed ^ (0xd00d + i));
      for (int rep = 0; rep < 24; ++rep) {
        const int len = 1 + static_cast<int>(rng() % (m.rank() - 1));
        const SetChain c = random_set_chain(m.n(), len, rng);
        const bool predicted = vanishes_nested(m, c);
        const bool actual = !product(m, chain_product(c)).has_value();
        if (predicted != actual) return "criterion disagrees for a chain of length " + std::to_string(len) + " on " + describe(m);
      }
      return std::nullopt;
    }));
    add(sweep("ring.product-flats", pool.size(), [&](long long i) -> std::optional<std::string> {
      const Matroid& m = at(i);
      if (m.rank() < 2) return std::nullopt;
      for (eset g = 0; g < (eset{1} << m.n()); ++g) {
        if (sets::size(g) > m.n() - 2) continue;
        const auto p = product(m, corank_one(m.n(), g));
        if (!p) continue;
        if (product_flats_check(m, g) != flats(*p))
          return "flat prediction differs at G=" + sets::to_string(g) + " for " + describe(m);
        // Rank drop on flats covering the complement of g.
        MatroidTables tm(m), tp(*p);
        for (eset f : flats(*p))
          if (f != 0 && tm.is_flat(f) && (f | g) == m.ground() &&
              tp.rank_of(f) != tm.rank_of(f) - 1)
            return "rank drop missing at " + sets::to_string(f) + " for " + describe(m);
      }
      return std::nullopt;
    }));
    add(sweep("ring.boundary-operators-square-to-zero", 64, [&](long long i) -> std::optional<std::string> {
      Rng rng(opt.seed ^ (0xb00 + i));
      // Random combination of equal-rank pool matroids.
      std::vector<const Matroid*> of_rank;
      const int want = 2 + static_cast<int>(rng() % std::max(1, opt.n - 2));
      for (const auto& m : pool)
        if (m.rank() == want && m.n() >= 3) of_rank.push_back(&m);
      if (of_rank.empty()) return std::nullopt;
      FormalSum x;
      const int terms = 1 + static_cast<int>(rng() % 4);
      for (int t2 = 0; t2 < terms; ++t2)
        x.emplace_back(static_cast<long long>(rng() % 7) - 3, *of_rank[rng() % of_rank.size()]);
      std::erase_if(x, [](const auto& term) { return term.first == 0; });
      if (x.empty()) return std::nullopt;
      const FormalSum dd = boundary_deletion(boundary_deletion(x));
      if (!dd.empty() && !indicator_sum(dd).is_zero()) return "deletion boundary squared is nonzero";
      if (want >= 3) {
        const FormalSum cc = boundary_contraction(boundary_contraction(x));
        if (!cc.empty() && !indicator_sum(cc).is_zero()) return "contraction boundary squared is nonzero";
      }
      return std::nullopt;
    }));
    if (opt.n <= 6) {
      add(sweep("ring.nested-basis-independent", opt.n, [&](long long i) -> std::optional<std::string> {
        const int r = static_cast<int>(i) + 1;
        const auto basis = enumerate_nested(r, opt.n);
        std::map<FlatChain, int> row_of;
        std::vector<RingElement> cols;
        for (const auto& m : basis) cols.push_back(indicator(m));
        for (const auto& col : cols)
          for (const auto& [chain, c] : col.coeffs()) row_of.emplace(chain, 0);
        int idx = 0;
        for (auto& [chain, ri] : row_of) ri = idx++;
        IntMat a(row_of.size(), std::vector<mpz_class>(basis.size(), 0));
        for (std::size_t j = 0; j < cols.size(); ++j)
          for (const auto& [chain, c] : cols[j].coeffs()) a[row_of[chain]][j] = static_cast<long>(c);
        const int rk = rank_exact(std::move(a));
        const mpz_class expect = eulerian(r - 1, opt.n);
        if (mpz_class(rk) != expect)
          return "rank " + std::to_string(rk) + " vs expected " + expect.get_str() + " at r=" + std::to_string(r);
        return std::nullopt;
      }));
    }
    // Well-definedness of the product against linear relations.
    add(sweep("ring.product-well-defined", 1, [&](long long) -> std::optional<std::string> {
      std::vector<std::pair<FormalSum, FormalSum>> relations;
      {
        const FormalSum k = known_kernel_relation();
        if (opt.n == 4) relations.emplace_back(FormalSum{k[0], k[1]}, FormalSum{{1, k[2].second}, {1, k[3].second}});
      }
      if (opt.exhaustive) {
        for (int r = 1; r <= opt.n; ++r) {
          std::vector<Matroid> of_rank;
          for (const auto& m : pool)
            if (m.rank() == r) of_rank.push_back(m);
          if (of_rank.size() < 2) continue;
          const auto kernels = kernel_relations(of_rank);
          std::size_t used = 0;
          for (const auto& k : kernels) {
            if (used >= 12) break;
            FormalSum lhs, rhs;
            for (std::size_t j = 0; j < k.size(); ++j) {
              if (k[j] > 0) lhs.emplace_back(k[j], of_rank[j]);
              if (k[j] < 0) rhs.emplace_back(-k[j], of_rank[j]);
            }
            if (lhs.empty() || rhs.empty()) continue;
            relations.emplace_back(std::move(lhs), std::move(rhs));
            ++used;
          }
        }
      }
      Rng rng(opt.seed ^ 0x9afe);
      for (const auto& [lhs, rhs] : relations) {
        if (indicator_sum(lhs) != indicator_sum(rhs)) return "claimed relation is not a relation";
        for (int rep = 0; rep < 6; ++rep) {
          const Matroid& p = pool[rng() % pool.size()];
          auto apply = [&](const FormalSum& side) {
            RingElement acc = RingElement::zero(opt.n);
            for (const auto& [c, m] : side) {
              const auto pr = product(m, p);
              if (pr) acc = mring::add(acc, scale(indicator(*pr), c));
            }
            return acc;
          };
          if (apply(lhs) != apply(rhs)) return "products differ across a linear relation";
        }
      }
      return std::nullopt;
    }));
  }

  void run_invariants() {
    add(sweep("invariants.tutte-evaluations", pool.size(), [&](long long i) -> std::optional<std::string> {
      const Matroid& m = at(i);
      const TuttePolynomial t = tutte(m);
      if (t.eval(1, 1) != static_cast<long long>(m.bases().size()))
        return "t(1,1) differs from the basis count for " + describe(m);
      if (t.eval(2, 2) != (1LL << m.n())) return "t(2,2) differs from 2^n for " + describe(m);
      TuttePolynomial swapped;
      for (const auto& [deg, c] : tutte(dual(m)).coeffs) swapped.coeffs[{deg.second, deg.first}] = c;
      if (swapped != t) return "duality swap fails for " + describe(m);
      return std::nullopt;
    }));
    add(sweep("invariants.catenary-chain-count", pool.size(), [&](long long i) -> std::optional<std::string> {
      const Matroid& m = at(i);
      const GInvariant g = g_invariant(m);
      long long total = 0;
      for (const auto& [comp, c] : g.counts) total += c;
      if (total != static_cast<long long>(indicator(m).coeffs().size()))
        return "chain totals differ for " + describe(m);
      return std::nullopt;
    }));
    add(sweep("invariants.linear-on-relations", 1, [&](long long) -> std::optional<std::string> {
      std::vector<FormalSum> relations;
      if (opt.n == 4) relations.push_back(known_kernel_relation());
      if (opt.exhaustive) {
        for (int r = 1; r <= opt.n; ++r) {
          std::vector<Matroid> of_rank;
          for (const auto& m : pool)
            if (m.rank() == r) of_rank.push_back(m);
          if (of_rank.size() < 2) continue;
          const auto kernels = kernel_relations(of_rank);
          std::size_t used = 0;
          for (const auto& k : kernels) {
            if (used >= 12) break;
            FormalSum combo;
            for (std::size_t j = 0; j < k.size(); ++j)
              if (k[j] != 0) combo.emplace_back(k[j], of_rank[j]);
            if (combo.size() < 2) continue;
            relations.push_back(std::move(combo));
            ++used;
          }
        }
      }
      for (const auto& combo : relations) {
        if (!indicator_sum(combo).is_zero()) return "kernel vector is not a relation";
        if (!g_invariant_of_combination(combo).counts.empty())
          return "catenary data is not linear across a relation";
        std::map<std::pair<int, int>, long long> tutte_sum;
        for (const auto& [c, m] : combo)
          for (const auto& [deg, v] : tutte(m).coeffs) tutte_sum[deg] += c * v;
        for (const auto& [deg, v] : tutte_sum)
          if (v != 0) return "Tutte polynomial is not linear across a relation";
        const int n = combo.front().second.n();
        const int r = combo.front().second.rank();
        for (int k2 = 0; k2 <= r; ++k2)
          for (int s = 0; s <= n; ++s) {
            long long fsum = 0;
            for (const auto& [c, m] : combo) fsum += c * chain_count(m, k2, k2, {s});
            if (fsum != 0) return "flat chain counts are not linear across a relation";
            for (int c2 = 0; c2 <= s; ++c2) {
              long long csum = 0;
              for (const auto& [c, m] : combo) csum += c * flat_count(m, k2, s, c2);
              if (csum != 0) return "flat coloop counts are not linear across a relation";
            }
          }
        // A couple of longer chain-count windows.
        for (int h = 0; h + 1 <= r; ++h) {
          for (int s1 = 0; s1 <= n; ++s1)
            for (int s2 = s1 + 1; s2 <= n; ++s2) {
              long long fsum = 0;
              for (const auto& [c, m] : combo) fsum += c * chain_count(m, h, h + 1, {s1, s2});
              if (fsum != 0) return "two-step chain counts are not linear across a relation";
            }
        }
      }
      return std::nullopt;
    }));
  }

  void run_io() {
    add(sweep("io.serialize-parse-roundtrip", pool.size(), [&](long long i) -> std::optional<std::string> {
      const Matroid& m = at(i);
      const std::string line = serialize_matroid(m);
      if (parse_matroid(line) != m) return "roundtrip differs for " + line;
      if (serialize_matroid(parse_matroid(line)) != line) return "serialization not canonical for " + line;
      return std::nullopt;
    }));
    add(sweep("io.generators-deterministic", 24, [&](long long i) -> std::optional<std::string> {
      const Matroid a = sample_matroid(opt.n, opt.seed, static_cast<std::uint64_t>(i));
      const Matroid b = sample_matroid(opt.n, opt.seed, static_cast<std::uint64_t>(i));
      if (a != b) return "same spec produced different matroids";
      return std::nullopt;
    }));
  }
};

}  // namespace

VerifyReport run_verify(const VerifyOptions& opt) {
  if (opt.n < 2 || opt.n > kMaxGroundSet)
    fail(errc::bad_range, "verify needs 2 <= n <= " + std::to_string(kMaxGroundSet));
  if (opt.exhaustive && opt.n > 5)
    fail(errc::resource_limit, "exhaustive verification is held to n <= 5; use sampled mode");
  Driver d;
  d.opt = opt;
  d.build_pool();
  d.run_core();
  d.run_cyclic();
  d.run_nested();
  d.run_ring();
  d.run_invariants();
  d.run_io();
  std::sort(d.report.properties.begin(), d.report.properties.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  return d.report;
}

}  // namespace mring
