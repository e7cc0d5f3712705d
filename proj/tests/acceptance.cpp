// End-to-end acceptance suite. Each criterion prints one pass/fail line;
// the process exits nonzero if any criterion fails.
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "mring/enumerate.hpp"
#include "mring/exact.hpp"
#include "mring/invariants.hpp"
#include "mring/io.hpp"
#include "mring/nested.hpp"
#include "mring/random_gen.hpp"
#include "mring/ring.hpp"

using namespace mring;

namespace {

int failures = 0;

void criterion(int number, const char* title, const std::function<bool(std::string&)>& body) {
  std::string detail;
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("[%s] criterion %d: %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", number, title, secs,
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

Matroid two_circuit_matroid() { return Matroid::from_bases(4, {0b0011, 0b0101, 0b1010, 0b1100}); }

bool decomposition_identity(const Matroid& m) {
  return indicator_sum(decompose_to_nested(m)) == indicator(m);
}

// Ascent counting over all permutations; the independent oracle for the
// Eulerian recurrence.
long long eulerian_by_ascents(int r, int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  long long count = 0;
  do {
    int ascents = 0;
    for (int i = 0; i + 1 < n; ++i)
      if (perm[i] < perm[i + 1]) ++ascents;
    if (ascents == r) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

SetChain random_set_chain(int n, int len, std::mt19937_64& rng) {
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

}  // namespace

int main() {
  criterion(1, "nested-basis decomposition, exhaustive n<=5 and 1000 samples at n=6,7,8",
            [](std::string& detail) {
              long long checked = 0;
              for (int n = 1; n <= 5; ++n)
                for (const Matroid& m : enumerate_loopfree_matroids(n)) {
                  if (!decomposition_identity(m)) {
                    detail = "exhaustive failure at " + serialize_matroid(m);
                    return false;
                  }
                  ++checked;
                }
              for (int n = 6; n <= 8; ++n) {
                std::atomic<bool> ok{true};
                std::string local;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
                for (long long i = 0; i < 1000; ++i) {
                  if (!ok.load(std::memory_order_relaxed)) continue;
                  const Matroid m = sample_matroid(n, 20260809 + n, static_cast<std::uint64_t>(i));
                  if (!decomposition_identity(m)) {
#ifdef _OPENMP
#pragma omp critical
#endif
                    {
                      ok.store(false, std::memory_order_relaxed);
                      local = "sampled failure at " + serialize_matroid(m);
                    }
                  }
                }
                checked += 1000;
                if (!ok.load()) {
                  detail = local;
                  return false;
                }
              }
              detail = std::to_string(checked) + " matroids";
              return true;
            });

  criterion(2, "worked examples reproduced bit-exactly", [](std::string& detail) {
    const Matroid m1 = uniform(2, 4);
    const Matroid m2 = two_circuit_matroid();
    const Matroid m3 = nested_from_cyclic_chain(4, {{0, 0}, {0b1001, 1}, {0b1111, 2}});
    const Matroid m4 = nested_from_cyclic_chain(4, {{0, 0}, {0b0110, 1}, {0b1111, 2}});
    if (add(indicator(m1), indicator(m2)) != add(indicator(m3), indicator(m4))) {
      detail = "rank-two relation on four elements fails";
      return false;
    }

    // Three-term decomposition of the two-circuit matroid.
    std::map<Matroid, long long> got;
    for (const auto& [c, nm] : decompose_to_nested(m2)) got[nm] = c;
    const std::map<Matroid, long long> want = {{m1, -1}, {m3, 1}, {m4, 1}};
    if (got != want) {
      detail = "three-term decomposition differs";
      return false;
    }

    // The eight-element example: exact Möbius values on the chain lattice.
    const eset s1 = 0b00000011, s2 = 0b00001100, rr = 0b00001111, u1 = 0b00111111,
               u2 = 0b11001111;
    const Matroid big = from_cyclic_flats(
        CyclicFlatList{8, {{0, 0}, {s1, 1}, {s2, 1}, {rr, 2}, {u1, 3}, {u2, 3}, {sets::full(8), 4}}});
    const CyclicChainLattice lattice = cyclic_chain_lattice(big);
    const std::map<std::vector<eset>, long long> mu_expected = {
        {{}, 0},
        {{s1}, 0},          {{s2}, 0},          {{rr}, -1},         {{u1}, 0},
        {{u2}, 0},          {{s1, rr}, 1},      {{s2, rr}, 1},      {{rr, u1}, 1},
        {{rr, u2}, 1},      {{s1, u1}, 0},      {{s1, u2}, 0},      {{s2, u1}, 0},
        {{s2, u2}, 0},      {{s1, rr, u1}, -1}, {{s1, rr, u2}, -1}, {{s2, rr, u1}, -1},
        {{s2, rr, u2}, -1},
    };
    if (lattice.chains.size() != mu_expected.size()) {
      detail = "chain lattice size differs";
      return false;
    }
    for (std::size_t i = 0; i < lattice.chains.size(); ++i) {
      std::vector<eset> interior;
      for (const auto& rec : lattice.chains[i])
        if (rec.set != 0 && rec.set != sets::full(8)) interior.push_back(rec.set);
      auto it = mu_expected.find(interior);
      if (it == mu_expected.end() || lattice.mu1[i] != it->second) {
        detail = "Möbius value differs on a chain";
        return false;
      }
    }
    const FormalSum big_terms = decompose_to_nested(big);
    if (big_terms.size() != 9 || !decomposition_identity(big)) {
      detail = "nine-term decomposition differs";
      return false;
    }

    // Catenary data of the two-circuit matroid: two chains of composition (0,2,2).
    const GInvariant g = g_invariant(m2);
    if (g.counts.size() != 1 || g.counts.begin()->first.parts != std::vector<int>{0, 2, 2} ||
        g.counts.begin()->second != 2) {
      detail = "catenary data differs";
      return false;
    }
    return true;
  });

  criterion(3, "nested matroid counts match Eulerian numbers for n<=7", [](std::string& detail) {
    for (int n = 1; n <= 8; ++n)
      for (int r = 0; r < n; ++r)
        if (eulerian(r, n) != mpz_class(static_cast<long>(eulerian_by_ascents(r, n)))) {
          detail = "recurrence differs from ascent counting";
          return false;
        }
    for (int n = 1; n <= 7; ++n) {
      mpz_class total = 0;
      for (int r = 1; r <= n; ++r) {
        const mpz_class by_enum = static_cast<long>(enumerate_nested(r, n).size());
        if (by_enum != count_nested(r, n) || by_enum != eulerian(r - 1, n)) {
          detail = "counts differ at r=" + std::to_string(r) + ", n=" + std::to_string(n);
          return false;
        }
        total += by_enum;
      }
      mpz_class factorial = 1;
      for (int k = 2; k <= n; ++k) factorial *= k;
      if (total != factorial) {
        detail = "totals do not sum to n! at n=" + std::to_string(n);
        return false;
      }
    }
    return true;
  });

  criterion(4, "Poincaré pairing is unimodular for all r, n<=6", [](std::string& detail) {
    for (int n = 2; n <= 6; ++n)
      for (int r = 1; r <= n; ++r) {
        const auto mat = pairing_matrix(r, n);
        const mpz_class size_expect = eulerian(r - 1, n);
        if (mpz_class(static_cast<long>(mat.size())) != size_expect) {
          detail = "matrix size differs at r=" + std::to_string(r) + ", n=" + std::to_string(n);
          return false;
        }
        for (const auto& row : mat) {
          if (row.size() != mat.size()) {
            detail = "matrix not square at r=" + std::to_string(r) + ", n=" + std::to_string(n);
            return false;
          }
          for (int v : row)
            if (v != 0 && v != 1) {
              detail = "entry outside {0,1}";
              return false;
            }
        }
        const mpz_class d = pairing_determinant(mat);
        if (d != 1 && d != -1) {
          detail = "determinant " + d.get_str() + " at r=" + std::to_string(r) +
                   ", n=" + std::to_string(n);
          return false;
        }
      }
    return true;
  });

  criterion(5, "vanishing criteria agree with the products", [](std::string& detail) {
    long long checked = 0;
    for (int n = 2; n <= 5; ++n)
      for (const Matroid& m : enumerate_loopfree_matroids(n)) {
        if (m.rank() < 2) continue;
        for (eset g = 0; g < (eset{1} << n); ++g) {
          if (sets::size(g) > n - 2) continue;
          if (vanishes_corank_one(m, g) != !product(m, corank_one(n, g)).has_value()) {
            detail = "corank-one criterion differs at G=" + sets::to_string(g) + " for " +
                     serialize_matroid(m);
            return false;
          }
          ++checked;
        }
        // All chains of length below the rank.
        std::vector<SetChain> chains;
        std::vector<eset> cur;
        std::function<void()> grow = [&]() {
          if (!cur.empty() && static_cast<int>(cur.size()) < m.rank())
            chains.push_back(SetChain{n, cur});
          if (static_cast<int>(cur.size()) >= m.rank() - 1) return;
          for (eset s = 0; s < (eset{1} << n); ++s) {
            if (sets::size(s) > n - 2) continue;
            if (!cur.empty() && !sets::proper_subset(cur.back(), s)) continue;
            cur.push_back(s);
            grow();
            cur.pop_back();
          }
        };
        grow();
        for (const auto& c : chains) {
          if (vanishes_nested(m, c) != !product(m, chain_product(c)).has_value()) {
            detail = "chain criterion differs for " + serialize_matroid(m);
            return false;
          }
          ++checked;
        }
      }
    for (int n = 6; n <= 7; ++n) {
      std::atomic<bool> ok{true};
      std::string local;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
      for (long long i = 0; i < 1000; ++i) {
        if (!ok.load(std::memory_order_relaxed)) continue;
        std::mt19937_64 rng(977 * n + i);
        const Matroid m = sample_matroid(n, 555 + n, static_cast<std::uint64_t>(i));
        if (m.rank() < 2) continue;
        std::string why;
        for (int rep = 0; rep < 8 && why.empty(); ++rep) {
          const eset g = static_cast<eset>(rng()) & sets::full(n);
          if (sets::size(g) <= n - 2 &&
              vanishes_corank_one(m, g) != !product(m, corank_one(n, g)).has_value())
            why = "sampled corank-one criterion differs";
          const int len = 1 + static_cast<int>(rng() % (m.rank() - 1));
          const SetChain c = random_set_chain(n, len, rng);
          if (vanishes_nested(m, c) != !product(m, chain_product(c)).has_value())
            why = "sampled chain criterion differs";
        }
        if (!why.empty()) {
#ifdef _OPENMP
#pragma omp critical
#endif
          {
            ok.store(false, std::memory_order_relaxed);
            local = why + " for " + serialize_matroid(m);
          }
        }
      }
      checked += 1000;
      if (!ok.load()) {
        detail = local;
        return false;
      }
    }
    detail = std::to_string(checked) + " instances";
    return true;
  });

  criterion(6, "matroid invariants are linear across indicator relations", [](std::string& detail) {
    std::vector<FormalSum> relations;
    {
      const Matroid m3 = nested_from_cyclic_chain(4, {{0, 0}, {0b1001, 1}, {0b1111, 2}});
      const Matroid m4 = nested_from_cyclic_chain(4, {{0, 0}, {0b0110, 1}, {0b1111, 2}});
      relations.push_back({{1, uniform(2, 4)}, {1, two_circuit_matroid()}, {-1, m3}, {-1, m4}});
    }
    for (int n = 2; n <= 5; ++n) {
      const auto pool = enumerate_loopfree_matroids(n);
      for (int r = 1; r <= n; ++r) {
        std::vector<Matroid> of_rank;
        for (const auto& m : pool)
          if (m.rank() == r) of_rank.push_back(m);
        if (of_rank.size() < 2) continue;
        // Kernel basis of the indicator matrix, columns indexed by matroids.
        std::map<FlatChain, int> row_of;
        std::vector<RingElement> cols;
        for (const auto& m : of_rank) cols.push_back(indicator(m));
        for (const auto& col : cols)
          for (const auto& [chain, c] : col.coeffs()) row_of.emplace(chain, 0);
        int idx = 0;
        for (auto& [chain, i] : row_of) i = idx++;
        IntMat a(row_of.size(), std::vector<mpz_class>(of_rank.size(), 0));
        for (std::size_t j = 0; j < cols.size(); ++j)
          for (const auto& [chain, c] : cols[j].coeffs())
            a[row_of[chain]][j] = static_cast<long>(c);
        for (const auto& k : nullspace_exact(std::move(a))) {
          FormalSum combo;
          for (std::size_t j = 0; j < k.size(); ++j)
            if (k[j] != 0) combo.emplace_back(k[j].get_si(), of_rank[j]);
          relations.push_back(std::move(combo));
        }
      }
    }
    long long checked = 0;
    for (const auto& combo : relations) {
      if (!indicator_sum(combo).is_zero()) {
        detail = "kernel vector is not an indicator relation";
        return false;
      }
      if (!g_invariant_of_combination(combo).counts.empty()) {
        detail = "catenary data fails to be linear";
        return false;
      }
      std::map<std::pair<int, int>, long long> tutte_sum;
      for (const auto& [c, m] : combo)
        for (const auto& [deg, v] : tutte(m).coeffs) tutte_sum[deg] += c * v;
      for (const auto& [deg, v] : tutte_sum)
        if (v != 0) {
          detail = "Tutte polynomial fails to be linear";
          return false;
        }
      const int n = combo.front().second.n();
      const int r = combo.front().second.rank();
      for (int h = 0; h <= r; ++h)
        for (int s = 0; s <= n; ++s) {
          long long single = 0;
          for (const auto& [c, m] : combo) single += c * chain_count(m, h, h, {s});
          if (single != 0) {
            detail = "single-step chain counts fail to be linear";
            return false;
          }
          for (int c2 = 0; c2 <= s; ++c2) {
            long long fc = 0;
            for (const auto& [c, m] : combo) fc += c * flat_count(m, h, s, c2);
            if (fc != 0) {
              detail = "flat counts fail to be linear";
              return false;
            }
          }
          for (int s2 = s + 1; h + 1 <= r && s2 <= n; ++s2) {
            long long duo = 0;
            for (const auto& [c, m] : combo) duo += c * chain_count(m, h, h + 1, {s, s2});
            if (duo != 0) {
              detail = "two-step chain counts fail to be linear";
              return false;
            }
          }
        }
      ++checked;
    }
    detail = std::to_string(checked) + " relations";
    return true;
  });

  criterion(7, "structural oracle equivalences", [](std::string& detail) {
    std::mt19937_64 rng(20260809);
    for (int n = 2; n <= 5; ++n) {
      const auto pool = enumerate_loopfree_matroids(n);
      // Intersection via duals against the basis characterization, plus the
      // grading of every nonzero product.
      for (std::size_t rep = 0; rep < 4000; ++rep) {
        const Matroid& a = pool[rng() % pool.size()];
        const Matroid& b = pool[rng() % pool.size()];
        const Matroid w = matroid_intersection(a, b);
        std::vector<eset> expect;
        for (eset ba : a.bases())
          for (eset bb : b.bases())
            if (sets::size(ba & bb) == w.rank()) expect.push_back(ba & bb);
        std::sort(expect.begin(), expect.end());
        expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
        if (expect != w.bases()) {
          detail = "basis characterization differs";
          return false;
        }
        const auto p = product(a, b);  // throws on a grading violation
        if (p && p->rank() != a.rank() + b.rank() - n) {
          detail = "grading violated";
          return false;
        }
      }
      // Chain-product bases against the iterated product.
      for (std::size_t rep = 0; rep < 400; ++rep) {
        const int len = 1 + static_cast<int>(rng() % (n - 1));
        const SetChain c = random_set_chain(n, len, rng);
        Matroid acc = uniform(n, n);
        for (eset g : c.sets) acc = *product(acc, corank_one(n, g));
        if (chain_product(c) != acc) {
          detail = "chain product differs from the iterated product";
          return false;
        }
      }
      // Reconstruction closes the loop.
      for (const Matroid& m : pool)
        if (from_cyclic_flats(cyclic_flats(m)) != m) {
          detail = "cyclic-flat reconstruction differs";
          return false;
        }
    }
    // Boundary operators square to zero on random combinations at n <= 6.
    for (int n = 3; n <= 6; ++n)
      for (int rep = 0; rep < 40; ++rep) {
        const int r = 2 + static_cast<int>(rng() % (n - 1));
        FormalSum x;
        for (int t = 0; t < 3; ++t) {
          const Matroid m = sample_matroid(n, 31337 + n, rng());
          if (m.rank() == r) x.emplace_back(static_cast<long long>(rng() % 5) - 2, m);
        }
        std::erase_if(x, [](const auto& term) { return term.first == 0; });
        if (x.empty()) continue;
        const FormalSum dd = boundary_deletion(boundary_deletion(x));
        if (!dd.empty() && !indicator_sum(dd).is_zero()) {
          detail = "deletion boundary fails to square to zero";
          return false;
        }
        if (r >= 3) {
          const FormalSum cc = boundary_contraction(boundary_contraction(x));
          if (!cc.empty() && !indicator_sum(cc).is_zero()) {
            detail = "contraction boundary fails to square to zero";
            return false;
          }
        }
      }
    return true;
  });

  if (failures == 0) std::printf("acceptance: all criteria pass\n");
  return failures == 0 ? 0 : 1;
}
