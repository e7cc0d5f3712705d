#include "mring/ring.hpp"

#include <algorithm>

#include "mring/error.hpp"
#include "mring/exact.hpp"
#include "mring/poset.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mring {

namespace {

void check_same_ground(const Matroid& a, const Matroid& b) {
  if (a.n() != b.n()) fail(errc::ground_set_mismatch, std::to_string(a.n()) + " vs " + std::to_string(b.n()));
}

}  // namespace

Matroid matroid_union(const Matroid& a, const Matroid& b) {
  check_same_ground(a, b);
  const int n = a.n();
  MatroidTables ta(a), tb(b);
  const eset full = sets::full(n);
  std::vector<std::uint8_t> u_ind(std::size_t{1} << n, 0);
  int r = 0;
  for (eset s = 0; s <= full; ++s) {
    // s = i u j with i independent in a and j = s \ i independent in b
    for (eset i = s;; i = (i - 1) & s) {
      if (ta.independent(i) && tb.independent(s & ~i)) {
        u_ind[s] = 1;
        r = std::max(r, sets::size(s));
        break;
      }
      if (i == 0) break;
    }
    if (s == full) break;
  }
  std::vector<eset> bases;
  for (eset s = 0; s <= full; ++s) {
    if (u_ind[s] && sets::size(s) == r) bases.push_back(s);
    if (s == full) break;
  }
  return Matroid::unchecked(n, std::move(bases));
}

Matroid matroid_intersection(const Matroid& a, const Matroid& b) {
  check_same_ground(a, b);
  return dual(matroid_union(dual(a), dual(b)));
}

std::optional<Matroid> product(const Matroid& a, const Matroid& b) {
  check_same_ground(a, b);
  if (!is_loopfree(a) || !is_loopfree(b))
    fail(errc::input_has_loops, "ring products are defined for loopfree matroids");
  const int grade = a.rank() + b.rank() - a.n();
  if (grade <= 0) return std::nullopt;
  Matroid w = matroid_intersection(a, b);
  if (!is_loopfree(w)) return std::nullopt;
  if (w.rank() != grade)
    fail(errc::grading_violation, "loopfree intersection of ranks " + std::to_string(a.rank()) + "," +
                                      std::to_string(b.rank()) + " has rank " + std::to_string(w.rank()));
  return w;
}

namespace {

// Chains of the interior records (everything except bottom and top), as index
// lists into the (rank, set) ordering. Ranks strictly increase along a chain,
// so appending an index keeps a chain iff the new set contains the largest.
void collect_chains(const std::vector<CyclicFlatRecord>& interior, int start, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  out.push_back(cur);
  for (int i = start; i < static_cast<int>(interior.size()); ++i) {
    if (!cur.empty() && !sets::proper_subset(interior[cur.back()].set, interior[i].set)) continue;
    cur.push_back(i);
    collect_chains(interior, i + 1, cur, out);
    cur.pop_back();
  }
}

// Signed count of chain extensions: sum over chains S' >= S of (-1)^{|S'\S|},
// where S' ranges over supersets of S inside the interior that are chains.
long long signed_extensions(const std::vector<CyclicFlatRecord>& interior,
                            const std::vector<char>& in_chain, const std::vector<int>& members,
                            int start, int parity) {
  long long total = parity;
  for (int i = start; i < static_cast<int>(interior.size()); ++i) {
    if (in_chain[i]) continue;
    bool comparable = true;
    for (int j : members)
      if (!sets::subset(interior[j].set, interior[i].set) &&
          !sets::subset(interior[i].set, interior[j].set)) {
        comparable = false;
        break;
      }
    if (!comparable) continue;
    std::vector<int> ext = members;
    ext.push_back(i);
    std::vector<char> mask = in_chain;
    mask[i] = 1;
    total += signed_extensions(interior, mask, ext, i + 1, -parity);
  }
  return total;
}

}  // namespace

CyclicChainLattice cyclic_chain_lattice(const Matroid& m) {
  if (!is_loopfree(m)) fail(errc::input_has_loops, "cyclic chain lattice of a matroid with loops");
  CyclicChainLattice out;
  out.base = cyclic_flats(m);
  if (out.base.records.size() > 24)
    fail(errc::resource_limit,
         std::to_string(out.base.records.size()) + " cyclic flats; chain enumeration refuses above 24");
  // Bottom is the empty set, top is the union of all circuits.
  const CyclicFlatRecord bottom = out.base.records.front();
  CyclicFlatRecord top = bottom;
  for (const auto& r : out.base.records)
    if (sets::size(r.set) > sets::size(top.set)) top = r;
  std::vector<CyclicFlatRecord> interior;
  for (const auto& r : out.base.records)
    if (r.set != bottom.set && r.set != top.set) interior.push_back(r);

  std::vector<std::vector<int>> raw;
  std::vector<int> cur;
  collect_chains(interior, 0, cur, raw);
  for (const auto& idxs : raw) {
    std::vector<CyclicFlatRecord> chain;
    chain.push_back(bottom);
    for (int i : idxs) chain.push_back(interior[i]);
    if (top.set != bottom.set) chain.push_back(top);
    out.chains.push_back(std::move(chain));
    std::vector<char> mask(interior.size(), 0);
    std::vector<int> members = idxs;
    for (int i : idxs) mask[i] = 1;
    out.mu1.push_back(-signed_extensions(interior, mask, members, 0, 1));
  }
  return out;
}

Poset CyclicChainLattice::as_poset() const {
  const int c = static_cast<int>(chains.size());
  std::vector<std::vector<bool>> leq(c + 1, std::vector<bool>(c + 1, false));
  auto contains = [](const std::vector<CyclicFlatRecord>& a, const std::vector<CyclicFlatRecord>& b) {
    for (const auto& r : a)
      if (std::find(b.begin(), b.end(), r) == b.end()) return false;
    return true;
  };
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j) leq[i][j] = contains(chains[i], chains[j]);
  for (int i = 0; i <= c; ++i) leq[i][c] = true;  // artificial maximum last
  return Poset(std::move(leq));
}

FormalSum decompose_to_nested(const Matroid& m) {
  const CyclicChainLattice lattice = cyclic_chain_lattice(m);
  FormalSum out;
  for (std::size_t i = 0; i < lattice.chains.size(); ++i) {
    if (lattice.mu1[i] == 0) continue;
    out.emplace_back(-lattice.mu1[i], nested_from_cyclic_chain(m.n(), lattice.chains[i]));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

std::map<Matroid, long long> to_nested_coordinates(const FormalSum& terms) {
  std::map<Matroid, long long> coords;
  int grade = -1;
  for (const auto& [c, m] : terms) {
    if (!is_loopfree(m)) fail(errc::input_has_loops, "combination contains a matroid with loops");
    if (grade < 0) grade = m.rank();
    if (m.rank() != grade) fail(errc::grade_mismatch, "mixed ranks in one combination");
    for (const auto& [coeff, nm] : decompose_to_nested(m)) {
      coords[nm] += c * coeff;
      if (coords[nm] == 0) coords.erase(nm);
    }
  }
  return coords;
}

std::map<Matroid, long long> nested_coordinates(const RingElement& v) {
  std::map<Matroid, long long> coords;
  if (v.is_zero()) return coords;
  const int n = v.n();
  const int r = v.grade();
  const std::vector<Matroid> basis = enumerate_nested(r, n);
  // Row space indexed by every chain seen in the basis or in v.
  std::map<FlatChain, int> row_of;
  std::vector<RingElement> cols;
  cols.reserve(basis.size());
  for (const auto& nm : basis) cols.push_back(indicator(nm));
  for (const auto& col : cols)
    for (const auto& [chain, c] : col.coeffs()) row_of.emplace(chain, 0);
  for (const auto& [chain, c] : v.coeffs()) row_of.emplace(chain, 0);
  int idx = 0;
  for (auto& [chain, i] : row_of) i = idx++;
  IntMat a(row_of.size(), std::vector<mpz_class>(basis.size(), 0));
  std::vector<mpz_class> b(row_of.size(), 0);
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [chain, c] : cols[j].coeffs()) a[row_of[chain]][j] = static_cast<long>(c);
  for (const auto& [chain, c] : v.coeffs()) b[row_of[chain]] = static_cast<long>(c);
  auto x = solve_unique_integral(std::move(a), std::move(b));
  if (!x) fail(errc::validation_error, "element does not lie in the span of the nested basis");
  for (std::size_t j = 0; j < basis.size(); ++j)
    if ((*x)[j] != 0) coords[basis[j]] = (*x)[j].get_si();
  return coords;
}

RingElement product_elements(const RingElement& a, const RingElement& b) {
  if (a.n() != b.n()) fail(errc::ground_set_mismatch, "product over different ground sets");
  RingElement acc = RingElement::zero(a.n());
  if (a.is_zero() || b.is_zero()) return acc;
  const auto ca = nested_coordinates(a);
  const auto cb = nested_coordinates(b);
  for (const auto& [ma, va] : ca)
    for (const auto& [mb, vb] : cb) {
      const auto p = product(ma, mb);
      if (p) acc = add(acc, scale(indicator(*p), va * vb));
    }
  return acc;
}

bool vanishes_corank_one(const Matroid& m, eset g) {
  if (m.rank() < 2) fail(errc::rank_too_small, "criterion needs rank at least 2");
  if (sets::size(g) > m.n() - 2)
    fail(errc::coloop_set_too_large, sets::to_string(g) + " on " + std::to_string(m.n()) + " elements");
  for (eset f : flats_of_rank(m, 1))
    if ((f | g) == m.ground()) return true;
  return false;
}

bool vanishes_nested(const Matroid& m, const SetChain& c) {
  if (m.rank() < 2) fail(errc::rank_too_small, "criterion needs rank at least 2");
  const int len = static_cast<int>(c.sets.size());
  if (m.n() != c.n) fail(errc::ground_set_mismatch, "chain lives on a different ground set");
  if (len >= m.rank())
    fail(errc::precondition_violated, "chain length " + std::to_string(len) + " not below rank");
  MatroidTables t(m);
  for (int i = 1; i <= len; ++i) {
    const int want = len - i + 1;
    for (eset f = 0; f < (eset{1} << m.n()); ++f)
      if (t.rank_of(f) == want && t.is_flat(f) && (f | c.sets[i - 1]) == m.ground()) return true;
  }
  return false;
}

std::vector<eset> product_flats_check(const Matroid& m, eset g) {
  if (m.rank() < 2) fail(errc::rank_too_small, "criterion needs rank at least 2");
  const Matroid h = corank_one(m.n(), g);
  const auto p = product(m, h);
  if (!p) fail(errc::product_is_zero, "product with the corank-one matroid vanishes");
  MatroidTables tm(m), th(h);
  std::vector<eset> out;
  for (eset f = 0; f < (eset{1} << m.n()); ++f) {
    if (!tm.is_flat(f) || !th.is_flat(f)) continue;
    if ((f | g) == m.ground()) {
      out.push_back(f);
      continue;
    }
    bool covered_to_full = false;
    const int rf = tm.rank_of(f);
    for (eset f2 = 0; f2 < (eset{1} << m.n()) && !covered_to_full; ++f2)
      if (tm.is_flat(f2) && tm.rank_of(f2) == rf + 1 && sets::proper_subset(f, f2) &&
          (f2 | g) == m.ground())
        covered_to_full = true;
    if (!covered_to_full) out.push_back(f);
  }
  return out;
}

namespace {

std::vector<std::vector<int>> pairing_matrix_impl(int r, int n, bool parallel) {
  if (n < 2 || n > kMaxGroundSet || r < 1 || r > n)
    fail(errc::rank_out_of_range, "pairing of rank " + std::to_string(r) + " on " + std::to_string(n));
  const std::vector<Matroid> rows = enumerate_nested(r, n);
  const std::vector<Matroid> cols = enumerate_nested(n - r + 1, n);
  const int nr = static_cast<int>(rows.size());
  const int nc = static_cast<int>(cols.size());
  std::vector<std::vector<int>> mat(nr, std::vector<int>(nc, 0));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
#endif
  for (int flat_idx = 0; flat_idx < nr * nc; ++flat_idx) {
    const int i = flat_idx / nc;
    const int j = flat_idx % nc;
    mat[i][j] = product(rows[i], cols[j]) ? 1 : 0;
  }
  (void)parallel;
  return mat;
}

}  // namespace

std::vector<std::vector<int>> pairing_matrix(int r, int n) { return pairing_matrix_impl(r, n, true); }

std::vector<std::vector<int>> pairing_matrix_serial(int r, int n) {
  return pairing_matrix_impl(r, n, false);
}

mpz_class pairing_determinant(const std::vector<std::vector<int>>& matrix) {
  IntMat a(matrix.size());
  for (std::size_t i = 0; i < matrix.size(); ++i) a[i].assign(matrix[i].begin(), matrix[i].end());
  return det_bareiss(std::move(a));
}

namespace {

FormalSum collect(std::map<Matroid, long long>&& acc) {
  FormalSum out;
  for (auto& [m, c] : acc)
    if (c != 0) out.emplace_back(c, m);
  return out;
}

}  // namespace

FormalSum boundary_deletion(const FormalSum& x) {
  std::map<Matroid, long long> acc;
  for (const auto& [c, m] : x) {
    if (!is_loopfree(m)) fail(errc::input_has_loops, "boundary of a matroid with loops");
    const eset colo = coloops(m);
    for (int i = 1; i <= m.n(); ++i) {
      if (sets::contains(colo, i)) continue;
      const long long sign = (i % 2 == 0) ? 1 : -1;
      Matroid d = deletion(m, i);
      if (!is_loopfree(d)) continue;
      acc[d] += sign * c;
    }
  }
  return collect(std::move(acc));
}

FormalSum boundary_contraction(const FormalSum& x) {
  std::map<Matroid, long long> acc;
  for (const auto& [c, m] : x) {
    if (!is_loopfree(m)) fail(errc::input_has_loops, "boundary of a matroid with loops");
    if (m.rank() <= 1) continue;  // contractions would land in grade zero
    for (int i = 1; i <= m.n(); ++i) {
      if (closure(m, sets::single(i)) != sets::single(i)) continue;
      const long long sign = (i % 2 == 0) ? 1 : -1;
      Matroid k = contraction(m, i);
      if (!is_loopfree(k)) continue;
      acc[k] += sign * c;
    }
  }
  return collect(std::move(acc));
}

}  // namespace mring
