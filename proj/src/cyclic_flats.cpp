#include "mring/cyclic_flats.hpp"

#include <algorithm>
#include <map>

#include "mring/error.hpp"

namespace mring {

eset cyclic_part(const Matroid& m, eset f) {
  if (closure(m, f) != f) fail(errc::not_a_flat, sets::to_string(f));
  const int rf = rank(m, f);
  eset cyc = 0;
  for (eset xs = f; xs; xs &= xs - 1) {
    const eset x = xs & (eset{0} - xs);
    if (rank(m, f & ~x) == rf) cyc |= x;  // x lies in a circuit of the restriction
  }
  return cyc;
}

eset free_part(const Matroid& m, eset f) { return f & ~cyclic_part(m, f); }

int free_rank(const Matroid& m, eset f) { return sets::size(free_part(m, f)); }

CyclicFlatList cyclic_flats(const Matroid& m) {
  MatroidTables t(m);
  CyclicFlatList out;
  out.n = m.n();
  for (eset f = 0; f < (eset{1} << m.n()); ++f) {
    if (!t.is_flat(f)) continue;
    const int rf = t.rank_of(f);
    eset cyc = 0;
    for (eset xs = f; xs; xs &= xs - 1) {
      const eset x = xs & (eset{0} - xs);
      if (t.rank_of(f & ~x) == rf) cyc |= x;
    }
    if (cyc == f) out.records.push_back({f, rf});
  }
  std::sort(out.records.begin(), out.records.end());
  return out;
}

namespace {

std::string pair_witness(const CyclicFlatRecord& x, const CyclicFlatRecord& y) {
  return sets::to_string(x.set) + " and " + sets::to_string(y.set);
}

// Meet inside the record family: the unique maximal record below both.
// Returns -1 if none exists or it is not unique.
int meet_index(const std::vector<CyclicFlatRecord>& rs, eset x, eset y) {
  const eset cap = x & y;
  std::vector<int> lower;
  for (int i = 0; i < static_cast<int>(rs.size()); ++i)
    if (sets::subset(rs[i].set, cap)) lower.push_back(i);
  int best = -1;
  for (int i : lower) {
    bool maximal = true;
    for (int j : lower)
      if (j != i && sets::proper_subset(rs[i].set, rs[j].set)) {
        maximal = false;
        break;
      }
    if (maximal) {
      if (best >= 0) return -1;  // two maximal lower bounds
      best = i;
    }
  }
  return best;
}

int join_index(const std::vector<CyclicFlatRecord>& rs, eset x, eset y) {
  const eset cup = x | y;
  std::vector<int> upper;
  for (int i = 0; i < static_cast<int>(rs.size()); ++i)
    if (sets::subset(cup, rs[i].set)) upper.push_back(i);
  int best = -1;
  for (int i : upper) {
    bool minimal = true;
    for (int j : upper)
      if (j != i && sets::proper_subset(rs[j].set, rs[i].set)) {
        minimal = false;
        break;
      }
    if (minimal) {
      if (best >= 0) return -1;
      best = i;
    }
  }
  return best;
}

}  // namespace

AxiomReport validate_cyclic_axioms(const CyclicFlatList& list) {
  const auto& rs = list.records;
  if (list.n < 1 || list.n > kMaxGroundSet) return {false, "ground set size out of range"};
  if (rs.empty()) return {false, "(Z1) no records, no minimal element"};
  for (const auto& r : rs) {
    if (!sets::subset(r.set, sets::full(list.n))) return {false, "set outside ground set: " + sets::to_string(r.set)};
    if (r.rank < 0 || r.rank > sets::size(r.set))
      return {false, "(Z2) rank " + std::to_string(r.rank) + " exceeds size of " + sets::to_string(r.set)};
  }
  for (std::size_t i = 0; i + 1 < rs.size(); ++i)
    for (std::size_t j = i + 1; j < rs.size(); ++j)
      if (rs[i].set == rs[j].set) return {false, "duplicate set " + sets::to_string(rs[i].set)};

  // (Z0): joins and meets of all pairs exist inside the family.
  for (const auto& x : rs)
    for (const auto& y : rs) {
      if (meet_index(rs, x.set, y.set) < 0)
        return {false, "(Z0) no unique meet of " + pair_witness(x, y)};
      if (join_index(rs, x.set, y.set) < 0)
        return {false, "(Z0) no unique join of " + pair_witness(x, y)};
    }

  // (Z1): the minimum has rank zero.
  const CyclicFlatRecord* min_rec = &rs[0];
  for (const auto& r : rs)
    if (sets::subset(r.set, min_rec->set)) min_rec = &r;
  for (const auto& r : rs)
    if (!sets::subset(min_rec->set, r.set))
      return {false, "(Z0) records have no minimum element"};
  if (min_rec->rank != 0)
    return {false, "(Z1) minimum " + sets::to_string(min_rec->set) + " has rank " + std::to_string(min_rec->rank)};

  // (Z2): strict rank growth, strictly slower than cardinality growth.
  for (const auto& x : rs)
    for (const auto& y : rs) {
      if (!sets::proper_subset(x.set, y.set)) continue;
      const int dr = y.rank - x.rank;
      if (dr <= 0 || dr >= sets::size(y.set & ~x.set))
        return {false, "(Z2) violated by " + pair_witness(x, y)};
    }

  // (Z3): submodularity with the correction term.
  for (const auto& x : rs)
    for (const auto& y : rs) {
      const auto& jn = rs[join_index(rs, x.set, y.set)];
      const auto& mt = rs[meet_index(rs, x.set, y.set)];
      const int corr = sets::size((x.set & y.set) & ~mt.set);
      if (x.rank + y.rank < jn.rank + mt.rank + corr)
        return {false, "(Z3) violated by " + pair_witness(x, y)};
    }
  return {true, ""};
}

Matroid from_cyclic_flats(const CyclicFlatList& list) {
  const AxiomReport rep = validate_cyclic_axioms(list);
  if (!rep.ok) fail(errc::invalid_cyclic_data, rep.detail);
  const int n = list.n;
  const auto& rs = list.records;

  const CyclicFlatRecord* top = &rs[0];
  for (const auto& r : rs)
    if (sets::subset(top->set, r.set)) top = &r;
  const int rank_m = top->rank + (n - sets::size(top->set));

  // Level-by-level flat construction, stratified by (rank, size of free part).
  // level[s][m] holds the flats of rank s whose free part has m elements.
  std::vector<std::vector<std::vector<eset>>> level(rank_m + 1);
  std::map<eset, int> flat_rank;
  for (int s = 0; s <= rank_m; ++s) {
    level[s].emplace_back();
    for (const auto& r : rs)
      if (r.rank == s) {
        level[s][0].push_back(r.set);
        flat_rank[r.set] = s;
      }
    for (int m = 1; s - 1 >= 0 && m <= static_cast<int>(level[s - 1].size()); ++m) {
      std::vector<eset> cur;
      for (eset f : level[s - 1][m - 1]) {
        for (eset rest = sets::full(n) & ~f; rest; rest &= rest - 1) {
          const eset cand = f | (rest & (eset{0} - rest));
          bool covered = false;
          for (int m2 = 0; m2 < m && !covered; ++m2)
            for (eset g : level[s][m2])
              if (sets::subset(cand, g)) {
                covered = true;
                break;
              }
          if (!covered) cur.push_back(cand);
        }
      }
      std::sort(cur.begin(), cur.end());
      cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
      for (eset f : cur) flat_rank[f] = s;
      level[s].push_back(std::move(cur));  // empty strata keep the indices aligned
    }
  }
  if (!flat_rank.count(sets::full(n)) || flat_rank[sets::full(n)] != rank_m)
    fail(errc::invalid_cyclic_data, "flat construction did not close at the ground set");

  // A set of full rank size is a basis iff it avoids every proper flat;
  // only the inclusion-maximal proper flats need checking.
  std::vector<eset> maximal_proper;
  for (const auto& [f, s] : flat_rank) {
    if (f == sets::full(n)) continue;
    bool maximal = true;
    for (const auto& [g, s2] : flat_rank)
      if (g != f && g != sets::full(n) && sets::subset(f, g)) {
        maximal = false;
        break;
      }
    if (maximal) maximal_proper.push_back(f);
  }
  std::vector<eset> bases;
  for (eset b = 0; b < (eset{1} << n); ++b) {
    if (sets::size(b) != rank_m) continue;
    bool free_of_flats = true;
    for (eset h : maximal_proper)
      if (sets::subset(b, h)) {
        free_of_flats = false;
        break;
      }
    if (free_of_flats) bases.push_back(b);
  }
  if (bases.empty()) fail(errc::invalid_cyclic_data, "no bases arise from the given records");
  return Matroid::from_bases(n, std::move(bases));
}

bool is_nested(const Matroid& m) {
  const CyclicFlatList z = cyclic_flats(m);
  for (std::size_t i = 0; i + 1 < z.records.size(); ++i)
    if (!sets::subset(z.records[i].set, z.records[i + 1].set)) return false;
  return true;
}

namespace {

bool try_assign(int elem, const std::vector<eset>& sets_of, std::vector<int>& set_of_elem,
                std::vector<int>& elem_of_set, std::vector<char>& visited) {
  for (int j = 0; j < static_cast<int>(sets_of.size()); ++j) {
    if (visited[j] || !sets::contains(sets_of[j], elem)) continue;
    visited[j] = 1;
    if (elem_of_set[j] < 0 ||
        try_assign(elem_of_set[j], sets_of, set_of_elem, elem_of_set, visited)) {
      elem_of_set[j] = elem;
      set_of_elem[elem - 1] = j;
      return true;
    }
  }
  return false;
}

// Can every element of s be matched into a distinct presentation set?
bool is_partial_transversal(eset s, const std::vector<eset>& pres) {
  std::vector<int> set_of_elem(kMaxGroundSet, -1);
  std::vector<int> elem_of_set(pres.size(), -1);
  for (eset xs = s; xs; xs &= xs - 1) {
    std::vector<char> visited(pres.size(), 0);
    if (!try_assign(sets::lowest(xs & (eset{0} - xs)), pres, set_of_elem, elem_of_set, visited))
      return false;
  }
  return true;
}

}  // namespace

Matroid transversal(int n, const std::vector<eset>& presentation) {
  if (n < 1 || n > kMaxGroundSet) fail(errc::validation_error, "ground set size " + std::to_string(n));
  for (eset a : presentation)
    if (!sets::subset(a, sets::full(n))) fail(errc::element_out_of_range, sets::to_string(a));
  // Greedy augmenting matching gives the rank.
  int r = 0;
  {
    std::vector<int> set_of_elem(kMaxGroundSet, -1);
    std::vector<int> elem_of_set(presentation.size(), -1);
    for (int e = 1; e <= n; ++e) {
      std::vector<char> visited(presentation.size(), 0);
      if (try_assign(e, presentation, set_of_elem, elem_of_set, visited)) ++r;
    }
  }
  std::vector<eset> bases;
  for (eset b = 0; b < (eset{1} << n); ++b)
    if (sets::size(b) == r && is_partial_transversal(b, presentation)) bases.push_back(b);
  return Matroid::unchecked(n, std::move(bases));
}

}  // namespace mring
