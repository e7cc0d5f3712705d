#ifndef MRING_CYCLIC_FLATS_HPP
#define MRING_CYCLIC_FLATS_HPP

#include <compare>
#include <string>
#include <vector>

#include "mring/matroid.hpp"

namespace mring {

struct CyclicFlatRecord {
  eset set = 0;
  int rank = 0;
  friend bool operator==(const CyclicFlatRecord&, const CyclicFlatRecord&) = default;
  friend std::strong_ordering operator<=>(const CyclicFlatRecord& a, const CyclicFlatRecord& b) {
    if (a.rank != b.rank) return a.rank <=> b.rank;
    return a.set <=> b.set;
  }
};

// The lattice Z(M) of cyclic flats with their ranks. Records are kept
// sorted by (rank, set); this data determines the matroid completely.
struct CyclicFlatList {
  int n = 0;
  std::vector<CyclicFlatRecord> records;
  friend auto operator<=>(const CyclicFlatList&, const CyclicFlatList&) = default;
};

// Union of all circuits contained in the flat f; equivalently f minus the
// coloops of the restriction to f.
eset cyclic_part(const Matroid& m, eset f);
eset free_part(const Matroid& m, eset f);
int free_rank(const Matroid& m, eset f);

CyclicFlatList cyclic_flats(const Matroid& m);

struct AxiomReport {
  bool ok = true;
  std::string detail;  // violated axiom plus a witness when !ok
};

// Checks the cyclic-flat axioms: (Z0) lattice under inclusion,
// (Z1) minimum has rank 0, (Z2) 0 < r(Y)-r(X) < |Y\X| for nested pairs,
// (Z3) submodularity with the |(X∩Y) \ (X∧Y)| correction term.
AxiomReport validate_cyclic_axioms(const CyclicFlatList& list);

// Reconstructs the unique matroid with the given cyclic flats by building
// the full lattice of flats level by level, then reading off the bases as
// the rank-sized sets not contained in any proper flat.
Matroid from_cyclic_flats(const CyclicFlatList& list);

bool is_nested(const Matroid& m);

// Transversal matroid of a set system: independent sets are the partial
// transversals, decided by augmenting-path bipartite matching.
Matroid transversal(int n, const std::vector<eset>& presentation);

}  // namespace mring

#endif
