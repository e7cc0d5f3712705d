#ifndef MRING_MATROID_HPP
#define MRING_MATROID_HPP

#include <compare>
#include <cstdint>
#include <vector>

#include "mring/sets.hpp"

namespace mring {

// A matroid on the labeled ground set {1,...,n}, stored by its bases.
// Bases are kept sorted and deduplicated, so equality is structural.
class Matroid {
public:
  // Validates the basis axioms: nonempty, equal sizes, exchange property.
  static Matroid from_bases(int n, std::vector<eset> bases);

  // Skips validation. For operations that produce valid basis families by
  // construction (duals, minors, chain products, enumeration inner loops).
  static Matroid unchecked(int n, std::vector<eset> bases);

  int n() const { return n_; }
  int rank() const { return sets::size(bases_[0]); }
  eset ground() const { return sets::full(n_); }
  const std::vector<eset>& bases() const { return bases_; }
  bool is_basis(eset b) const;

  friend auto operator<=>(const Matroid&, const Matroid&) = default;

private:
  Matroid(int n, std::vector<eset> bases) : n_(n), bases_(std::move(bases)) {}
  int n_;
  std::vector<eset> bases_;
};

Matroid uniform(int r, int n);

int rank(const Matroid& m, eset a);
eset closure(const Matroid& m, eset a);
std::vector<eset> flats(const Matroid& m);
std::vector<eset> flats_of_rank(const Matroid& m, int s);
eset loops(const Matroid& m);
eset coloops(const Matroid& m);
bool is_loopfree(const Matroid& m);

Matroid dual(const Matroid& m);
Matroid deletion(const Matroid& m, int e);
Matroid contraction(const Matroid& m, int e);
Matroid restriction(const Matroid& m, eset t);
// Contraction by a whole set, relabeled onto {1,...,n-|a|}.
Matroid contraction_set(const Matroid& m, eset a);
Matroid truncate(const Matroid& m);
bool is_quotient(const Matroid& n, const Matroid& m);

// Full 2^n independence/rank tables for enumeration-heavy algorithms.
// Built per call site; a Matroid itself carries no mutable caches.
class MatroidTables {
public:
  explicit MatroidTables(const Matroid& m);

  int n() const { return n_; }
  int rank() const { return rank_full_; }
  bool independent(eset a) const { return ind_[a]; }
  int rank_of(eset a) const { return rank_[a]; }
  eset closure_of(eset a) const;
  bool is_flat(eset a) const { return closure_of(a) == a; }
  std::vector<std::vector<eset>> flats_by_rank() const;

private:
  int n_;
  int rank_full_;
  std::vector<std::uint8_t> ind_;
  std::vector<std::uint8_t> rank_;
};

// All maximal chains of flats F_1 < ... < F_r = E (the empty flat omitted).
std::vector<std::vector<eset>> maximal_flat_chains(const MatroidTables& t);

}  // namespace mring

#endif
