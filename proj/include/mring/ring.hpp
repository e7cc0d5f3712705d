#ifndef MRING_RING_HPP
#define MRING_RING_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <vector>

#include "mring/chains.hpp"
#include "mring/cyclic_flats.hpp"
#include "mring/matroid.hpp"
#include "mring/nested.hpp"
#include "mring/poset.hpp"

namespace mring {

// Matroid union: independent sets are unions I u J of independent sets.
Matroid matroid_union(const Matroid& a, const Matroid& b);

// Matroid intersection, the dual of the union of the duals. May have loops.
Matroid matroid_intersection(const Matroid& a, const Matroid& b);

// Ring product: the intersection when loopfree, absent (zero) otherwise.
// Nonzero products must land in grade rank(a)+rank(b)-n; a violation throws.
std::optional<Matroid> product(const Matroid& a, const Matroid& b);

// All chains of cyclic flats of m containing the bottom and the top cyclic
// flat, plus an artificial maximum. mu1[i] is the Möbius value from chain i
// to the artificial maximum.
struct CyclicChainLattice {
  CyclicFlatList base;
  std::vector<std::vector<CyclicFlatRecord>> chains;
  std::vector<long long> mu1;
  // An explicit poset of the chains with the artificial top appended last.
  Poset as_poset() const;
};

CyclicChainLattice cyclic_chain_lattice(const Matroid& m);

// Writes m as a signed sum of nested matroids: coefficient -mu1(T) on the
// nested matroid of each chain T. The indicator vectors agree exactly.
FormalSum decompose_to_nested(const Matroid& m);

// Coordinates of a formal combination in the nested basis of its grade.
std::map<Matroid, long long> to_nested_coordinates(const FormalSum& terms);

// Coordinates of a ring element in the nested basis, by exact linear solve.
std::map<Matroid, long long> nested_coordinates(const RingElement& v);

// Product of two ring elements, computed through the nested basis.
RingElement product_elements(const RingElement& a, const RingElement& b);

// True iff m has a rank-one flat F with F u g = E; equivalent to the product
// with the corank-one matroid of g vanishing.
bool vanishes_corank_one(const Matroid& m, eset g);

// True iff some i and some flat F of m satisfy rank(F) = c-i+1 and
// F u G_i = E; equivalent to the product with the chain product vanishing.
bool vanishes_nested(const Matroid& m, const SetChain& c);

// Predicted flats of m * H_g: common flats F with F u g = E or with no
// covering flat F' of m satisfying F' u g = E.
std::vector<eset> product_flats_check(const Matroid& m, eset g);

// Gram matrix of the pairing between nested matroids of rank r and of rank
// n-r+1: entry 1 iff the product of the pair is nonzero.
std::vector<std::vector<int>> pairing_matrix(int r, int n);
std::vector<std::vector<int>> pairing_matrix_serial(int r, int n);  // reference kernel
mpz_class pairing_determinant(const std::vector<std::vector<int>>& matrix);

// Boundary operators: alternating signed sums of single-element deletions
// (resp. contractions), with terms dropped when the element is a coloop
// (resp. when its closure is not the singleton). Ground sets shrink by one.
FormalSum boundary_deletion(const FormalSum& x);
FormalSum boundary_contraction(const FormalSum& x);

}  // namespace mring

#endif
