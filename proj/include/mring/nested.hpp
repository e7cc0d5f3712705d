#ifndef MRING_NESTED_HPP
#define MRING_NESTED_HPP

#include <gmpxx.h>

#include <vector>

#include "mring/cyclic_flats.hpp"
#include "mring/matroid.hpp"

namespace mring {

// A strictly increasing chain G_1 < ... < G_k of subsets with |G_k| <= n-2.
// The empty chain is allowed; its chain product is the free matroid.
struct SetChain {
  int n = 0;
  std::vector<eset> sets;
  friend auto operator<=>(const SetChain&, const SetChain&) = default;
};

SetChain make_chain(int n, std::vector<eset> sets);

// The loopfree corank-one matroid whose coloop set is g: bases E\{j}, j not in g.
Matroid corank_one(int n, eset g);

// Bases are the (n-k)-sets B with |G_i \ B| <= i-1 for every i. Equals the
// iterated intersection product of the corank-one factors.
Matroid chain_product(const SetChain& c);

// A chain whose product is the given loopfree nested matroid. Among the valid
// chains the canonical one pads single-element steps with the smallest
// available labels; other chains produce the same matroid.
SetChain chain_presentation(const Matroid& m);

// The maximal transversal presentation attached to a chain:
// G_1 repeated |G_1| times, each later G_i repeated |G_i\G_{i-1}|-1 times,
// and E repeated |E\G_k|-1 times.
std::vector<eset> transversal_presentation(const SetChain& c);

// The nested matroid determined by a chain of cyclic flats with ranks.
Matroid nested_from_cyclic_chain(int n, const std::vector<CyclicFlatRecord>& records);

// Every loopfree nested matroid of rank r on {1,...,n}, each exactly once,
// sorted. Generated by enumerating the valid chains of cyclic-flat records.
std::vector<Matroid> enumerate_nested(int r, int n);

mpz_class count_nested(int r, int n);

// Permutations of {1,...,n} with exactly r ascents; 0 outside 0 <= r < n.
mpz_class eulerian(int r, int n);

}  // namespace mring

#endif
