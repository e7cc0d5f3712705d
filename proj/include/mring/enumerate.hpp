#ifndef MRING_ENUMERATE_HPP
#define MRING_ENUMERATE_HPP

#include <vector>

#include "mring/matroid.hpp"

namespace mring {

// Every loopfree matroid on {1,...,n}, built by filtering equal-size basis
// families through the exchange axiom. Complete ground truth; n <= 5 only.
// The parallel version splits the candidate families across threads.
std::vector<Matroid> enumerate_loopfree_matroids(int n);
std::vector<Matroid> enumerate_loopfree_matroids_serial(int n);

}  // namespace mring

#endif
