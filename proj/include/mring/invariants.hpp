#ifndef MRING_INVARIANTS_HPP
#define MRING_INVARIANTS_HPP

#include <compare>
#include <map>
#include <vector>

#include "mring/chains.hpp"
#include "mring/matroid.hpp"

namespace mring {

// Size profile (a_0,...,a_r) of a maximal chain: a_0 = |F_0| and the step
// sizes after it; entries sum to n.
struct Composition {
  std::vector<int> parts;
  friend auto operator<=>(const Composition&, const Composition&) = default;
};

// Catenary data: how many maximal chains of flats realize each composition.
struct GInvariant {
  int n = 0;
  int r = 0;
  std::map<Composition, long long> counts;
  friend auto operator<=>(const GInvariant&, const GInvariant&) = default;
};

struct TuttePolynomial {
  std::map<std::pair<int, int>, long long> coeffs;  // (x-degree, y-degree)
  long long eval(long long x, long long y) const;
  friend auto operator<=>(const TuttePolynomial&, const TuttePolynomial&) = default;
};

GInvariant g_invariant(const Matroid& m);
GInvariant g_invariant_of_combination(const FormalSum& terms);

// Corank-nullity subset expansion over all 2^n subsets.
TuttePolynomial tutte(const Matroid& m);

// Chains F_h < ... < F_k of flats with rank(F_i) = i and |F_i| = sizes[i-h].
long long chain_count(const Matroid& m, int h, int k, const std::vector<int>& sizes);

// Flats of rank k and size s whose restriction has exactly c coloops.
long long flat_count(const Matroid& m, int k, int s, int c);

}  // namespace mring

#endif
