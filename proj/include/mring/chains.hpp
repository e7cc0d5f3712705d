#ifndef MRING_CHAINS_HPP
#define MRING_CHAINS_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "mring/matroid.hpp"

namespace mring {

// A chain F_1 < ... < F_r = E of subsets (the leading empty set implicit).
// These index the coordinates of the modules the ring lives in. Chains
// compare by (ground set, length, sets).
struct FlatChain {
  int n = 0;
  std::vector<eset> sets;
  int length() const { return static_cast<int>(sets.size()); }
  friend bool operator==(const FlatChain&, const FlatChain&) = default;
  friend std::strong_ordering operator<=>(const FlatChain& a, const FlatChain& b) {
    if (a.n != b.n) return a.n <=> b.n;
    if (a.sets.size() != b.sets.size()) return a.sets.size() <=> b.sets.size();
    return a.sets <=> b.sets;
  }
};

FlatChain make_flat_chain(int n, std::vector<eset> sets);

// All chains of length r on {1,...,n}, in canonical order.
std::vector<FlatChain> all_chains(int r, int n);

// A graded integer combination of chains, stored sparsely. Equality of ring
// elements is literal map equality, so relations between matroids whose
// indicator vectors agree collapse automatically.
class RingElement {
public:
  static RingElement zero(int n) { return RingElement(n); }
  static RingElement single(FlatChain chain, long long coeff);

  bool is_zero() const { return coeffs_.empty(); }
  int n() const { return n_; }
  // Grade of a nonzero element; zero carries no grade.
  int grade() const;
  const std::map<FlatChain, long long>& coeffs() const { return coeffs_; }
  long long coeff(const FlatChain& c) const;

  friend auto operator<=>(const RingElement&, const RingElement&) = default;
  friend RingElement add(const RingElement& a, const RingElement& b);
  friend RingElement scale(const RingElement& a, long long c);
  friend RingElement indicator(const Matroid& m);

private:
  explicit RingElement(int n) : n_(n) {}
  int n_;
  std::map<FlatChain, long long> coeffs_;
};

// The 0/1 vector of maximal chains of flats of a loopfree matroid.
RingElement indicator(const Matroid& m);
RingElement add(const RingElement& a, const RingElement& b);
RingElement scale(const RingElement& a, long long c);

// A formal integer combination of matroids on a common ground set.
using FormalSum = std::vector<std::pair<long long, Matroid>>;

// Image of a formal combination under the chain-indicator map.
RingElement indicator_sum(const FormalSum& terms);

}  // namespace mring

#endif
