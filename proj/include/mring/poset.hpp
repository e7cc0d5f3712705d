#ifndef MRING_POSET_HPP
#define MRING_POSET_HPP

#include <vector>

namespace mring {

// A finite poset on elements 0..size-1 with an explicit order matrix.
// Reflexivity, antisymmetry and transitivity are validated on construction.
class Poset {
public:
  explicit Poset(std::vector<std::vector<bool>> leq);
  int size() const { return static_cast<int>(leq_.size()); }
  bool leq(int a, int b) const { return leq_[a][b]; }

  // Recursive Möbius function: mu(x,x) = 1 and
  // mu(x,y) = -sum of mu(x,z) over x <= z < y. Requires x <= y.
  long long mobius(int x, int y) const;

  // mu of the poset with artificial bottom and top adjoined.
  long long mobius_number() const;

  // The poset of nonempty chains, ordered by inclusion.
  Poset chain_poset() const;

private:
  std::vector<std::vector<bool>> leq_;
};

}  // namespace mring

#endif
