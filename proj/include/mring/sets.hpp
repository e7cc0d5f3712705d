#ifndef MRING_SETS_HPP
#define MRING_SETS_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace mring {

// Subsets of the ground set {1,...,n} as bitmasks; element i sits at bit i-1.
using eset = std::uint32_t;

// Ground sets are capped so every subset loop stays a single-word 2^n sweep.
inline constexpr int kMaxGroundSet = 16;

namespace sets {

inline eset full(int n) { return (n >= 32) ? ~eset{0} : ((eset{1} << n) - 1); }
inline eset single(int e) { return eset{1} << (e - 1); }
inline int size(eset s) { return std::popcount(s); }
inline bool contains(eset s, int e) { return (s >> (e - 1)) & 1u; }
inline bool subset(eset a, eset b) { return (a & ~b) == 0; }
inline bool proper_subset(eset a, eset b) { return a != b && subset(a, b); }
inline int lowest(eset s) { return std::countr_zero(s) + 1; }

std::vector<int> elements(eset s);
eset from_elements(const std::vector<int>& elems);

// "{1,3,4}"
std::string to_string(eset s);

// Renumbers the elements of `s` onto {1,...,|keep|}, preserving order,
// where `keep` is the set of surviving elements.
eset compress(eset s, eset keep);

}  // namespace sets

}  // namespace mring

#endif
