#ifndef MRING_RANDOM_GEN_HPP
#define MRING_RANDOM_GEN_HPP

#include <cstdint>

#include "mring/matroid.hpp"

namespace mring {

enum class GenKind { transversal, chain_product, graphic, uniform_minor };

const char* gen_kind_name(GenKind k);

// Seeded generator request. Equal specs produce byte-identical matroids.
struct RandomMatroidSpec {
  GenKind kind = GenKind::transversal;
  int n = 0;
  int rank = 0;
  std::uint64_t seed = 0;
};

// A loopfree matroid of the requested rank on {1,...,n}.
Matroid random_matroid(const RandomMatroidSpec& spec);

// Mixes the generator kinds, for sampling sweeps: index selects kind and seed.
Matroid sample_matroid(int n, std::uint64_t seed, std::uint64_t index);

}  // namespace mring

#endif
