#ifndef MRING_EXACT_HPP
#define MRING_EXACT_HPP

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace mring {

using IntMat = std::vector<std::vector<mpz_class>>;

// Determinant by fraction-free (Bareiss) elimination; exact over the integers.
mpz_class det_bareiss(IntMat a);

// Rank over the rationals; rows are gcd-normalized to keep entries small.
int rank_exact(IntMat a);

// Basis of { x : a x = 0 } over the rationals, scaled to primitive integer
// vectors. Deterministic (echelon order).
std::vector<std::vector<mpz_class>> nullspace_exact(IntMat a);

// Unique solution of a x = b when it exists and is integral.
std::optional<std::vector<mpz_class>> solve_unique_integral(IntMat a, std::vector<mpz_class> b);

}  // namespace mring

#endif
