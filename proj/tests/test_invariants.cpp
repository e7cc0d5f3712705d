#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mring/error.hpp"
#include "mring/invariants.hpp"
#include "mring/nested.hpp"
#include "mring/ring.hpp"

using namespace mring;

namespace {

Matroid two_circuit_matroid() { return Matroid::from_bases(4, {0b0011, 0b0101, 0b1010, 0b1100}); }

GInvariant gamma_single(int n, int r, std::vector<int> parts, long long c) {
  GInvariant g{n, r, {}};
  g.counts[Composition{std::move(parts)}] = c;
  return g;
}

}  // namespace

TEST_CASE("catenary data of the worked examples") {
  CHECK(g_invariant(two_circuit_matroid()) == gamma_single(4, 2, {0, 2, 2}, 2));

  const Matroid m3 = nested_from_cyclic_chain(4, {{0, 0}, {0b1001, 1}, {0b1111, 2}});
  GInvariant expect{4, 2, {}};
  expect.counts[Composition{{0, 1, 3}}] = 2;
  expect.counts[Composition{{0, 2, 2}}] = 1;
  CHECK(g_invariant(m3) == expect);

  CHECK(g_invariant(uniform(2, 4)) == gamma_single(4, 2, {0, 1, 3}, 4));
  CHECK_THROWS_AS(g_invariant(uniform(0, 2)), error);
}

TEST_CASE("catenary data is additive over decompositions") {
  const Matroid m = two_circuit_matroid();
  CHECK(g_invariant_of_combination(decompose_to_nested(m)) == g_invariant(m));

  // M1 + M2 - M3 - M4 maps to the zero element of the group.
  const Matroid m3 = nested_from_cyclic_chain(4, {{0, 0}, {0b1001, 1}, {0b1111, 2}});
  const Matroid m4 = nested_from_cyclic_chain(4, {{0, 0}, {0b0110, 1}, {0b1111, 2}});
  const FormalSum relation = {{1, uniform(2, 4)}, {1, m}, {-1, m3}, {-1, m4}};
  CHECK(g_invariant_of_combination(relation).counts.empty());
  CHECK(g_invariant_of_combination({}).counts.empty());
  CHECK_THROWS_AS(g_invariant_of_combination({{1, uniform(2, 4)}, {1, uniform(3, 4)}}), error);
}

TEST_CASE("tutte polynomials") {
  TuttePolynomial xn;
  xn.coeffs[{3, 0}] = 1;
  CHECK(tutte(uniform(3, 3)) == xn);

  TuttePolynomial xy;
  xy.coeffs[{1, 0}] = 1;
  xy.coeffs[{0, 1}] = 1;
  CHECK(tutte(uniform(1, 2)) == xy);

  const Matroid m = two_circuit_matroid();
  CHECK(tutte(m).eval(1, 1) == 4);
  CHECK(tutte(m).eval(2, 2) == 16);

  // Loops are allowed: a single loop contributes a factor y.
  const Matroid loopy = Matroid::from_bases(2, {0b01});
  TuttePolynomial expected_loopy;
  expected_loopy.coeffs[{1, 1}] = 1;
  CHECK(tutte(loopy) == expected_loopy);
}

TEST_CASE("tutte is linear across the nested decomposition") {
  for (const Matroid& m : {two_circuit_matroid(), uniform(3, 5), corank_one(5, 0b00110)}) {
    std::map<std::pair<int, int>, long long> sum;
    for (const auto& [c, nm] : decompose_to_nested(m))
      for (const auto& [deg, v] : tutte(nm).coeffs) sum[deg] += c * v;
    std::erase_if(sum, [](const auto& kv) { return kv.second == 0; });
    CHECK(sum == tutte(m).coeffs);
  }
}

TEST_CASE("chain counts") {
  const Matroid m = two_circuit_matroid();
  CHECK(chain_count(m, 1, 1, {2}) == 2);  // the two rank-one flats have two elements
  CHECK(chain_count(m, 2, 2, {4}) == 1);  // only the ground set at the top
  CHECK(chain_count(m, 0, 2, {0, 2, 4}) == 2);
  CHECK(chain_count(uniform(2, 4), 0, 2, {0, 1, 4}) == 4);
  CHECK_THROWS_AS(chain_count(m, 1, 1, {2, 3}), error);
  CHECK_THROWS_AS(chain_count(m, 2, 1, {2}), error);
}

TEST_CASE("flat counts by free part") {
  const Matroid m = two_circuit_matroid();
  CHECK(flat_count(m, 1, 2, 0) == 2);  // both rank-one flats are cyclic
  CHECK(flat_count(m, 1, 2, 1) == 0);
  CHECK(flat_count(uniform(2, 4), 1, 1, 1) == 4);

  // Partition check: summing over size and free part counts all flats.
  for (int k = 0; k <= m.rank(); ++k) {
    long long total = 0;
    for (int s = 0; s <= m.n(); ++s)
      for (int c = 0; c <= s; ++c) total += flat_count(m, k, s, c);
    CHECK(total == static_cast<long long>(flats_of_rank(m, k).size()));
  }
}
