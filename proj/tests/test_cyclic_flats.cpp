#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mring/cyclic_flats.hpp"
#include "mring/enumerate.hpp"
#include "mring/error.hpp"
#include "mring/nested.hpp"

using namespace mring;

namespace {

Matroid two_circuit_matroid() { return Matroid::from_bases(4, {0b0011, 0b0101, 0b1010, 0b1100}); }

// Rank 4 on 8 elements: S1={1,2}, S2={3,4} of rank 1, R={1,2,3,4} of rank 2,
// U1={1..6}, U2={1,2,3,4,7,8} of rank 3.
CyclicFlatList eight_element_records() {
  CyclicFlatList list;
  list.n = 8;
  list.records = {{0, 0},          {0b00000011, 1}, {0b00001100, 1}, {0b00001111, 2},
                  {0b00111111, 3}, {0b11001111, 3}, {0b11111111, 4}};
  return list;
}

}  // namespace

TEST_CASE("cyclic part of a flat") {
  const Matroid m = two_circuit_matroid();
  CHECK(cyclic_part(m, sets::full(4)) == sets::full(4));
  CHECK(cyclic_part(uniform(2, 4), 0b0001) == 0);
  CHECK_THROWS_AS(cyclic_part(m, 0b0001), error);  // {1} is not a flat

  // Corank-one matroid with coloop set {1}: the free part of E is {1}.
  const Matroid h = corank_one(4, 0b0001);
  CHECK(cyclic_part(h, sets::full(4)) == 0b1110);
  CHECK(free_part(h, sets::full(4)) == 0b0001);
  CHECK(free_rank(h, sets::full(4)) == 1);
}

TEST_CASE("cyclic flats of small matroids") {
  const CyclicFlatList zu = cyclic_flats(uniform(2, 4));
  CHECK(zu.records == std::vector<CyclicFlatRecord>{{0, 0}, {0b1111, 2}});

  const CyclicFlatList zm = cyclic_flats(two_circuit_matroid());
  CHECK(zm.records == std::vector<CyclicFlatRecord>{{0, 0}, {0b0110, 1}, {0b1001, 1}, {0b1111, 2}});

  CHECK(cyclic_flats(uniform(3, 3)).records == std::vector<CyclicFlatRecord>{{0, 0}});
}

TEST_CASE("axiom validation") {
  CHECK(validate_cyclic_axioms(cyclic_flats(two_circuit_matroid())).ok);
  CHECK(validate_cyclic_axioms(eight_element_records()).ok);

  // Rank jump equal to the size jump breaks the strict bound.
  CyclicFlatList bad;
  bad.n = 3;
  bad.records = {{0, 0}, {0b011, 2}};
  const AxiomReport rep = validate_cyclic_axioms(bad);
  CHECK_FALSE(rep.ok);
  CHECK(rep.detail.find("(Z2)") != std::string::npos);

  // Two incomparable sets without their join present.
  CyclicFlatList nolattice;
  nolattice.n = 4;
  nolattice.records = {{0, 0}, {0b0011, 1}, {0b1100, 1}};
  CHECK_FALSE(validate_cyclic_axioms(nolattice).ok);
}

TEST_CASE("matroid reconstruction from cyclic flats") {
  CHECK(from_cyclic_flats(CyclicFlatList{5, {{0, 0}, {sets::full(5), 3}}}) == uniform(3, 5));

  for (int n = 1; n <= 4; ++n)
    for (const Matroid& m : enumerate_loopfree_matroids(n))
      CHECK(from_cyclic_flats(cyclic_flats(m)) == m);

  const Matroid big = from_cyclic_flats(eight_element_records());
  CHECK(big.n() == 8);
  CHECK(big.rank() == 4);
  MatroidTables t(big);
  CHECK(t.is_flat(0b00000011));
  CHECK(t.is_flat(0b00001111));
  CHECK(t.is_flat(0b00111111));
  CHECK(t.rank_of(0b00000011) == 1);
  CHECK(t.rank_of(0b00001111) == 2);
  CHECK(t.rank_of(0b00111111) == 3);
  CHECK(cyclic_flats(big) == eight_element_records());

  CHECK_THROWS_AS(from_cyclic_flats(CyclicFlatList{3, {{0, 0}, {0b011, 2}}}), error);
}

TEST_CASE("nestedness") {
  CHECK(is_nested(uniform(2, 4)));
  CHECK(is_nested(uniform(3, 3)));
  CHECK_FALSE(is_nested(two_circuit_matroid()));
  CHECK_FALSE(is_nested(from_cyclic_flats(eight_element_records())));
}

TEST_CASE("transversal matroids") {
  CHECK(transversal(4, {0b1001, 0b0110}) == two_circuit_matroid());
  CHECK(transversal(4, {0b1111, 0b1111}) == uniform(2, 4));
  CHECK(transversal(2, {0}) == uniform(0, 2));
  CHECK(transversal(3, {0b001, 0b111}) == Matroid::from_bases(3, {0b011, 0b101}));
}
