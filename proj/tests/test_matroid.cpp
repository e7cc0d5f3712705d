#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mring/error.hpp"
#include "mring/matroid.hpp"

using namespace mring;

namespace {

// Rank two on four elements with flats {}, {1,4}, {2,3}, E.
Matroid two_circuit_matroid() { return Matroid::from_bases(4, {0b0011, 0b0101, 0b1010, 0b1100}); }

}  // namespace

TEST_CASE("from_bases validates and canonicalizes") {
  const Matroid u23 = Matroid::from_bases(3, {0b011, 0b101, 0b110});
  CHECK(u23 == uniform(2, 3));

  CHECK_THROWS_AS(Matroid::from_bases(3, {}), error);
  CHECK_THROWS_AS(Matroid::from_bases(3, {0b011, 0b100}), error);

  // {12,34} fails the exchange axiom.
  try {
    Matroid::from_bases(4, {0b0011, 0b1100});
    FAIL("expected an exchange violation");
  } catch (const error& e) {
    CHECK(e.code() == errc::exchange_axiom_violation);
  }

  const Matroid m = two_circuit_matroid();
  CHECK(m.rank() == 2);
  CHECK(flats(m) == std::vector<eset>{0, 0b0110, 0b1001, 0b1111});
}

TEST_CASE("uniform matroids") {
  CHECK(uniform(2, 3).bases() == std::vector<eset>{0b011, 0b101, 0b110});
  CHECK(uniform(4, 4).bases() == std::vector<eset>{0b1111});
  CHECK(uniform(0, 2).bases() == std::vector<eset>{0});
  CHECK_FALSE(is_loopfree(uniform(0, 2)));
  CHECK_THROWS_AS(uniform(4, 3), error);
}

TEST_CASE("rank and closure") {
  const Matroid m = two_circuit_matroid();
  CHECK(rank(m, sets::full(4)) == 2);
  CHECK(rank(m, 0b1001) == 1);
  CHECK(rank(m, 0) == 0);
  CHECK(rank(uniform(2, 3), sets::full(3)) == 2);

  CHECK(closure(m, 0b0001) == 0b1001);
  CHECK(closure(uniform(2, 3), 0b001) == 0b001);
  CHECK(closure(m, sets::full(4)) == sets::full(4));
}

TEST_CASE("flats enumeration") {
  const Matroid u = uniform(2, 4);
  std::vector<eset> expect;
  for (eset f = 0; f < 16; ++f)
    if (sets::size(f) < 2) expect.push_back(f);
  expect.push_back(0b1111);
  std::sort(expect.begin(), expect.end());
  CHECK(flats(u) == expect);
  CHECK(flats_of_rank(u, 0) == std::vector<eset>{0});
  CHECK(flats_of_rank(two_circuit_matroid(), 1) == std::vector<eset>{0b0110, 0b1001});
}

TEST_CASE("loops and coloops") {
  CHECK(loops(uniform(2, 3)) == 0);
  CHECK(loops(uniform(0, 2)) == 0b11);
  CHECK(is_loopfree(uniform(1, 1)));

  // Bases {1,2,3}\{j} for j outside {1}: coloop set {1} on n=4.
  const Matroid h = Matroid::from_bases(4, {0b0111, 0b1011, 0b1101});
  CHECK(coloops(h) == 0b0001);
}

TEST_CASE("duality") {
  CHECK(dual(uniform(2, 3)) == uniform(1, 3));
  CHECK(dual(uniform(4, 4)) == uniform(0, 4));
  CHECK(dual(two_circuit_matroid()) == two_circuit_matroid());
  const Matroid m = two_circuit_matroid();
  CHECK(dual(dual(m)) == m);
}

TEST_CASE("minors relabel order-preservingly") {
  CHECK(deletion(uniform(2, 3), 3) == uniform(2, 2));
  CHECK(contraction(uniform(2, 3), 1) == uniform(1, 2));

  // Restriction to the flat {1,4}: two parallel elements.
  const Matroid r = restriction(two_circuit_matroid(), 0b1001);
  CHECK(r == Matroid::from_bases(2, {0b01, 0b10}));

  CHECK_THROWS_AS(deletion(uniform(1, 1), 1), error);
  CHECK_THROWS_AS(restriction(uniform(2, 3), 0b1000), error);

  // Deleting a coloop keeps the remaining structure.
  const Matroid h = Matroid::from_bases(4, {0b0111, 0b1011, 0b1101});
  CHECK(deletion(h, 1) == uniform(2, 3));
}

TEST_CASE("contraction by a set") {
  const Matroid m = uniform(3, 5);
  CHECK(contraction_set(m, 0b00011) == uniform(1, 3));
  CHECK(contraction_set(m, 0b00001) == contraction(m, 1));
}

TEST_CASE("truncation") {
  CHECK(truncate(uniform(2, 3)) == uniform(1, 3));
  CHECK(truncate(two_circuit_matroid()) == uniform(1, 4));
  CHECK_THROWS_AS(truncate(uniform(0, 2)), error);
}

TEST_CASE("quotients") {
  const Matroid m = two_circuit_matroid();
  CHECK(is_quotient(m, m));
  CHECK(is_quotient(truncate(m), m));
  CHECK_FALSE(is_quotient(m, truncate(m)));
  CHECK_THROWS_AS(is_quotient(uniform(1, 2), uniform(1, 3)), error);
}

TEST_CASE("tables agree with the direct rank") {
  const Matroid m = two_circuit_matroid();
  MatroidTables t(m);
  for (eset a = 0; a < 16; ++a) {
    CHECK(t.rank_of(a) == rank(m, a));
    CHECK(t.closure_of(a) == closure(m, a));
  }
  CHECK(maximal_flat_chains(t).size() == 2);
}
