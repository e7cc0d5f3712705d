#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "mring/error.hpp"
#include "mring/nested.hpp"
#include "mring/ring.hpp"

using namespace mring;

TEST_CASE("corank one matroids") {
  CHECK(corank_one(4, 0) == uniform(3, 4));
  CHECK(corank_one(4, 0b0011) == Matroid::from_bases(4, {0b1011, 0b0111}));
  CHECK(coloops(corank_one(4, 0b0011)) == 0b0011);
  CHECK_THROWS_AS(corank_one(4, 0b0111), error);
}

TEST_CASE("chain products") {
  // Single-set chains reduce to corank-one matroids.
  CHECK(chain_product(make_chain(4, {0b1001})) == corank_one(4, 0b1001));
  CHECK(chain_product(make_chain(4, {0b1001})).bases() == std::vector<eset>{0b1011, 0b1101});

  // Minimal step sizes give the uniform matroid.
  CHECK(chain_product(make_chain(5, {0, 0b00001, 0b00011})) == uniform(2, 5));
  CHECK(chain_product(make_chain(3, {0, 0b001})) == uniform(1, 3));
  CHECK(chain_product(SetChain{4, {}}) == uniform(4, 4));

  CHECK_THROWS_AS(make_chain(4, {0b0011, 0b0011}), error);
  CHECK_THROWS_AS(make_chain(4, {0b0111}), error);  // n-1 elements
}

TEST_CASE("chain products match the iterated ring product") {
  const std::vector<SetChain> chains = {
      make_chain(5, {0b00001}),
      make_chain(5, {0b00001, 0b00111}),
      make_chain(5, {0, 0b01001, 0b01011}),
      make_chain(6, {0b000011, 0b001111}),
  };
  for (const auto& c : chains) {
    Matroid acc = uniform(c.n, c.n);
    for (eset g : c.sets) {
      auto p = product(acc, corank_one(c.n, g));
      REQUIRE(p.has_value());
      acc = *p;
    }
    CHECK(chain_product(c) == acc);
    CHECK(is_nested(chain_product(c)));
    CHECK(chain_product(c).rank() == c.n - static_cast<int>(c.sets.size()));
  }
}

TEST_CASE("chain presentation") {
  // Uniform matroids get the minimal-step chain.
  const SetChain cu = chain_presentation(uniform(2, 5));
  CHECK(cu.sets.size() == 3);
  for (std::size_t i = 0; i < cu.sets.size(); ++i) CHECK(sets::size(cu.sets[i]) == static_cast<int>(i));
  CHECK(chain_product(cu) == uniform(2, 5));

  CHECK(chain_presentation(corank_one(4, 0b0011)) == make_chain(4, {0b0011}));
  CHECK(chain_presentation(uniform(4, 4)).sets.empty());

  const Matroid m3 = nested_from_cyclic_chain(4, {{0, 0}, {0b1001, 1}, {0b1111, 2}});
  const SetChain c3 = chain_presentation(m3);
  CHECK(c3.sets.size() == 2);
  CHECK(chain_product(c3) == m3);
  CHECK(cyclic_flats(chain_product(c3)) == cyclic_flats(m3));

  CHECK_THROWS_AS(chain_presentation(Matroid::from_bases(4, {0b0011, 0b0101, 0b1010, 0b1100})), error);

  // Exhaustive roundtrip over every nested matroid on up to six elements.
  for (int n = 1; n <= 6; ++n)
    for (int r = 1; r <= n; ++r)
      for (const Matroid& m : enumerate_nested(r, n)) {
        const SetChain c = chain_presentation(m);
        CHECK(chain_product(c) == m);
      }
}

TEST_CASE("transversal presentation of a chain is maximal") {
  const SetChain c = make_chain(5, {0b00011, 0b00111});
  const auto pres = transversal_presentation(c);
  const Matroid m = chain_product(c);
  CHECK(transversal(5, pres) == m);
  for (eset a : pres) {
    if (a == sets::full(5)) continue;
    CHECK(coloops(restriction(m, sets::full(5) & ~a)) == 0);
  }
}

TEST_CASE("nested matroids from cyclic chains") {
  CHECK(nested_from_cyclic_chain(4, {{0, 0}, {0b1111, 2}}) == uniform(2, 4));

  const Matroid m3 = nested_from_cyclic_chain(4, {{0, 0}, {0b1001, 1}, {0b1111, 2}});
  CHECK(flats(m3) == std::vector<eset>{0, 0b0010, 0b0100, 0b1001, 0b1111});

  // Chain through S1, R, U1 of the eight-element example.
  const Matroid summand = nested_from_cyclic_chain(
      8, {{0, 0}, {0b00000011, 1}, {0b00001111, 2}, {0b00111111, 3}, {0b11111111, 4}});
  CHECK(summand.rank() == 4);
  CHECK(is_nested(summand));

  CHECK_THROWS_AS(nested_from_cyclic_chain(4, {{0, 0}, {0b0011, 1}, {0b0101, 2}}), error);
  CHECK_THROWS_AS(nested_from_cyclic_chain(4, {{0b0001, 1}}), error);
}

TEST_CASE("enumeration matches the counts") {
  CHECK(enumerate_nested(1, 4) == std::vector<Matroid>{uniform(1, 4)});
  CHECK(enumerate_nested(4, 4) == std::vector<Matroid>{uniform(4, 4)});
  CHECK(enumerate_nested(2, 4).size() == 11);

  for (int n = 1; n <= 6; ++n) {
    mpz_class total = 0;
    for (int r = 1; r <= n; ++r) {
      const auto all = enumerate_nested(r, n);
      std::set<Matroid> unique_check(all.begin(), all.end());
      CHECK(unique_check.size() == all.size());
      for (const auto& m : all) {
        CHECK(is_nested(m));
        CHECK(is_loopfree(m));
        CHECK(m.rank() == r);
      }
      CHECK(mpz_class(static_cast<long>(all.size())) == count_nested(r, n));
      CHECK(count_nested(r, n) == eulerian(r - 1, n));
      total += count_nested(r, n);
    }
    mpz_class factorial = 1;
    for (int k = 2; k <= n; ++k) factorial *= k;
    CHECK(total == factorial);
  }
  CHECK_THROWS_AS(enumerate_nested(0, 3), error);
}

TEST_CASE("eulerian numbers") {
  CHECK(eulerian(0, 5) == 1);
  CHECK(eulerian(1, 4) == 11);
  CHECK(eulerian(2, 5) == 66);
  CHECK(eulerian(5, 3) == 0);
  CHECK(eulerian(-1, 3) == 0);
  for (int n = 1; n <= 9; ++n)
    for (int r = 0; r < n; ++r) CHECK(eulerian(r, n) == eulerian(n - r - 1, n));
  // Frozen against the alternating-sum formula; lies beyond the 63-bit range.
  CHECK(eulerian(10, 21) == mpz_class("14950368791471452636"));
}

TEST_CASE("counting recursion basics") {
  CHECK(count_nested(1, 9) == 1);
  CHECK(count_nested(2, 4) == 11);
  CHECK_THROWS_AS(count_nested(3, 2), error);
}
