#include <doctest.h>

#include "kamienny/independence.hpp"
#include "oracles.hpp"

using namespace kamienny;

TEST_CASE("elimination primitives behave on toy matrices") {
  SUBCASE("primitive single vector is independent over every field") {
    auto divs = elementary_divisors({{mpz_class(2), mpz_class(3), mpz_class(5)}});
    REQUIRE(divs.size() == 1);
    CHECK(divs[0] == 1);
  }
  SUBCASE("an all-even vector fails at m = 2") {
    auto divs = elementary_divisors({{mpz_class(2), mpz_class(4), mpz_class(6)}});
    REQUIRE(divs.size() == 1);
    CHECK(divs[0] == 2);
    auto elim = eliminate_mod({{2, 4, 6}}, 2);
    CHECK(elim.rank == 0);
    REQUIRE(elim.dependency.has_value());
    CHECK((*elim.dependency)[0] % 2 != 0);
  }
  SUBCASE("unit scaling does not change ranks mod m") {
    std::vector<std::vector<i64>> rows = {{1, 2, 3}, {2, 1, 0}};
    std::vector<std::vector<i64>> scaled = {{3, 6, 9}, {2, 1, 0}};  // 3 is a unit mod 7
    CHECK(eliminate_mod(rows, 7).rank == eliminate_mod(scaled, 7).rank);
  }
  SUBCASE("snf divisors divide each other") {
    auto divs = elementary_divisors({{mpz_class(2), mpz_class(0)}, {mpz_class(0), mpz_class(6)}});
    REQUIRE(divs.size() == 2);
    CHECK(divs[0] == 2);
    CHECK(divs[1] == 6);
  }
}

TEST_CASE("single image is independent at every level") {
  for (auto [p, n] : {std::pair<i64, int>{11, 1}, {5, 2}, {3, 3}, {2, 5}}) {
    HomologyPresentation pres = HomologyPresentation::build(PrimePowerLevel(p, n));
    CHECK(independent_all_m(pres, 1).independent);
    CHECK(rank_mod_m(pres, 1, 2).independent);
  }
}

TEST_CASE("all-m verdict implies full rank at every small prime") {
  for (auto [p, n] : {std::pair<i64, int>{5, 2}, {3, 3}, {2, 5}, {7, 2}}) {
    HomologyPresentation pres = HomologyPresentation::build(PrimePowerLevel(p, n));
    const i64 dmax = max_independent_d(pres, IndependenceMode::all_mod);
    CHECK(dmax >= 1);
    CHECK(dmax <= pres.rank());
    for (i64 m = 2; m <= 50; ++m) {
      if (!is_prime(m)) continue;
      CHECK(rank_mod_m(pres, dmax, m).rank_mod == dmax);
    }
  }
}

TEST_CASE("pigeonhole beyond the quotient rank, with a verified witness") {
  HomologyPresentation pres = HomologyPresentation::build(PrimePowerLevel(5, 2));
  REQUIRE(pres.rank() == 5);
  auto rep = rank_mod_m(pres, 6, 2);
  CHECK(rep.pigeonhole);
  CHECK_FALSE(rep.independent);
  REQUIRE(rep.witness.has_value());

  // Re-evaluate the witness independently of the library path.
  HomologyClass acc = pres.zero_class();
  bool nontrivial = false;
  for (size_t i = 0; i < rep.witness->size(); ++i) {
    const i64 li = (*rep.witness)[i];
    if (li % 2 != 0) nontrivial = true;
    HomologyClass cls = hecke_class(static_cast<i64>(i) + 1, pres);
    cls *= mpz_class(gmp_cast(li));
    acc += cls;
  }
  CHECK(nontrivial);
  CHECK(acc.is_zero_mod(2));
}

TEST_CASE("max_independent_d agrees with a manual prefix sweep") {
  HomologyPresentation pres = HomologyPresentation::build(PrimePowerLevel(5, 2));
  for (i64 m : {2, 3, 5}) {
    const i64 dmax = max_independent_d(pres, IndependenceMode::single_mod, m);
    for (i64 d = 1; d <= dmax; ++d) CHECK(rank_mod_m(pres, d, m).independent);
    CHECK_FALSE(rank_mod_m(pres, dmax + 1, m).independent);
    CHECK(max_independent_d(pres, IndependenceMode::all_mod) <= dmax);
  }
}

TEST_CASE("rank caps the sweep at q = 27") {
  HomologyPresentation pres = HomologyPresentation::build(PrimePowerLevel(3, 3));
  REQUIRE(pres.rank() == 7);
  CHECK(max_independent_d(pres, IndependenceMode::all_mod) <= 7);
}

TEST_CASE("a failed all-m verdict names a prime field that witnesses it") {
  // At q = 121 the first four images are independent over F_3 but not over
  // every field: the integral test fails and must point at a concrete m.
  HomologyPresentation pres = HomologyPresentation::build(PrimePowerLevel(11, 2));
  auto all4 = independent_all_m(pres, 4);
  if (!all4.independent) {
    REQUIRE(all4.witness_modulus.has_value());
    REQUIRE(all4.witness.has_value());
    auto sub = rank_mod_m(pres, 4, *all4.witness_modulus);
    CHECK(sub.rank_mod < 4);
  }
  // Consistency both ways at a level where the verdict is positive.
  HomologyPresentation pres27 = HomologyPresentation::build(PrimePowerLevel(3, 3));
  const i64 dmax = max_independent_d(pres27, IndependenceMode::all_mod);
  for (i64 m : {2, 3, 5, 7, 11, 13}) CHECK(rank_mod_m(pres27, dmax, m).rank_mod == dmax);
}

TEST_CASE("criterion verdict wires in the smallest prime different from p") {
  {
    HomologyPresentation pres = HomologyPresentation::build(PrimePowerLevel(5, 2));
    auto rep = criterion_verdict(pres, 1, IndependenceMode::all_mod);
    CHECK(rep.s == 2);
    CHECK(rep.tested == 2);
    CHECK_FALSE(rep.level_clears_threshold);
  }
  {
    HomologyPresentation pres = HomologyPresentation::build(PrimePowerLevel(2, 5));
    auto rep = criterion_verdict(pres, 1, IndependenceMode::all_mod);
    CHECK(rep.s == 3);
    CHECK(rep.tested == 3);
  }
  {
    HomologyPresentation pres = HomologyPresentation::build(PrimePowerLevel(3, 3));
    auto rep = criterion_verdict(pres, 2, IndependenceMode::single_mod, 5);
    CHECK(rep.s == 2);
    CHECK(rep.tested == 4);
  }
}
