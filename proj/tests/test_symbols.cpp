#include <doctest.h>

#include <filesystem>
#include <random>

#include "kamienny/cache.hpp"
#include "kamienny/symbols.hpp"
#include "oracles.hpp"

using namespace kamienny;

TEST_CASE("quotient rank equals 2g + c - 1 from the curve-data oracle") {
  for (auto [p, n] : {std::pair<i64, int>{11, 1}, {5, 2}, {3, 3}, {7, 2}, {2, 3}, {3, 2}, {11, 2}}) {
    PrimePowerLevel level(p, n);
    HomologyPresentation pres = HomologyPresentation::build(level);
    auto data = oracles::curve_data(p, n);
    CHECK(pres.rank() == 2 * data.genus + data.cusps - 1);
    for (const auto& e : pres.divisors()) CHECK(e == 1);
  }
}

TEST_CASE("orbit sums reduce to zero") {
  PrimePowerLevel level(5, 2);
  HomologyPresentation pres = HomologyPresentation::build(level);
  for (const auto& x : enumerate_points(level)) {
    SymbolVector vs(level);
    vs.add(x, 1);
    vs.add(act_sigma(x, level), 1);
    CHECK(pres.reduce(vs).is_zero());

    SymbolVector vt(level);
    vt.add(x, 1);
    vt.add(act_tau(x, level), 1);
    vt.add(act_tau(act_tau(x, level), level), 1);
    CHECK(pres.reduce(vt).is_zero());
  }
}

TEST_CASE("sigma-fixed points give the zero class") {
  PrimePowerLevel level(5, 2);  // 7^2 = -1 mod 25
  HomologyPresentation pres = HomologyPresentation::build(level);
  const P1Point fixed = P1Point::affine(7);
  REQUIRE(act_sigma(fixed, level) == fixed);
  CHECK(pres.xi_class(fixed).is_zero());
}

TEST_CASE("reduce is linear") {
  PrimePowerLevel level(3, 2);
  HomologyPresentation pres = HomologyPresentation::build(level);
  const P1Point x = P1Point::affine(2), y = P1Point::infinity_like(1);
  SymbolVector v(level);
  v.add(x, 3);
  v.add(y, -2);
  HomologyClass lhs = pres.reduce(v);
  HomologyClass rhs = pres.zero_class();
  HomologyClass cx = pres.xi_class(x);
  cx *= 3;
  HomologyClass cy = pres.xi_class(y);
  cy *= -2;
  rhs += cx;
  rhs += cy;
  CHECK(lhs == rhs);
  CHECK(pres.reduce(SymbolVector(level)).is_zero());
}

namespace {

bool is_sigma_invariant(const SymbolVector& v, const PrimePowerLevel& level) {
  return v.acted(GroupWord::sigma()) == v;
}
bool is_tau_invariant(const SymbolVector& v, const PrimePowerLevel& level) {
  return v.acted(GroupWord::tau()) == v;
}

}  // namespace

TEST_CASE("solve_membership returns a valid decomposition") {
  PrimePowerLevel level(3, 2);
  HomologyPresentation pres = HomologyPresentation::build(level);
  std::mt19937_64 rng(77);

  auto check_decomposition = [&](const SymbolVector& v) {
    auto [alpha, beta] = pres.solve_membership(v);
    CHECK(is_sigma_invariant(alpha, level));
    CHECK(is_tau_invariant(beta, level));
    CHECK(alpha - beta == v);
  };

  SUBCASE("single sigma orbit sum") {
    const P1Point x = P1Point::affine(4);
    SymbolVector v(level);
    v.add(x, 1);
    v.add(act_sigma(x, level), 1);
    check_decomposition(v);
  }
  SUBCASE("negated tau orbit sum") {
    const P1Point x = P1Point::affine(4);
    SymbolVector v(level);
    v.add(x, -1);
    v.add(act_tau(x, level), -1);
    v.add(act_tau(act_tau(x, level), level), -1);
    check_decomposition(v);
  }
  SUBCASE("mixed difference") {
    const P1Point x = P1Point::affine(4), y = P1Point::affine(7);
    SymbolVector v(level);
    v.add(x, 1);
    v.add(act_sigma(x, level), 1);
    v.add(y, -1);
    v.add(act_tau(y, level), -1);
    v.add(act_tau(act_tau(y, level), level), -1);
    check_decomposition(v);
  }
  SUBCASE("random lattice elements") {
    for (int trial = 0; trial < 25; ++trial) {
      SymbolVector v(level);
      for (const auto& row : pres.relation_rows()) {
        const i64 c = oracles::uniform(rng, -4, 4);
        if (c == 0) continue;
        // Decide sigma/tau by position against sigma_row_count at add time.
        for (const auto& [col, mult] : row) v.add(point_at(col, level), mpz_class(gmp_cast(c * mult)));
      }
      REQUIRE(pres.reduce(v).is_zero());
      check_decomposition(v);
    }
  }
  SUBCASE("not in kernel throws") {
    // The class of (0, 1) is the symbol from 0 to infinity, never zero here.
    SymbolVector v(level);
    v.add(P1Point::affine(0), 1);
    REQUIRE_FALSE(pres.reduce(v).is_zero());
    CHECK_THROWS_AS(pres.solve_membership(v), error);
  }
}

TEST_CASE("solve_membership_mod works over small prime fields") {
  PrimePowerLevel level(5, 2);
  HomologyPresentation pres = HomologyPresentation::build(level);
  for (i64 m : {2, 3, 7}) {
    const P1Point x = P1Point::affine(3);
    SymbolVector v(level);
    v.add(x, 1);
    v.add(act_sigma(x, level), 1);
    v *= mpz_class(gmp_cast(m + 1));  // nontrivial mod m
    auto [alpha, beta] = pres.solve_membership_mod(v, m);
    SymbolVector diff = alpha - beta;
    CHECK((diff - v).reduced_mod(m).is_zero());
    CHECK((alpha.acted(GroupWord::sigma()) - alpha).reduced_mod(m).is_zero());
    CHECK((beta.acted(GroupWord::tau()) - beta).reduced_mod(m).is_zero());
  }
}

TEST_CASE("decompositions are unique only up to the all-ones shift") {
  PrimePowerLevel level(3, 2);
  HomologyPresentation pres = HomologyPresentation::build(level);
  const P1Point x = P1Point::affine(2);
  SymbolVector v(level);
  v.add(x, 1);
  v.add(act_sigma(x, level), 1);
  auto [alpha, beta] = pres.solve_membership(v);

  SymbolVector ones(level);
  for (const auto& pt : enumerate_points(level)) ones.add(pt, 3);
  SymbolVector alpha2 = alpha + ones, beta2 = beta + ones;
  CHECK(alpha2 - beta2 == v);
  CHECK(alpha2.acted(GroupWord::sigma()) == alpha2);
  CHECK(beta2.acted(GroupWord::tau()) == beta2);
}

TEST_CASE("presentation cache round trips and is transparent") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "kamienny-cache-test";
  fs::remove_all(dir);

  PrimePowerLevel level(3, 3);
  bool hit = true;
  HomologyPresentation cold = load_or_build_presentation(level, dir, &hit);
  CHECK_FALSE(hit);
  HomologyPresentation warm = load_or_build_presentation(level, dir, &hit);
  CHECK(hit);
  CHECK(cold.rank() == warm.rank());
  CHECK(cold.pivot_columns() == warm.pivot_columns());

  std::mt19937_64 rng(99);
  auto pts = enumerate_points(level);
  for (int trial = 0; trial < 10; ++trial) {
    SymbolVector v(level);
    for (int j = 0; j < 6; ++j)
      v.add(pts[static_cast<size_t>(oracles::uniform(rng, 0, static_cast<i64>(pts.size()) - 1))],
            mpz_class(gmp_cast(oracles::uniform(rng, -5, 5))));
    CHECK(cold.reduce(v) == warm.reduce(v));
  }

  // A cache-loaded presentation can still run the membership solver.
  SymbolVector v(level);
  const P1Point x = P1Point::affine(5);
  v.add(x, 1);
  v.add(act_sigma(x, level), 1);
  auto [alpha, beta] = warm.solve_membership(v);
  CHECK(alpha - beta == v);

  auto entries = cache_info(dir);
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].p == 3);
  CHECK(entries[0].n == 3);
  fs::remove_all(dir);
}
