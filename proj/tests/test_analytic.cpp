#include <doctest.h>

#include <cmath>
#include <random>

#include "kamienny/analytic.hpp"
#include "oracles.hpp"

using namespace kamienny;

TEST_CASE("window values") {
  Window w(81, 10, 6);
  CHECK(w.value(10) == 0);
  CHECK(w.value(11) == mpq_class(1, 6));
  CHECK(w.value(10 + 6) == 1);      // peak at a + K
  CHECK(w.value(10 + 7) == 1);      // and at a + K + 1
  CHECK(w.value(10 + 12) == mpq_class(1, 6));
  CHECK(w.value(10 + 13) == 0);

  mpq_class mass = 0;
  for (i64 x = 0; x < 81; ++x) mass += w.value(x);
  CHECK(mass == mpq_class(7));  // K + 1

  SUBCASE("wrapping support") {
    Window ww(81, 78, 5);  // support 79..81+7 wraps through 0
    CHECK(ww.value(79) == mpq_class(1, 5));
    CHECK(ww.value(2) == 1);  // 78 + 5
    mpq_class m2 = 0;
    for (i64 x = 0; x < 81; ++x) m2 += ww.value(x);
    CHECK(m2 == mpq_class(6));
  }
  CHECK_THROWS_AS(Window(9, 0, 5), error);  // 2K >= q
}

TEST_CASE("lambda against the brute-force double loop") {
  std::mt19937_64 rng(5150);
  for (auto [p, n] : {std::pair<i64, int>{3, 4}, {5, 3}, {2, 7}}) {
    PrimePowerLevel level(p, n);
    const i64 q = level.q;
    for (int trial = 0; trial < 8; ++trial) {
      Window a(q, oracles::uniform(rng, 0, q - 1), oracles::uniform(rng, 1, (q - 1) / 2));
      Window b(q, oracles::uniform(rng, 0, q - 1), oracles::uniform(rng, 1, (q - 1) / 2));
      const double ref = oracles::lambda_bruteforce(level, a, b);
      CHECK(lambda_exact(level, a, b).get_d() == doctest::Approx(ref).epsilon(1e-9));
    }
  }
}

TEST_CASE("lambda special cases") {
  PrimePowerLevel level(3, 4);  // q = 81
  SUBCASE("disjoint effective supports give zero") {
    // Units in supp(A) = {1, 2, 4} map to -1/r in {80, 40, 20}, disjoint from
    // supp(B) = {41, ..., 44}.
    Window a(81, 0, 2), b(81, 40, 2);
    CHECK(lambda_exact(level, a, b) == 0);
    CHECK(oracles::lambda_bruteforce(level, a, b) == 0.0);
  }
  SUBCASE("positivity certifies a solution of y z = -1") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 20; ++trial) {
      Window a(81, oracles::uniform(rng, 0, 80), oracles::uniform(rng, 3, 30));
      Window b(81, oracles::uniform(rng, 0, 80), oracles::uniform(rng, 3, 30));
      if (lambda_exact(level, a, b) > 0) {
        bool found = false;
        for (i64 r = 1; r < 81 && !found; ++r) {
          if (r % 3 == 0) continue;
          if (a.numerator(r) != 0 &&
              b.numerator(floor_mod(-inv_mod(r, 81), 81)) != 0)
            found = true;
        }
        CHECK(found);
      }
    }
  }
}

TEST_CASE("kloosterman special values") {
  for (auto [p, n] : {std::pair<i64, int>{3, 2}, {5, 2}, {3, 3}, {11, 2}}) {
    PrimePowerLevel level(p, n);
    const i64 q = level.q;
    const auto s00 = kloosterman(0, 0, level);
    CHECK(s00.real() == doctest::Approx(static_cast<double>(level.totient())).epsilon(1e-12));
    CHECK(std::abs(s00.imag()) < 1e-9);

    const i64 pnm1 = level.q_over_p();
    for (i64 h = 1; h < q; ++h) {
      const auto s = kloosterman(h, 0, level);
      const double expect = (h % pnm1 == 0) ? -static_cast<double>(pnm1) : 0.0;
      CHECK(std::abs(s.real() - expect) < 1e-9);
      CHECK(std::abs(s.imag()) < 1e-9);
    }
  }
}

TEST_CASE("kloosterman magnitude is invariant under h -> q - h") {
  PrimePowerLevel level(5, 2);
  for (i64 h = 1; h < 25; ++h)
    for (i64 hp = 1; hp < 25; ++hp)
      CHECK(std::abs(kloosterman(h, hp, level)) ==
            doctest::Approx(std::abs(kloosterman(25 - h, 25 - hp, level))).epsilon(1e-9));
}

TEST_CASE("theta direct equals the closed form and respects the majorant") {
  SUBCASE("h = 0 gives the window mass") {
    Window w(81, 5, 7);
    CHECK(theta_direct(w, 0) == doctest::Approx(8.0).epsilon(1e-12));
    CHECK_THROWS_AS(theta_closed(w, 0), error);
  }
  SUBCASE("worked example") {
    Window w(9, 0, 2);
    CHECK(theta_direct(w, 1) == doctest::Approx(theta_closed(w, 1)).epsilon(1e-11));
  }
  SUBCASE("symmetry under conjugation") {
    Window w(125, 30, 11);
    for (i64 h = 1; h < 125; ++h)
      CHECK(theta_direct(w, h) == doctest::Approx(theta_direct(w, 125 - h)).epsilon(1e-11));
  }
  SUBCASE("majorant dominates pointwise and decreases") {
    const i64 q = 81, k = 7;
    Window w(q, 13, k);
    double prev = theta_bound(0, k, q);
    CHECK(prev >= theta_direct(w, 0));
    for (i64 h = 1; 2 * h <= q; ++h) {
      const double bound = theta_bound(h, k, q);
      CHECK(theta_direct(w, h) <= bound + 1e-9);
      CHECK(bound <= prev + 1e-12);
      prev = bound;
    }
  }
}

TEST_CASE("alpha term") {
  SUBCASE("bound holds on a random sweep with K >= p") {
    std::mt19937_64 rng(31);
    for (auto [p, n] : {std::pair<i64, int>{5, 3}, {3, 4}, {2, 7}}) {
      PrimePowerLevel level(p, n);
      for (int trial = 0; trial < 30; ++trial) {
        const i64 k = oracles::uniform(rng, p, (level.q - 1) / 2);
        Window a(level.q, oracles::uniform(rng, 0, level.q - 1), k);
        auto [exact, bound] = alpha_term(level, a);
        CHECK(exact <= bound);
      }
    }
  }
  SUBCASE("p = 2 bound specializes") {
    PrimePowerLevel level(2, 7);
    Window a(128, 3, 10);
    auto [exact, bound] = alpha_term(level, a);
    mpq_class expect(2 * (2 * 10 + 2) - 10, 10);  // p(2 + p/K) - 1 over K
    expect.canonicalize();
    CHECK(bound == expect);
    CHECK(exact <= bound);
  }
  SUBCASE("hypothesis gate") {
    PrimePowerLevel level(5, 3);
    Window a(125, 0, 3);
    CHECK_THROWS_AS(alpha_term(level, a), error);
  }
}

TEST_CASE("decomposition blocks against the literal frequency sums") {
  // Small q so the O(q^3) oracle stays cheap.
  for (auto [p, n] : {std::pair<i64, int>{3, 3}, {5, 2}}) {
    PrimePowerLevel level(p, n);
    const i64 q = level.q;
    std::mt19937_64 rng(613 + q);
    for (int trial = 0; trial < 3; ++trial) {
      Window a(q, oracles::uniform(rng, 0, q - 1), oracles::uniform(rng, 2, (q - 1) / 2));
      Window b(q, oracles::uniform(rng, 0, q - 1), oracles::uniform(rng, 2, (q - 1) / 2));
      LambdaDecomposition dec = lambda_decompose(level, a, b);
      const double ref = oracles::lambda_offdiagonal_bruteforce(level, a, b);
      CHECK(dec.lambda_s == doctest::Approx(ref).epsilon(1e-6));
      CHECK(dec.residual <= 1e-6 * std::max(1.0, std::abs(dec.exact.get_d())));
      CHECK(dec.lambda00_formula_ok);
    }
  }
}

TEST_CASE("decomposition returns values under unmet hypotheses") {
  PrimePowerLevel level(5, 3);
  Window a(125, 0, 2), b(125, 40, 2);  // K < p
  LambdaDecomposition dec = lambda_decompose(level, a, b);
  CHECK_FALSE(dec.k_hypothesis);
  // The row block with no multiples of p in the support: alpha = -(K+1).
  // Support of a is {1, 2, 3, 4}: no multiples of 5, so
  // lambda0_row = (K'+1)(K+1)/(p q) = 3*3/625.
  CHECK(dec.lambda0_row == mpq_class(9, 625));
}

TEST_CASE("interval correlation verifier") {
  SUBCASE("full unit range always has the witness (1, q-1)") {
    for (auto [p, n] : {std::pair<i64, int>{3, 2}, {2, 5}, {7, 2}}) {
      PrimePowerLevel level(p, n);
      auto rep = verify_interval_meeting(level, {1, level.q - 1}, {1, level.q - 1});
      CHECK(rep.witness_exists);
      REQUIRE(rep.witness.has_value());
      CHECK(rep.witness->first == 1);
      CHECK(rep.witness->second == level.q - 1);
    }
  }
  SUBCASE("parity trim") {
    PrimePowerLevel level(3, 4);
    auto rep = verify_interval_meeting(level, {5, 13}, {20, 12});
    CHECK(rep.trimmed_a);
    CHECK_FALSE(rep.trimmed_b);
    CHECK(rep.k == 6);
    CHECK(rep.kp == 6);
  }
  SUBCASE("desk-scale levels are vacuous but the search still answers") {
    std::mt19937_64 rng(1001);
    for (auto [p, n] : {std::pair<i64, int>{3, 4}, {5, 3}, {2, 7}}) {
      PrimePowerLevel level(p, n);
      auto any = verify_interval_meeting(level, {1, 12}, {1, 12});
      CHECK(any.vacuous);
      for (int trial = 0; trial < 10; ++trial) {
        const i64 la = oracles::uniform(rng, 1, level.q - 2);
        const i64 lb = oracles::uniform(rng, 1, level.q - 2);
        const i64 sa = oracles::uniform(rng, 0, level.q - 1);
        const i64 sb = oracles::uniform(rng, 0, level.q - 1);
        auto rep = verify_interval_meeting(level, {sa, la}, {sb, lb});
        auto ref = oracles::meeting_bruteforce(sa, la, sb, lb, level);
        CHECK(rep.witness_exists == ref.has_value());
      }
    }
  }
  SUBCASE("a level large enough to satisfy the hypotheses") {
    PrimePowerLevel level(3, 15);  // q = 14348907; (q-12)^2 beats the threshold
    auto rep = verify_interval_meeting(level, {1, level.q - 1}, {1, level.q - 1});
    CHECK(rep.size_hypothesis);
    CHECK(rep.product_hypothesis);
    CHECK_FALSE(rep.vacuous);
    CHECK(rep.witness_exists);
  }
}
