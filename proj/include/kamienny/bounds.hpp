#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "kamienny/level.hpp"

// Explicit constants and effective bounds. All real evaluations use
// arbitrary-precision arithmetic rounded upward, so a reported bound is
// always valid; raising the precision can only tighten it.
namespace kamienny::bounds {

constexpr int default_digits = 50;

/// C = 4096 pi^2 / (2 sqrt(2) - 1), rounded up at the given decimal precision.
std::string constant_c_str(int digits = default_digits);
double constant_c(int digits = default_digits);

/// l = 5 when p = 3, else 3; s = smallest prime different from p.
i64 l_choice(i64 p);
i64 s_choice(i64 p);

/// ceil(C^2 (s(p) d)^6): the level size above which the first s*d images of
/// {0, oo} are independent over every prime field.
mpz_class independence_threshold(i64 p, i64 d, int digits = default_digits);

/// Case-split level bound: ceil(C^2 (l^d + 1) (s d)^6) with l = l_choice(p),
/// s = s_choice(p).
mpz_class torsion_level_bound(i64 p, i64 d, int digits = default_digits);

/// floor((1 + 3^{d/2})^2), exact integer arithmetic.
mpz_class merel_oesterle_prime_bound(i64 d);

/// floor((1 + l^{d/2})^2), exact integer arithmetic.
mpz_class reduction_case_bound(i64 l, i64 d);

/// Product over primes p up to merel_oesterle_prime_bound(d) of
/// torsion_level_bound(p, d)^2. This combination rule (squaring each maximal
/// prime-power part to cover a product of two cyclic groups) is this
/// library's assembly; the underlying per-prime bounds are the real content.
mpz_class global_torsion_bound(i64 d, int digits = default_digits);

struct BoundReport {
  i64 d = 0;
  std::optional<i64> p;
  std::string c;
  mpz_class independence;   // for the given p, or p = 5 representative when absent
  mpz_class level_bound;    // present when p given
  mpz_class merel_oesterle;
  std::vector<i64> primes;  // primes up to the Merel-Oesterle cut
  mpz_class global;
  int digits = default_digits;
};
BoundReport bound_report(i64 d, std::optional<i64> p, int digits = default_digits);

struct CascadeCondition {
  std::string name;
  bool holds = false;
  double lhs = 0.0, rhs = 0.0;
};

struct CascadeReport {
  i64 D = 0;
  // Condition blocks, strongest last; each verdict is conservative (a
  // condition is reported true only when certainly true under upward
  // rounding of the analytic threshold).
  std::vector<CascadeCondition> lemma_block;
  std::vector<CascadeCondition> mid_block;
  std::vector<CascadeCondition> final_block;
  bool lemma_ok = false, mid_ok = false, final_ok = false;
  bool implication_final_to_mid_ok = false;  // final => mid, on this instance
  bool implication_mid_to_lemma_ok = false;  // mid => lemma, on this instance
  std::vector<CascadeCondition> helper_implications;
};

/// Evaluates the precondition cascade at level q = p^n for walk budget D >= 2
/// (errc::d_out_of_range otherwise) and checks the implication chain between
/// the blocks numerically on this instance.
CascadeReport cascade_check(const PrimePowerLevel& level, i64 D, int digits = default_digits);

}  // namespace kamienny::bounds
