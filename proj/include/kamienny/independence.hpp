#pragma once

#include <optional>
#include <vector>

#include "kamienny/hecke.hpp"

namespace kamienny {

enum class IndependenceMode { single_mod, all_mod };

struct IndependenceReport {
  PrimePowerLevel level{2, 1};
  i64 d = 0;
  IndependenceMode mode = IndependenceMode::all_mod;
  bool independent = false;
  bool pigeonhole = false;  // d exceeded the quotient rank; no elimination run

  std::optional<i64> modulus;  // single_mod only
  i64 rank_mod = 0;            // single_mod only

  std::vector<mpz_class> divisors;  // all_mod only (nonzero elementary divisors)

  // When dependent: coefficients lambda (mod witness_modulus) with
  // sum lambda_i * hecke_class(i) = 0 and some lambda_i != 0.
  std::optional<std::vector<i64>> witness;
  std::optional<i64> witness_modulus;
};

/// F_m-rank of the first d images of {0, oo}; dependent when rank < d.
IndependenceReport rank_mod_m(const HomologyPresentation& pres, i64 d, i64 m);

/// Independence over every prime field at once, decided by the elementary
/// divisors of the d x rank coordinate matrix: true iff there are d of them,
/// all equal to 1.
IndependenceReport independent_all_m(const HomologyPresentation& pres, i64 d);

/// Largest d such that the first d images pass the chosen mode (prefix test).
i64 max_independent_d(const HomologyPresentation& pres, IndependenceMode mode,
                      std::optional<i64> m = std::nullopt);

struct CriterionReport {
  i64 degree = 0;      // number-field degree d
  i64 s = 0;           // smallest prime different from p
  i64 tested = 0;      // s * degree images tested
  IndependenceReport result;
  mpz_class threshold;           // level size needed by the independence theorem
  bool level_clears_threshold = false;  // informational; false at desk scale
};

CriterionReport criterion_verdict(const HomologyPresentation& pres, i64 degree,
                                  IndependenceMode mode, std::optional<i64> m = std::nullopt);

}  // namespace kamienny
