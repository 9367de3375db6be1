#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "kamienny/modarith.hpp"

namespace kamienny {

using ZMat = std::vector<std::vector<mpz_class>>;

struct HnfResult {
  ZMat h;                      // row echelon over Z, entries above each pivot reduced
  ZMat u;                      // unimodular transform with h = u * input
  std::vector<i64> pivot_cols; // one per nonzero row, strictly increasing
  i64 rank = 0;
};

/// Row-style Hermite form with full reduction above pivots. Column pivot
/// order is left to right; row selection is by minimal |entry| then lowest
/// index, so the output is deterministic.
HnfResult hermite_normal_form(ZMat rows);

/// Nonzero elementary divisors d_1 | d_2 | ... of an integer matrix.
std::vector<mpz_class> elementary_divisors(ZMat m);

struct ModEliminationResult {
  i64 rank = 0;
  // Coefficients (mod m) on the original rows of the first row that reduced
  // to zero, if any; a witness of linear dependence.
  std::optional<std::vector<i64>> dependency;
};

/// Gaussian elimination over F_m on the given rows, in order. The dependency
/// witness, when present, is the first one met in elimination order.
ModEliminationResult eliminate_mod(const std::vector<std::vector<i64>>& rows, i64 m);

/// Express target as an F_m-combination of the given rows, if possible.
std::optional<std::vector<i64>> solve_in_span_mod(const std::vector<std::vector<i64>>& rows,
                                                  const std::vector<i64>& target, i64 m);

}  // namespace kamienny
