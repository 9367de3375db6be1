#pragma once

#include <gmpxx.h>

#include "kamienny/modarith.hpp"
#include "kamienny/errors.hpp"

namespace kamienny {

/// Triangular bump on Z/qZ supported on {a+1, ..., a+2K} (mod q), rising
/// 1/K, 2/K, ..., 1 and falling back symmetrically; peak value 1 is taken at
/// a+K and a+K+1, total mass K+1. Offsets may wrap around q.
struct Window {
  i64 q = 0;
  i64 a = 0;
  i64 k = 0;

  Window(i64 q_, i64 a_, i64 k_) : q(q_), a(floor_mod(a_, q_)), k(k_) {
    if (k < 1) fail(errc::bad_argument, "window half-width must be >= 1");
    if (2 * k >= q) fail(errc::bad_argument, "window support must be smaller than the modulus");
  }

  i64 support_size() const { return 2 * k; }

  /// Position of x within the support, in [1, 2K], or 0 when outside.
  i64 offset_in_support(i64 x) const {
    i64 j = floor_mod(x - a, q);
    return (j >= 1 && j <= 2 * k) ? j : 0;
  }

  /// Numerator of the value at x over the common denominator K.
  i64 numerator(i64 x) const {
    i64 j = offset_in_support(x);
    if (j == 0) return 0;
    return j <= k ? j : 2 * k + 1 - j;
  }

  mpq_class value(i64 x) const {
    mpq_class r(gmp_cast(numerator(x)), gmp_cast(k));
    r.canonicalize();
    return r;
  }

  double value_d(i64 x) const {
    return static_cast<double>(numerator(x)) / static_cast<double>(k);
  }
};

}  // namespace kamienny
