#pragma once

#include <string>

#include "kamienny/modarith.hpp"

namespace kamienny {

/// A prime-power modulus q = p^n. Immutable once constructed.
struct PrimePowerLevel {
  static constexpr i64 default_modulus_cap = i64(1) << 48;

  i64 p = 0;
  int n = 0;
  i64 q = 0;  // p^n

  PrimePowerLevel(i64 p_, int n_, i64 cap = default_modulus_cap) : p(p_), n(n_) {
    if (!is_prime(p)) fail(errc::bad_argument, "p = " + std::to_string(p) + " is not prime");
    if (n < 1) fail(errc::bad_argument, "n must be >= 1");
    q = checked_pow(p, n, cap);
  }

  /// Detect (p, n) from a prime-power modulus.
  static PrimePowerLevel from_modulus(i64 q, i64 cap = default_modulus_cap);

  i64 q_over_p() const { return q / p; }          // p^{n-1}
  i64 point_count() const { return q + q / p; }    // |P^1(Z/qZ)|
  i64 totient() const { return q - q / p; }

  bool operator==(const PrimePowerLevel&) const = default;
};

inline PrimePowerLevel PrimePowerLevel::from_modulus(i64 q, i64 cap) {
  if (q < 2) fail(errc::bad_argument, "modulus must be >= 2");
  for (i64 p = 2; p * p <= q; ++p) {
    if (q % p == 0) {
      i64 m = q;
      int n = 0;
      while (m % p == 0) {
        m /= p;
        ++n;
      }
      if (m != 1) fail(errc::bad_argument, std::to_string(q) + " is not a prime power");
      return PrimePowerLevel(p, n, cap);
    }
  }
  return PrimePowerLevel(q, 1, cap);  // q itself prime
}

}  // namespace kamienny
