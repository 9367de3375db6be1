#pragma once

#include <cstdint>

#include "kamienny/errors.hpp"

namespace kamienny {

using i64 = long long;
using u64 = unsigned long long;
using i128 = __int128;

// gmpxx has no long long overloads; on this platform long carries 64 bits.
inline long gmp_cast(i64 v) { return static_cast<long>(v); }

/// Least nonnegative representative of a mod m (m > 0).
inline i64 floor_mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

/// a*b mod m for 0 <= a, b < m < 2^62.
inline i64 mul_mod(i64 a, i64 b, i64 m) {
  return static_cast<i64>(static_cast<i128>(a) * b % m);
}

inline i64 pow_mod(i64 a, u64 e, i64 m) {
  i64 r = 1 % m;
  a = floor_mod(a, m);
  while (e) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

inline i64 gcd_i64(i64 a, i64 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Inverse of a mod m via extended gcd. Throws if gcd(a, m) != 1.
inline i64 inv_mod(i64 a, i64 m) {
  a = floor_mod(a, m);
  i64 g = m, x = 0, x1 = 1, a1 = a;
  while (a1) {
    i64 q = g / a1;
    g -= q * a1;
    std::swap(g, a1);
    x -= q * x1;
    std::swap(x, x1);
  }
  if (g != 1) fail(errc::bad_argument, "element not invertible modulo m");
  return floor_mod(x, m);
}

/// Deterministic Miller-Rabin, valid for all n < 3.3e24.
inline bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  i64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (i64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    i64 x = pow_mod(a, static_cast<u64>(d), n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

/// p^n computed exactly; throws errc::overflow beyond cap.
inline i64 checked_pow(i64 p, int n, i64 cap) {
  i64 q = 1;
  for (int i = 0; i < n; ++i) {
    if (q > cap / p) fail(errc::overflow, "modulus exceeds configured cap");
    q *= p;
  }
  return q;
}

}  // namespace kamienny
