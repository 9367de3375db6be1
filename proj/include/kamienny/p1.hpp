#pragma once

#include <compare>
#include <string>
#include <vector>

#include "kamienny/level.hpp"

namespace kamienny {

// P^1(Z/p^nZ) in canonical coordinates. A point is a pair (w, t) with
// gcd(w, t, p) = 1, up to multiplication by a unit. Canonical representatives:
//   affine        (c, 1),     c in [0, q)          -- t invertible
//   infinity-like (1, p*k),   k in [0, p^{n-1})    -- p | t
enum class PointKind { affine, infinity_like };

struct P1Point {
  PointKind kind = PointKind::affine;
  i64 v = 0;  // c for affine, k for infinity-like

  static P1Point affine(i64 c) { return {PointKind::affine, c}; }
  static P1Point infinity_like(i64 k) { return {PointKind::infinity_like, k}; }

  bool operator==(const P1Point&) const = default;
  auto operator<=>(const P1Point&) const = default;

  std::string str() const {
    return (kind == PointKind::affine ? "A:" : "I:") + std::to_string(v);
  }
  static P1Point parse(const std::string& s);
};

struct RawPair {
  i64 w = 0, t = 0;
};

/// Canonical representative of (w, t). Throws errc::not_a_point when
/// gcd(w, t, p) > 1.
P1Point canonicalize(i64 w, i64 t, const PrimePowerLevel& level);

/// A pair (w, t) mapping back to x; affine -> (c, 1), infinity-like -> (1, p*k).
RawPair expand(const P1Point& x, const PrimePowerLevel& level);

// Words in the generators sigma (order 2) and tau (order 3) of the projective
// action; evaluation is the right action letter by letter.
enum class Letter { sigma, tau };

struct GroupWord {
  std::vector<Letter> letters;

  static GroupWord sigma() { return {{Letter::sigma}}; }
  static GroupWord tau() { return {{Letter::tau}}; }
  static GroupWord tau_sigma() { return {{Letter::tau, Letter::sigma}}; }       // +1 on affine
  static GroupWord sigma_tau2() {                                               // -1 on affine
    return {{Letter::sigma, Letter::tau, Letter::tau}};
  }
  GroupWord operator*(const GroupWord& rhs) const {
    GroupWord w = *this;
    w.letters.insert(w.letters.end(), rhs.letters.begin(), rhs.letters.end());
    return w;
  }
};

P1Point act(const P1Point& x, const GroupWord& word, const PrimePowerLevel& level);
P1Point act_sigma(const P1Point& x, const PrimePowerLevel& level);
P1Point act_tau(const P1Point& x, const PrimePowerLevel& level);

/// All points: affine by ascending c, then infinity-like by ascending k.
std::vector<P1Point> enumerate_points(const PrimePowerLevel& level);

/// Position of x in enumerate_points order (affine c -> c, infinity-like k -> q + k).
i64 point_index(const P1Point& x, const PrimePowerLevel& level);
P1Point point_at(i64 index, const PrimePowerLevel& level);

}  // namespace kamienny
