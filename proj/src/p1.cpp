#include "kamienny/p1.hpp"

namespace kamienny {

P1Point P1Point::parse(const std::string& s) {
  if (s.size() < 3 || s[1] != ':' || (s[0] != 'A' && s[0] != 'I'))
    fail(errc::bad_argument, "malformed point string '" + s + "'");
  i64 v = std::stoll(s.substr(2));
  return s[0] == 'A' ? affine(v) : infinity_like(v);
}

P1Point canonicalize(i64 w, i64 t, const PrimePowerLevel& level) {
  const i64 q = level.q, p = level.p;
  w = floor_mod(w, q);
  t = floor_mod(t, q);
  if (w % p == 0 && t % p == 0)
    fail(errc::not_a_point, "gcd(w, t, p) > 1 for (" + std::to_string(w) + ", " +
                                std::to_string(t) + ") mod " + std::to_string(q));
  if (t % p != 0) {
    // t invertible: scale to (w/t, 1).
    return P1Point::affine(mul_mod(w, inv_mod(t, q), q));
  }
  // p | t forces w invertible: scale to (1, t/w); the second coordinate is
  // then a multiple of p, and k = (t/w)/p identifies the point.
  i64 s = mul_mod(t, inv_mod(w, q), q);
  return P1Point::infinity_like(s / p);
}

RawPair expand(const P1Point& x, const PrimePowerLevel& level) {
  if (x.kind == PointKind::affine) return {x.v, 1};
  return {1, level.p * x.v};
}

namespace {

inline RawPair letter_step(RawPair r, Letter l, i64 q) {
  // sigma: (w, t) -> (-t, w);  tau: (w, t) -> (t, -(w+t)).
  if (l == Letter::sigma) return {floor_mod(-r.t, q), r.w};
  return {r.t, floor_mod(-(r.w + r.t), q)};
}

}  // namespace

P1Point act(const P1Point& x, const GroupWord& word, const PrimePowerLevel& level) {
  RawPair r = expand(x, level);
  for (Letter l : word.letters) r = letter_step(r, l, level.q);
  return canonicalize(r.w, r.t, level);
}

P1Point act_sigma(const P1Point& x, const PrimePowerLevel& level) {
  RawPair r = expand(x, level);
  r = letter_step(r, Letter::sigma, level.q);
  return canonicalize(r.w, r.t, level);
}

P1Point act_tau(const P1Point& x, const PrimePowerLevel& level) {
  RawPair r = expand(x, level);
  r = letter_step(r, Letter::tau, level.q);
  return canonicalize(r.w, r.t, level);
}

std::vector<P1Point> enumerate_points(const PrimePowerLevel& level) {
  std::vector<P1Point> pts;
  pts.reserve(static_cast<size_t>(level.point_count()));
  for (i64 c = 0; c < level.q; ++c) pts.push_back(P1Point::affine(c));
  for (i64 k = 0; k < level.q_over_p(); ++k) pts.push_back(P1Point::infinity_like(k));
  return pts;
}

i64 point_index(const P1Point& x, const PrimePowerLevel& level) {
  return x.kind == PointKind::affine ? x.v : level.q + x.v;
}

P1Point point_at(i64 index, const PrimePowerLevel& level) {
  if (index < 0 || index >= level.point_count()) fail(errc::bad_argument, "point index out of range");
  return index < level.q ? P1Point::affine(index) : P1Point::infinity_like(index - level.q);
}

}  // namespace kamienny
