#include "oracles.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace oracles {

using namespace kamienny;

CurveData curve_data(i64 p, int n) {
  CurveData d;
  i64 q = 1;
  for (int i = 0; i < n; ++i) q *= p;
  d.index = q + q / p;

  if (p == 2) {
    d.nu2 = (n == 1) ? 1 : 0;
  } else {
    d.nu2 = (p % 4 == 1) ? 2 : 0;
  }
  if (p == 3) {
    d.nu3 = (n == 1) ? 1 : 0;
  } else {
    d.nu3 = (p % 3 == 1) ? 2 : 0;
  }

  // cusps = sum over 0 <= k <= n of phi(p^{min(k, n-k)})
  auto phi_pk = [&](int k) {
    if (k == 0) return i64(1);
    i64 v = 1;
    for (int i = 0; i < k - 1; ++i) v *= p;
    return v * (p - 1);
  };
  for (int k = 0; k <= n; ++k) d.cusps += phi_pk(std::min(k, n - k));

  // 12 g = 12 + index - 3 nu2 - 4 nu3 - 6 cusps
  const i64 twelve_g = 12 + d.index - 3 * d.nu2 - 4 * d.nu3 - 6 * d.cusps;
  d.genus = twelve_g / 12;
  return d;
}

i64 p1_count_bruteforce(const PrimePowerLevel& level) {
  const i64 q = level.q, p = level.p;
  std::set<std::pair<i64, i64>> canon;
  for (i64 w = 0; w < q; ++w) {
    for (i64 t = 0; t < q; ++t) {
      if (w % p == 0 && t % p == 0) continue;
      // Normalize by the smallest unit multiple (lexicographic minimum).
      std::pair<i64, i64> best{q, q};
      for (i64 u = 1; u < q; ++u) {
        if (u % p == 0) continue;
        std::pair<i64, i64> cand{mul_mod(u, w, q), mul_mod(u, t, q)};
        if (cand < best) best = cand;
      }
      canon.insert(best);
    }
  }
  return static_cast<i64>(canon.size());
}

bool same_point_bruteforce(i64 w1, i64 t1, i64 w2, i64 t2, const PrimePowerLevel& level) {
  const i64 q = level.q, p = level.p;
  w1 = floor_mod(w1, q);
  t1 = floor_mod(t1, q);
  w2 = floor_mod(w2, q);
  t2 = floor_mod(t2, q);
  for (i64 u = 1; u < q; ++u) {
    if (u % p == 0) continue;
    if (mul_mod(u, w1, q) == w2 && mul_mod(u, t1, q) == t2) return true;
  }
  return false;
}

std::vector<std::array<i64, 4>> hecke_matrices_bruteforce(i64 r) {
  std::vector<std::array<i64, 4>> out;
  for (i64 u = 1; u <= r; ++u)
    for (i64 v = 0; v < u; ++v)
      for (i64 t = 1; t <= r; ++t)
        for (i64 w = 0; w < t; ++w)
          if (u * t - v * w == r) out.push_back({u, v, w, t});
  return out;
}

std::map<P1Point, i64> weighted_image_bruteforce(const std::vector<i64>& lambdas,
                                                 const PrimePowerLevel& level) {
  std::map<P1Point, i64> acc;
  for (size_t i = 0; i < lambdas.size(); ++i) {
    const i64 det = static_cast<i64>(i) + 1;
    for (const auto& m : hecke_matrices_bruteforce(det)) {
      const i64 w = m[2], t = m[3];
      if (w % level.p == 0 && t % level.p == 0) continue;
      acc[canonicalize(w, t, level)] += lambdas[i];
    }
  }
  std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
  return acc;
}

std::set<P1Point> sigma_r_bruteforce(i64 r, const PrimePowerLevel& level) {
  std::set<P1Point> out;
  for (i64 k = 1; k <= r; ++k) {
    for (const auto& m : hecke_matrices_bruteforce(k)) {
      const i64 w = m[2], t = m[3];
      if (w % level.p == 0 && t % level.p == 0) continue;
      out.insert(canonicalize(w, t, level));
    }
  }
  out.erase(canonicalize(1, r, level));
  return out;
}

double lambda_bruteforce(const PrimePowerLevel& level, const Window& a, const Window& b) {
  const i64 q = level.q;
  double total = 0.0;
  for (i64 r = 0; r < q; ++r) {
    if (r % level.p == 0) continue;
    const i64 rbar = floor_mod(-inv_mod(r, q), q);
    total += a.value_d(r) * b.value_d(rbar);
  }
  return total;
}

double lambda_offdiagonal_bruteforce(const PrimePowerLevel& level, const Window& a,
                                     const Window& b) {
  const i64 q = level.q;
  const double tau = 2.0 * std::numbers::pi / static_cast<double>(q);
  auto dft = [&](const Window& w, i64 h) {
    std::complex<double> s = 0.0;
    for (i64 m = 0; m < q; ++m) {
      const double v = w.value_d(m);
      if (v != 0.0) s += v * std::polar(1.0, tau * static_cast<double>(floor_mod(h * m, q)));
    }
    return s;
  };
  auto kloos = [&](i64 h, i64 hp) {
    std::complex<double> s = 0.0;
    for (i64 r = 0; r < q; ++r) {
      if (r % level.p == 0) continue;
      const i64 rbar = floor_mod(-inv_mod(r, q), q);
      s += std::polar(1.0, -tau * static_cast<double>(floor_mod(h * r + hp * rbar, q)));
    }
    return s;
  };
  std::complex<double> total = 0.0;
  for (i64 h = 1; h < q; ++h)
    for (i64 hp = 1; hp < q; ++hp) total += dft(a, h) * dft(b, hp) * kloos(h, hp);
  return total.real() / (static_cast<double>(q) * static_cast<double>(q));
}

std::optional<std::pair<i64, i64>> meeting_bruteforce(i64 a_start, i64 a_len, i64 b_start,
                                                      i64 b_len, const PrimePowerLevel& level) {
  const i64 q = level.q;
  for (i64 i = 0; i < a_len; ++i) {
    const i64 y = floor_mod(a_start + i, q);
    for (i64 j = 0; j < b_len; ++j) {
      const i64 z = floor_mod(b_start + j, q);
      if (floor_mod(mul_mod(y, z, q) + 1, q) == 0) return std::make_pair(y, z);
    }
  }
  return std::nullopt;
}

}  // namespace oracles
