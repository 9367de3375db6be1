#include <cmath>
#include <numbers>

#include "kamienny/kernels.hpp"

// Plain serial reference implementations: straightforward loops, accumulation
// in source order, no tables shared with the production kernels beyond the
// root table itself. Kept for tests and the benchmark.
namespace kamienny::kernels {

std::vector<std::complex<double>> unit_roots(i64 q) {
  std::vector<std::complex<double>> roots(static_cast<size_t>(q));
  const double two_pi_over_q = 2.0 * std::numbers::pi / static_cast<double>(q);
  for (i64 j = 0; j < q; ++j)
    roots[static_cast<size_t>(j)] = std::polar(1.0, two_pi_over_q * static_cast<double>(j));
  return roots;
}

std::vector<i64> unit_list(const PrimePowerLevel& level) {
  std::vector<i64> units;
  units.reserve(static_cast<size_t>(level.totient()));
  for (i64 r = 1; r < level.q; ++r)
    if (r % level.p != 0) units.push_back(r);
  return units;
}

double pairwise_sum(std::span<const double> terms) {
  if (terms.size() <= 8) {
    double s = 0.0;
    for (double t : terms) s += t;
    return s;
  }
  const size_t half = terms.size() / 2;
  return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
}

std::complex<double> pairwise_sum(std::span<const std::complex<double>> terms) {
  if (terms.size() <= 8) {
    std::complex<double> s = 0.0;
    for (const auto& t : terms) s += t;
    return s;
  }
  const size_t half = terms.size() / 2;
  return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
}

std::complex<double> kloosterman_sum_ref(i64 h, i64 hp, const PrimePowerLevel& level) {
  const i64 q = level.q;
  const double two_pi_over_q = 2.0 * std::numbers::pi / static_cast<double>(q);
  std::complex<double> s = 0.0;
  for (i64 r = 1; r < q; ++r) {
    if (r % level.p == 0) continue;
    const i64 rbar = floor_mod(-inv_mod(r, q), q);
    const i64 e = floor_mod(-mul_mod(floor_mod(h, q), r, q) - mul_mod(floor_mod(hp, q), rbar, q), q);
    s += std::polar(1.0, two_pi_over_q * static_cast<double>(e));
  }
  return s;
}

SalieSweepResult salie_sweep_ref(const PrimePowerLevel& level) {
  const i64 q = level.q;
  const auto roots = unit_roots(q);
  const auto units = unit_list(level);
  std::vector<i64> rbar(units.size());
  for (size_t i = 0; i < units.size(); ++i) rbar[i] = floor_mod(-inv_mod(units[i], q), q);

  SalieSweepResult best;
  const double c = 2.0 * std::sqrt(2.0);
  for (i64 h = 1; h < q; ++h) {
    for (i64 hp = 1; hp < q; ++hp) {
      std::complex<double> s = 0.0;
      for (size_t i = 0; i < units.size(); ++i)
        s += roots[static_cast<size_t>(
            floor_mod(-mul_mod(h, units[i], q) - mul_mod(hp, rbar[i], q), q))];
      const double g = static_cast<double>(gcd_i64(gcd_i64(h, hp), q));
      const double bound = c * std::sqrt(g * static_cast<double>(q));
      const double ratio = std::abs(s) / bound;
      if (ratio > best.worst_ratio) {
        best = {ratio, h, hp, std::abs(s), bound};
      }
    }
  }
  return best;
}

std::vector<std::complex<double>> window_dft_ref(const Window& w) {
  const i64 q = w.q;
  std::vector<std::complex<double>> out(static_cast<size_t>(q));
  const double two_pi_over_q = 2.0 * std::numbers::pi / static_cast<double>(q);
  for (i64 h = 0; h < q; ++h) {
    std::complex<double> s = 0.0;
    for (i64 j = 1; j <= 2 * w.k; ++j) {
      const i64 mres = floor_mod(w.a + j, q);
      s += w.value_d(mres) *
           std::polar(1.0, two_pi_over_q * static_cast<double>(mul_mod(floor_mod(h, q), mres, q)));
    }
    out[static_cast<size_t>(h)] = s;
  }
  return out;
}

double lambda_offdiagonal_ref(const PrimePowerLevel& level, const Window& a, const Window& b) {
  const i64 q = level.q;
  const auto dft_a = window_dft_ref(a);
  const auto dft_b = window_dft_ref(b);
  const auto roots = unit_roots(q);
  const auto units = unit_list(level);

  auto f_at = [&](const std::vector<std::complex<double>>& dft, i64 x) {
    std::complex<double> s = 0.0;
    for (i64 h = 1; h < q; ++h)
      s += dft[static_cast<size_t>(h)] * roots[static_cast<size_t>(floor_mod(-mul_mod(h, x, q), q))];
    return s;
  };

  std::complex<double> total = 0.0;
  for (i64 r : units) {
    const i64 rbar = floor_mod(-inv_mod(r, q), q);
    total += f_at(dft_a, r) * f_at(dft_b, rbar);
  }
  return total.real() / (static_cast<double>(q) * static_cast<double>(q));
}

}  // namespace kamienny::kernels
