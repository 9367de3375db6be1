#include <cmath>
#include <numbers>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "kamienny/kernels.hpp"

// Production kernels. Per-index terms are computed into buffers (the part
// OpenMP parallelizes) and combined with the serial pairwise reduction from
// kernels.hpp, so Exec::serial and Exec::parallel give identical results.
namespace kamienny::kernels {

namespace {

inline bool go_parallel(Exec exec, i64 work) {
  (void)work;
#ifdef _OPENMP
  return exec == Exec::parallel && work >= 1024;
#else
  (void)exec;
  return false;
#endif
}

}  // namespace

std::complex<double> kloosterman_sum(i64 h, i64 hp, const PrimePowerLevel& level, Exec exec) {
  const i64 q = level.q;
  const auto roots = unit_roots(q);
  const auto units = unit_list(level);
  const i64 hm = floor_mod(h, q), hpm = floor_mod(hp, q);

  std::vector<std::complex<double>> terms(units.size());
  const bool par = go_parallel(exec, static_cast<i64>(units.size()));
#pragma omp parallel for schedule(static) if (par)
  for (size_t i = 0; i < units.size(); ++i) {
    const i64 r = units[i];
    const i64 rbar = floor_mod(-inv_mod(r, q), q);
    const i64 e = floor_mod(-mul_mod(hm, r, q) - mul_mod(hpm, rbar, q), q);
    terms[i] = roots[static_cast<size_t>(e)];
  }
  return pairwise_sum(std::span<const std::complex<double>>(terms));
}

SalieSweepResult salie_sweep(const PrimePowerLevel& level, Exec exec) {
  const i64 q = level.q;
  const auto roots = unit_roots(q);
  const auto units = unit_list(level);
  std::vector<i64> rbar(units.size());
  for (size_t i = 0; i < units.size(); ++i) rbar[i] = floor_mod(-inv_mod(units[i], q), q);

  const double c = 2.0 * std::sqrt(2.0);
  std::vector<SalieSweepResult> row_best(static_cast<size_t>(q - 1));

  const bool par = go_parallel(exec, (q - 1) * static_cast<i64>(units.size()));
#pragma omp parallel for schedule(dynamic, 1) if (par)
  for (i64 h = 1; h < q; ++h) {
    SalieSweepResult best;
    std::vector<std::complex<double>> terms(units.size());
    for (i64 hp = 1; hp < q; ++hp) {
      for (size_t i = 0; i < units.size(); ++i)
        terms[i] = roots[static_cast<size_t>(
            floor_mod(-mul_mod(h, units[i], q) - mul_mod(hp, rbar[i], q), q))];
      const std::complex<double> s = pairwise_sum(std::span<const std::complex<double>>(terms));
      const double g = static_cast<double>(gcd_i64(gcd_i64(h, hp), q));
      const double bound = c * std::sqrt(g * static_cast<double>(q));
      const double ratio = std::abs(s) / bound;
      if (ratio > best.worst_ratio) best = {ratio, h, hp, std::abs(s), bound};
    }
    row_best[static_cast<size_t>(h - 1)] = best;
  }

  // Deterministic combine: smallest (h, hp) wins ties.
  SalieSweepResult best;
  for (const auto& b : row_best)
    if (b.worst_ratio > best.worst_ratio) best = b;
  return best;
}

std::vector<std::complex<double>> window_dft(const Window& w, Exec exec) {
  const i64 q = w.q;
  const auto roots = unit_roots(q);
  std::vector<std::complex<double>> out(static_cast<size_t>(q));

  // Precompute support residues and values once.
  const i64 width = 2 * w.k;
  std::vector<i64> mres(static_cast<size_t>(width));
  std::vector<double> val(static_cast<size_t>(width));
  for (i64 j = 1; j <= width; ++j) {
    mres[static_cast<size_t>(j - 1)] = floor_mod(w.a + j, q);
    val[static_cast<size_t>(j - 1)] = w.value_d(mres[static_cast<size_t>(j - 1)]);
  }

  const bool par = go_parallel(exec, q * width);
#pragma omp parallel for schedule(static) if (par)
  for (i64 h = 0; h < q; ++h) {
    std::vector<std::complex<double>> terms(static_cast<size_t>(width));
    for (i64 j = 0; j < width; ++j)
      terms[static_cast<size_t>(j)] =
          val[static_cast<size_t>(j)] *
          roots[static_cast<size_t>(mul_mod(h, mres[static_cast<size_t>(j)], q))];
    out[static_cast<size_t>(h)] = pairwise_sum(std::span<const std::complex<double>>(terms));
  }
  return out;
}

double lambda_offdiagonal(const PrimePowerLevel& level, const Window& a, const Window& b,
                          Exec exec) {
  const i64 q = level.q;
  const auto dft_a = window_dft(a, exec);
  const auto dft_b = window_dft(b, exec);
  const auto roots = unit_roots(q);
  const auto units = unit_list(level);

  // F(x) = sum_{h != 0} dft[h] e(-h x / q), needed at every unit x.
  auto f_table = [&](const std::vector<std::complex<double>>& dft) {
    std::vector<std::complex<double>> f(static_cast<size_t>(q));
    const bool par = go_parallel(exec, static_cast<i64>(units.size()) * q);
#pragma omp parallel for schedule(static) if (par)
    for (size_t xi = 0; xi < units.size(); ++xi) {
      const i64 x = units[xi];
      std::vector<std::complex<double>> terms(static_cast<size_t>(q - 1));
      for (i64 h = 1; h < q; ++h)
        terms[static_cast<size_t>(h - 1)] =
            dft[static_cast<size_t>(h)] * roots[static_cast<size_t>(floor_mod(-mul_mod(h, x, q), q))];
      f[static_cast<size_t>(x)] = pairwise_sum(std::span<const std::complex<double>>(terms));
    }
    return f;
  };
  const auto f_a = f_table(dft_a);
  const auto f_b = f_table(dft_b);

  std::vector<double> terms(units.size());
  const bool par = go_parallel(exec, static_cast<i64>(units.size()));
#pragma omp parallel for schedule(static) if (par)
  for (size_t i = 0; i < units.size(); ++i) {
    const i64 r = units[i];
    const i64 rbar = floor_mod(-inv_mod(r, q), q);
    terms[i] = (f_a[static_cast<size_t>(r)] * f_b[static_cast<size_t>(rbar)]).real();
  }
  const double total = pairwise_sum(std::span<const double>(terms));
  return total / (static_cast<double>(q) * static_cast<double>(q));
}

}  // namespace kamienny::kernels
