#pragma once

#include <complex>
#include <span>
#include <vector>

#include "kamienny/level.hpp"
#include "kamienny/window.hpp"

// Data-parallel inner loops of the analytic module. Each kernel computes its
// per-index terms into a buffer (parallelized over indices) and combines them
// with a serial pairwise tree reduction, so results are identical for
// Exec::serial and Exec::parallel. The *_ref functions are plain serial
// implementations kept as references for tests and the benchmark.
namespace kamienny::kernels {

enum class Exec { serial, parallel };

/// e(2*pi*i*j/q) for j = 0..q-1.
std::vector<std::complex<double>> unit_roots(i64 q);

/// Deterministic pairwise tree sum.
double pairwise_sum(std::span<const double> terms);
std::complex<double> pairwise_sum(std::span<const std::complex<double>> terms);

/// Units r mod q (p not dividing r), ascending.
std::vector<i64> unit_list(const PrimePowerLevel& level);

/// Kloosterman sum S(-h, -h'; q) = sum over units r of e((-h r - h' rbar)/q)
/// with rbar = -1/r mod q.
std::complex<double> kloosterman_sum(i64 h, i64 hp, const PrimePowerLevel& level,
                                     Exec exec = Exec::parallel);
std::complex<double> kloosterman_sum_ref(i64 h, i64 hp, const PrimePowerLevel& level);

struct SalieSweepResult {
  double worst_ratio = 0.0;  // max over pairs of |S| / (2*sqrt(2)*sqrt(gcd(h,h',q)*q))
  i64 h = 0, hp = 0;
  double s_abs = 0.0;
  double bound = 0.0;
};

/// Scan all pairs (h, h') with h, h' != 0 mod q.
SalieSweepResult salie_sweep(const PrimePowerLevel& level, Exec exec = Exec::parallel);
SalieSweepResult salie_sweep_ref(const PrimePowerLevel& level);

/// DFT of the window: out[h] = sum_m psi(m) e(h m / q), h = 0..q-1.
std::vector<std::complex<double>> window_dft(const Window& w, Exec exec = Exec::parallel);
std::vector<std::complex<double>> window_dft_ref(const Window& w);

/// The off-diagonal frequency block
///   (1/q^2) sum_{h != 0} sum_{h' != 0} dftA[h] dftB[h'] S(-h, -h'; q),
/// evaluated by exchanging the finite sums:
///   (1/q^2) sum_{r unit} F_A(r) F_B(rbar),  F(x) = sum_{h != 0} dft[h] e(-h x / q).
double lambda_offdiagonal(const PrimePowerLevel& level, const Window& a, const Window& b,
                          Exec exec = Exec::parallel);
double lambda_offdiagonal_ref(const PrimePowerLevel& level, const Window& a, const Window& b);

}  // namespace kamienny::kernels
