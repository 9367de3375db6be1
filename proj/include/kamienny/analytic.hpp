#pragma once

#include <complex>
#include <optional>
#include <utility>

#include "kamienny/kernels.hpp"
#include "kamienny/window.hpp"

namespace kamienny {

/// Window value at x, exact.
inline mpq_class psi_eval(const Window& w, i64 x) { return w.value(x); }

/// Correlation Lambda = sum over units r of psi_A(r) * psi_B(-1/r mod q),
/// in exact rational arithmetic.
mpq_class lambda_exact(const PrimePowerLevel& level, const Window& a, const Window& b);

/// S(-h, -h'; q); see kernels.hpp.
std::complex<double> kloosterman(i64 h, i64 hp, const PrimePowerLevel& level);

/// |sum_m psi(m) e(h m / q)|, by direct summation (any h).
double theta_direct(const Window& w, i64 h);

/// Closed form (1/K) |sin(pi h K / q) sin(pi h (K+1) / q)| / sin^2(pi h / q).
/// Throws errc::degenerate_h when h = 0 mod q; the limit value there is K+1.
double theta_closed(const Window& w, i64 h);

/// Majorant (1/K) (pi / (pi h / q + 1/(K+1)))^2, valid for 0 <= h <= q/2;
/// decreasing in h and always >= theta_direct.
double theta_bound(i64 h, i64 k, i64 q);

/// alpha = -sum_m psi(m) + p * sum_{p | m} psi(m), exact, with the bound
/// p(2 + p/K) - 1 it satisfies once K >= p. Throws errc::hypothesis_unmet
/// when K < p.
struct AlphaTerm {
  mpq_class exact;
  mpq_class bound;
};
AlphaTerm alpha_term(const PrimePowerLevel& level, const Window& a);

struct LambdaDecomposition {
  // Frequency blocks (h, h') of Lambda: (0,0), (!=0, 0), (0, !=0), (!=0, !=0).
  // The first three reduce to exact rationals; the last is numeric.
  mpq_class lambda00;
  mpq_class lambda0_row;
  mpq_class lambda0_col;
  double lambda_s = 0.0;
  mpq_class exact;    // lambda_exact, the direct sum over units
  double residual = 0.0;  // |exact - (lambda00 + lambda0_row + lambda0_col + lambda_s)|

  bool k_hypothesis = false;   // K >= p and K' >= p; row/col bounds asserted only then
  bool k5_hypothesis = false;  // K, K' >= 5; off-diagonal bound asserted only then

  bool lambda00_formula_ok = false;   // lambda00 == (1 - 1/p)(K+1)(K'+1)/q
  bool lambda0_row_bound_ok = false;  // lambda0_row >= -3(K'+1)/q
  bool lambda0_col_bound_ok = false;  // lambda0_col >= -3(K+1)/q
  bool lambda_s_bound_ok = false;     // |lambda_s| <= 64 pi^2 / (2 sqrt2 - 1) sqrt(q)
  bool chain_ok = false;  // exact >= (1/2q)[(K-5)(K'-5) - 36] - 64 pi^2/(2 sqrt2 - 1) sqrt(q)
};

LambdaDecomposition lambda_decompose(const PrimePowerLevel& level, const Window& a,
                                     const Window& b,
                                     kernels::Exec exec = kernels::Exec::parallel);

/// Residue interval {start, start+1, ..., start+length-1} mod q.
struct ResidueInterval {
  i64 start = 0;
  i64 length = 0;
};

struct IntervalMeetingReport {
  i64 size_a = 0, size_b = 0;
  i64 k = 0, kp = 0;             // window half-widths after the parity trim
  bool trimmed_a = false, trimmed_b = false;
  bool size_hypothesis = false;      // |A|, |B| >= max(11, 2p+1)
  bool product_hypothesis = false;   // (|A|-11)(|B|-11) > 144 + (C/8) q^{3/2}
  double threshold = 0.0;            // 144 + (C/8) q^{3/2}
  double product = 0.0;              // (|A|-11)(|B|-11)
  bool vacuous = false;              // threshold out of reach even for maximal intervals
  bool witness_exists = false;
  std::optional<std::pair<i64, i64>> witness;  // y in A, z in B, y z = -1 mod q
  double positivity_lhs = 0.0;  // (K-5)(K'-5)
  double positivity_rhs = 0.0;  // 36 + 128 pi^2/(2 sqrt2 - 1) q^{3/2}
  bool positivity_criterion = false;
};

/// Evaluates both hypotheses for the given intervals, searches exhaustively
/// for a witness of y z = -1 regardless, and reports the positivity margin.
/// When the hypotheses hold, a witness must exist; this is checked.
IntervalMeetingReport verify_interval_meeting(const PrimePowerLevel& level, ResidueInterval a, ResidueInterval b);

}  // namespace kamienny
