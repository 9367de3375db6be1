#include "kamienny/analytic.hpp"

#include <cmath>
#include <numbers>

namespace kamienny {

namespace {

mpq_class ratio(const mpz_class& num, const mpz_class& den) {
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

/// alpha = -sum psi + p * sum_{p | m} psi, defined for every window.
mpq_class alpha_value(const PrimePowerLevel& level, const Window& w) {
  mpz_class num_div = 0;  // sum of numerators over multiples of p in the support
  for (i64 j = 1; j <= 2 * w.k; ++j) {
    const i64 m = floor_mod(w.a + j, level.q);
    if (m % level.p == 0) num_div += gmp_cast(w.numerator(m));
  }
  // -(K+1) + p * (num_div / K)
  return ratio(-mpz_class(gmp_cast(w.k)) * gmp_cast(w.k + 1) + gmp_cast(level.p) * num_div, mpz_class(gmp_cast(w.k)));
}

double offdiag_bound(i64 q) {
  // 64 pi^2 / (2 sqrt 2 - 1) * sqrt(q)
  const double c = 64.0 * std::numbers::pi * std::numbers::pi / (2.0 * std::sqrt(2.0) - 1.0);
  return c * std::sqrt(static_cast<double>(q));
}

}  // namespace

mpq_class lambda_exact(const PrimePowerLevel& level, const Window& a, const Window& b) {
  if (a.q != level.q || b.q != level.q) fail(errc::bad_argument, "window modulus mismatch");
  const i64 q = level.q;
  mpq_class total = 0;
  for (i64 j = 1; j <= 2 * a.k; ++j) {
    const i64 r = floor_mod(a.a + j, q);
    if (r % level.p == 0) continue;  // not a unit
    const i64 na = a.numerator(r);
    const i64 rbar = floor_mod(-inv_mod(r, q), q);
    const i64 nb = b.numerator(rbar);
    if (nb == 0) continue;
    total += ratio(mpz_class(gmp_cast(na)) * gmp_cast(nb), mpz_class(gmp_cast(a.k)) * gmp_cast(b.k));
  }
  return total;
}

std::complex<double> kloosterman(i64 h, i64 hp, const PrimePowerLevel& level) {
  return kernels::kloosterman_sum(h, hp, level);
}

double theta_direct(const Window& w, i64 h) {
  const i64 q = w.q;
  const i64 hm = floor_mod(h, q);
  const long double two_pi_over_q =
      2.0L * std::numbers::pi_v<long double> / static_cast<long double>(q);
  long double re = 0.0L, im = 0.0L;
  for (i64 j = 1; j <= 2 * w.k; ++j) {
    const i64 m = floor_mod(w.a + j, q);
    const long double v =
        static_cast<long double>(w.numerator(m)) / static_cast<long double>(w.k);
    const long double ang = two_pi_over_q * static_cast<long double>(mul_mod(hm, m, q));
    re += v * cosl(ang);
    im += v * sinl(ang);
  }
  return static_cast<double>(sqrtl(re * re + im * im));
}

double theta_closed(const Window& w, i64 h) {
  const i64 q = w.q;
  const i64 hm = floor_mod(h, q);
  if (hm == 0)
    fail(errc::degenerate_h, "closed form undefined at h = 0 mod q; the limit value is K+1");
  const long double pi = std::numbers::pi_v<long double>;
  // sin(pi t / q) has period 2q in t; reduce the products exactly first.
  const i64 t1 = static_cast<i64>(static_cast<i128>(hm) * w.k % (2 * q));
  const i64 t2 = static_cast<i64>(static_cast<i128>(hm) * (w.k + 1) % (2 * q));
  const long double s1 = sinl(pi * static_cast<long double>(t1) / static_cast<long double>(q));
  const long double s2 = sinl(pi * static_cast<long double>(t2) / static_cast<long double>(q));
  const long double s = sinl(pi * static_cast<long double>(hm) / static_cast<long double>(q));
  return static_cast<double>(fabsl(s1 * s2) / (static_cast<long double>(w.k) * s * s));
}

double theta_bound(i64 h, i64 k, i64 q) {
  if (h < 0 || 2 * h > q) fail(errc::bad_argument, "majorant valid for 0 <= h <= q/2");
  const double pi = std::numbers::pi;
  const double x = pi * static_cast<double>(h) / static_cast<double>(q);
  const double d = x + 1.0 / static_cast<double>(k + 1);
  return (pi / d) * (pi / d) / static_cast<double>(k);
}

AlphaTerm alpha_term(const PrimePowerLevel& level, const Window& a) {
  if (a.k < level.p)
    fail(errc::hypothesis_unmet, "alpha bound needs K >= p");
  AlphaTerm out;
  out.exact = alpha_value(level, a);
  // p (2 + p/K) - 1
  out.bound = ratio(mpz_class(gmp_cast(level.p)) * gmp_cast(2 * a.k + level.p) - gmp_cast(a.k), mpz_class(gmp_cast(a.k)));
  return out;
}

LambdaDecomposition lambda_decompose(const PrimePowerLevel& level, const Window& a,
                                     const Window& b, kernels::Exec exec) {
  if (a.q != level.q || b.q != level.q) fail(errc::bad_argument, "window modulus mismatch");
  const i64 q = level.q, p = level.p;

  LambdaDecomposition out;
  out.exact = lambda_exact(level, a, b);

  const mpz_class kk1 = mpz_class(gmp_cast(a.k)) + 1, kk2 = mpz_class(gmp_cast(b.k)) + 1;
  out.lambda00 = ratio(mpz_class(gmp_cast(level.totient())) * kk1 * kk2, mpz_class(gmp_cast(q)) * gmp_cast(q));

  // The (h != 0, h' = 0) block collapses to -(K'+1) alpha_A / (p q) because
  // only frequencies h = l p^{n-1} survive; symmetrically for (0, h' != 0).
  const mpq_class alpha_a = alpha_value(level, a);
  const mpq_class alpha_b = alpha_value(level, b);
  out.lambda0_row = -mpq_class(kk2) * alpha_a / (mpq_class(gmp_cast(p)) * gmp_cast(q));
  out.lambda0_col = -mpq_class(kk1) * alpha_b / (mpq_class(gmp_cast(p)) * gmp_cast(q));

  out.lambda_s = kernels::lambda_offdiagonal(level, a, b, exec);

  const mpq_class exact_minus = out.exact - out.lambda00 - out.lambda0_row - out.lambda0_col;
  out.residual = std::abs(exact_minus.get_d() - out.lambda_s);

  out.k_hypothesis = a.k >= p && b.k >= p;
  out.k5_hypothesis = a.k >= 5 && b.k >= 5;

  out.lambda00_formula_ok =
      out.lambda00 == ratio(mpz_class(gmp_cast(p - 1)) * kk1 * kk2, mpz_class(gmp_cast(p)) * gmp_cast(q));
  out.lambda0_row_bound_ok = out.lambda0_row >= ratio(-3 * kk2, mpz_class(gmp_cast(q)));
  out.lambda0_col_bound_ok = out.lambda0_col >= ratio(-3 * kk1, mpz_class(gmp_cast(q)));
  out.lambda_s_bound_ok = std::abs(out.lambda_s) <= offdiag_bound(q);

  const double chain_rhs =
      (static_cast<double>((a.k - 5)) * static_cast<double>(b.k - 5) - 36.0) /
          (2.0 * static_cast<double>(q)) -
      offdiag_bound(q);
  out.chain_ok = out.exact.get_d() >= chain_rhs;
  return out;
}

IntervalMeetingReport verify_interval_meeting(const PrimePowerLevel& level, ResidueInterval a, ResidueInterval b) {
  const i64 q = level.q, p = level.p;
  if (a.length < 1 || b.length < 1 || a.length > q - 1 || b.length > q - 1)
    fail(errc::bad_argument, "interval lengths must be in [1, q-1]");
  a.start = floor_mod(a.start, q);
  b.start = floor_mod(b.start, q);

  IntervalMeetingReport rep;
  rep.size_a = a.length;
  rep.size_b = b.length;
  rep.trimmed_a = a.length % 2 != 0;
  rep.trimmed_b = b.length % 2 != 0;
  rep.k = a.length / 2;
  rep.kp = b.length / 2;

  const i64 min_size = std::max<i64>(11, 2 * p + 1);
  rep.size_hypothesis = a.length >= min_size && b.length >= min_size;

  const double c_over_8 =
      512.0 * std::numbers::pi * std::numbers::pi / (2.0 * std::sqrt(2.0) - 1.0);
  const double q32 = std::pow(static_cast<double>(q), 1.5);
  rep.threshold = 144.0 + c_over_8 * q32;
  rep.product = static_cast<double>(a.length - 11) * static_cast<double>(b.length - 11);
  rep.product_hypothesis = rep.product > rep.threshold;

  const double max_product = static_cast<double>(q - 12) * static_cast<double>(q - 12);
  rep.vacuous = max_product <= rep.threshold;

  rep.positivity_lhs = static_cast<double>(rep.k - 5) * static_cast<double>(rep.kp - 5);
  rep.positivity_rhs = 36.0 + (c_over_8 / 4.0) * q32;  // 128 pi^2/(2 sqrt2 - 1) q^{3/2}
  rep.positivity_criterion = rep.positivity_lhs > rep.positivity_rhs;

  for (i64 i = 0; i < a.length; ++i) {
    const i64 y = floor_mod(a.start + i, q);
    if (y % p == 0) continue;
    const i64 z = floor_mod(-inv_mod(y, q), q);
    const i64 off = floor_mod(z - b.start, q);
    if (off < b.length) {
      rep.witness = std::make_pair(y, z);
      rep.witness_exists = true;
      break;
    }
  }

  if (rep.size_hypothesis && rep.product_hypothesis && !rep.witness_exists)
    fail(errc::bad_argument, "internal: hypotheses hold but no witness found");
  return rep;
}

}  // namespace kamienny
