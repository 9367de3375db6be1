#include "kamienny/bounds.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>

#include "kamienny/errors.hpp"

namespace kamienny::bounds {

namespace {

mpfr_prec_t prec_for(int digits) {
  if (digits < 10 || digits > 100000) fail(errc::bad_argument, "precision out of range");
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623) + 32);
}

// RAII wrapper around a single mpfr value.
class Real {
 public:
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Real() { mpfr_clear(v_); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

// C = 4096 pi^2 / (2 sqrt 2 - 1), rounded up: numerator up, denominator down.
void c_upper(mpfr_ptr out, mpfr_prec_t prec) {
  Real pi(prec), num(prec), den(prec);
  mpfr_const_pi(pi.get(), MPFR_RNDU);
  mpfr_sqr(num.get(), pi.get(), MPFR_RNDU);
  mpfr_mul_ui(num.get(), num.get(), 4096, MPFR_RNDU);
  mpfr_sqrt_ui(den.get(), 2, MPFR_RNDD);
  mpfr_mul_ui(den.get(), den.get(), 2, MPFR_RNDD);
  mpfr_sub_ui(den.get(), den.get(), 1, MPFR_RNDD);
  mpfr_div(out, num.get(), den.get(), MPFR_RNDU);
}

void c_squared_upper(mpfr_ptr out, mpfr_prec_t prec) {
  Real c(prec);
  c_upper(c.get(), prec);
  mpfr_sqr(out, c.get(), MPFR_RNDU);
}

mpz_class ceil_to_mpz(mpfr_srcptr x) {
  mpz_class out;
  Real t(mpfr_get_prec(x));
  mpfr_set(t.get(), x, MPFR_RNDU);
  mpfr_ceil(t.get(), t.get());
  mpfr_get_z(out.get_mpz_t(), t.get(), MPFR_RNDU);
  return out;
}

mpz_class pow_mpz(i64 base, i64 exp) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(exp));
  return out;
}

/// floor((1 + b^{d/2})^2) = 1 + b^d + floor(2 sqrt(b^d)), exactly.
mpz_class floor_one_plus_root_sq(i64 b, i64 d) {
  mpz_class bd = pow_mpz(b, d);
  mpz_class s;
  mpz_class four_bd = 4 * bd;
  mpz_sqrt(s.get_mpz_t(), four_bd.get_mpz_t());
  return 1 + bd + s;
}

}  // namespace

std::string constant_c_str(int digits) {
  const mpfr_prec_t prec = prec_for(digits);
  Real c(prec);
  c_upper(c.get(), prec);
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*RUg", digits, c.get());
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

double constant_c(int digits) {
  const mpfr_prec_t prec = prec_for(digits);
  Real c(prec);
  c_upper(c.get(), prec);
  return mpfr_get_d(c.get(), MPFR_RNDU);
}

i64 l_choice(i64 p) {
  if (!is_prime(p)) fail(errc::bad_argument, "p must be prime");
  return p == 3 ? 5 : 3;
}

i64 s_choice(i64 p) {
  if (!is_prime(p)) fail(errc::bad_argument, "p must be prime");
  return p == 2 ? 3 : 2;
}

mpz_class independence_threshold(i64 p, i64 d, int digits) {
  if (d < 1) fail(errc::bad_argument, "d must be >= 1");
  const mpfr_prec_t prec = prec_for(digits);
  Real x(prec);
  c_squared_upper(x.get(), prec);
  mpz_class factor = pow_mpz(s_choice(p) * d, 6);
  mpfr_mul_z(x.get(), x.get(), factor.get_mpz_t(), MPFR_RNDU);
  return ceil_to_mpz(x.get());
}

mpz_class torsion_level_bound(i64 p, i64 d, int digits) {
  if (d < 1) fail(errc::bad_argument, "d must be >= 1");
  const mpfr_prec_t prec = prec_for(digits);
  Real x(prec);
  c_squared_upper(x.get(), prec);
  mpz_class factor = (pow_mpz(l_choice(p), d) + 1) * pow_mpz(s_choice(p) * d, 6);
  mpfr_mul_z(x.get(), x.get(), factor.get_mpz_t(), MPFR_RNDU);
  return ceil_to_mpz(x.get());
}

mpz_class merel_oesterle_prime_bound(i64 d) {
  if (d < 1) fail(errc::bad_argument, "d must be >= 1");
  return floor_one_plus_root_sq(3, d);
}

mpz_class reduction_case_bound(i64 l, i64 d) {
  if (d < 1) fail(errc::bad_argument, "d must be >= 1");
  if (!is_prime(l)) fail(errc::bad_argument, "l must be prime");
  return floor_one_plus_root_sq(l, d);
}

namespace {

std::vector<i64> primes_up_to(i64 n) {
  if (n > 100000000) fail(errc::overflow, "prime cut too large to enumerate");
  std::vector<char> sieve(static_cast<size_t>(std::max<i64>(n + 1, 2)), 1);
  sieve[0] = sieve[1] = 0;
  for (i64 i = 2; i * i <= n; ++i)
    if (sieve[static_cast<size_t>(i)])
      for (i64 j = i * i; j <= n; j += i) sieve[static_cast<size_t>(j)] = 0;
  std::vector<i64> out;
  for (i64 i = 2; i <= n; ++i)
    if (sieve[static_cast<size_t>(i)]) out.push_back(i);
  return out;
}

}  // namespace

mpz_class global_torsion_bound(i64 d, int digits) {
  mpz_class cut = merel_oesterle_prime_bound(d);
  if (!cut.fits_slong_p()) fail(errc::overflow, "prime cut does not fit a machine word");
  mpz_class total = 1;
  for (i64 p : primes_up_to(cut.get_si())) {
    mpz_class b = torsion_level_bound(p, d, digits);
    total *= b * b;
  }
  return total;
}

BoundReport bound_report(i64 d, std::optional<i64> p, int digits) {
  BoundReport rep;
  rep.d = d;
  rep.p = p;
  rep.digits = digits;
  rep.c = constant_c_str(digits);
  rep.independence = independence_threshold(p.value_or(5), d, digits);
  if (p) rep.level_bound = torsion_level_bound(*p, d, digits);
  rep.merel_oesterle = merel_oesterle_prime_bound(d);
  if (rep.merel_oesterle.fits_slong_p()) rep.primes = primes_up_to(rep.merel_oesterle.get_si());
  rep.global = global_torsion_bound(d, digits);
  return rep;
}

CascadeReport cascade_check(const PrimePowerLevel& level, i64 D, int digits) {
  if (D < 2) fail(errc::d_out_of_range, "cascade requires D >= 2");
  const i64 q = level.q, p = level.p;
  const mpfr_prec_t prec = prec_for(digits);

  // Upper bound on the analytic threshold 144 + (512 pi^2/(2 sqrt2 - 1)) q^{3/2},
  // and a lower bound on its q^{3/2} part for the one inequality that needs it.
  Real thr_u(prec), half_term_d(prec), tmp(prec);
  {
    Real pi(prec), num(prec), den(prec), q32u(prec), q32d(prec);
    mpfr_const_pi(pi.get(), MPFR_RNDU);
    mpfr_sqr(num.get(), pi.get(), MPFR_RNDU);
    mpfr_mul_ui(num.get(), num.get(), 512, MPFR_RNDU);
    mpfr_sqrt_ui(den.get(), 2, MPFR_RNDD);
    mpfr_mul_ui(den.get(), den.get(), 2, MPFR_RNDD);
    mpfr_sub_ui(den.get(), den.get(), 1, MPFR_RNDD);
    mpfr_div(tmp.get(), num.get(), den.get(), MPFR_RNDU);  // 512 pi^2/(2 sqrt2 - 1), up

    mpfr_set_si(q32u.get(), q, MPFR_RNDU);
    mpfr_pow_ui(q32u.get(), q32u.get(), 3, MPFR_RNDU);
    mpfr_sqrt(q32u.get(), q32u.get(), MPFR_RNDU);  // q^{3/2}, up
    mpfr_mul(thr_u.get(), tmp.get(), q32u.get(), MPFR_RNDU);
    mpfr_add_ui(thr_u.get(), thr_u.get(), 144, MPFR_RNDU);

    // Lower bound on (1/2) * 512 pi^2/(2 sqrt2 - 1) * q^{3/2} for the
    // "144 is absorbed" helper implication.
    Real pi_d(prec), num_d(prec), den_u(prec), q32l(prec);
    mpfr_const_pi(pi_d.get(), MPFR_RNDD);
    mpfr_sqr(num_d.get(), pi_d.get(), MPFR_RNDD);
    mpfr_mul_ui(num_d.get(), num_d.get(), 512, MPFR_RNDD);
    mpfr_sqrt_ui(den_u.get(), 2, MPFR_RNDU);
    mpfr_mul_ui(den_u.get(), den_u.get(), 2, MPFR_RNDU);
    mpfr_sub_ui(den_u.get(), den_u.get(), 1, MPFR_RNDU);
    mpfr_div(half_term_d.get(), num_d.get(), den_u.get(), MPFR_RNDD);
    mpfr_set_si(q32l.get(), q, MPFR_RNDD);
    mpfr_pow_ui(q32l.get(), q32l.get(), 3, MPFR_RNDD);
    mpfr_sqrt(q32l.get(), q32l.get(), MPFR_RNDD);
    mpfr_mul(half_term_d.get(), half_term_d.get(), q32l.get(), MPFR_RNDD);
    mpfr_div_ui(half_term_d.get(), half_term_d.get(), 2, MPFR_RNDD);
  }
  const double thr = mpfr_get_d(thr_u.get(), MPFR_RNDU);

  CascadeReport rep;
  rep.D = D;
  const i64 min_size = std::max<i64>(11, 2 * p + 1);

  auto rational_ge = [](i64 num, i64 den, i64 bound) {  // num/den >= bound, den > 0
    return num >= bound * den;
  };
  // (a1/b1) * (a2/b2) > thr, conservatively: compare a1 a2 (rounded down) to
  // thr * b1 b2 (rounded up).
  auto product_gt_thr = [&](double a1, double a2, double b) {
    return (a1 * a2) > thr * b * (1.0 + 1e-15);
  };

  // Lemma-ready block: both interval sizes reach the minimum and the
  // product clears the analytic threshold.
  {
    const bool c1 = rational_ge(q - 2 * D * D, D * D, min_size);        // q/D^2 - 2 >= min
    const bool c2 = rational_ge(q - D * D - 2 * D, D, min_size);        // q/D - D - 2 >= min
    const double lhs1 = static_cast<double>(q) / (D * D) - 13.0;
    const double lhs2 = static_cast<double>(q) / D - D - 13.0;
    const bool c3 = lhs1 > 0 && lhs2 > 0 && product_gt_thr(lhs1, lhs2, 1.0);
    rep.lemma_block = {{"size_B", c1, static_cast<double>(q) / (D * D) - 2.0,
                        static_cast<double>(min_size)},
                       {"size_A", c2, static_cast<double>(q) / D - D - 2.0,
                        static_cast<double>(min_size)},
                       {"product", c3, lhs1 * lhs2, thr}};
    rep.lemma_ok = c1 && c2 && c3;
  }

  // Intermediate block.
  {
    const bool c1 = D >= 2;
    const bool c2 = rational_ge(q, D * D, std::max<i64>(26, 4 * p));
    const double lhs = (static_cast<double>(q) / (2.0 * D * D)) * (static_cast<double>(q) / (2.0 * D));
    const bool c3 = lhs > thr * (1.0 + 1e-15);
    rep.mid_block = {{"D_ge_2", c1, static_cast<double>(D), 2.0},
                     {"q_over_D2", c2, static_cast<double>(q) / (D * D),
                      static_cast<double>(std::max<i64>(26, 4 * p))},
                     {"half_product", c3, lhs, thr}};
    rep.mid_ok = c1 && c2 && c3;
  }

  // Final block, headline condition q > C^2 D^6 last.
  {
    const bool c1 = D >= 2;
    const bool c2 = level.q_over_p() >= 4 * D * D;
    const bool c3 = q >= 26 * D * D;
    mpz_class final_thr;
    {
      Real x(prec);
      c_squared_upper(x.get(), prec);
      mpz_class d6 = pow_mpz(D, 6);
      mpfr_mul_z(x.get(), x.get(), d6.get_mpz_t(), MPFR_RNDU);
      final_thr = ceil_to_mpz(x.get());
    }
    const bool c4 = mpz_class(gmp_cast(q)) > final_thr;
    rep.final_block = {{"D_ge_2", c1, static_cast<double>(D), 2.0},
                       {"p_pow_nm1_over_D2", c2, static_cast<double>(level.q_over_p()) / (D * D), 4.0},
                       {"q_over_D2_ge_26", c3, static_cast<double>(q) / (D * D), 26.0},
                       {"q_gt_C2_D6", c4, static_cast<double>(q), final_thr.get_d()}};
    rep.final_ok = c1 && c2 && c3 && c4;
  }

  rep.implication_final_to_mid_ok = !rep.final_ok || rep.mid_ok;
  rep.implication_mid_to_lemma_ok = !rep.mid_ok || rep.lemma_ok;

  // Helper implications used to collapse the cascade; each is evaluated on
  // this instance (antecedent => consequent).
  {
    const bool ante1 = q >= 26 * D * D;
    const bool cons1 = rational_ge(q - 2 * D * (13 + D), 2 * D, 0);  // 13 + D <= q/(2D)
    rep.helper_implications.push_back(
        {"q_ge_26D2_implies_13_plus_D_le_half_q_over_D", !ante1 || cons1,
         static_cast<double>(13 + D), static_cast<double>(q) / (2.0 * D)});

    const bool ante2 = rational_ge(q, D * D, 4 * p);
    const bool cons2 = rational_ge(q - 2 * D * D, D * D, 2 * p + 1);
    rep.helper_implications.push_back({"q_over_D2_ge_4p_implies_size", !ante2 || cons2,
                                       static_cast<double>(q) / (D * D) - 2.0,
                                       static_cast<double>(2 * p + 1)});

    const bool ante3 = rational_ge(q, D, 4 * p * D);
    const bool cons3 = rational_ge(q - D * (D + 2 * p + 3), D, 0);  // q/D >= D + 2p + 3
    rep.helper_implications.push_back({"q_over_D_ge_4pD_implies_size", !ante3 || cons3,
                                       static_cast<double>(q) / D,
                                       static_cast<double>(D + 2 * p + 3)});

    // 144 <= (1/2) * 512 pi^2/(2 sqrt2 - 1) q^{3/2}; certain via the lower bound.
    const bool c144 = mpfr_cmp_ui(half_term_d.get(), 144) >= 0;
    rep.helper_implications.push_back(
        {"144_absorbed", c144, 144.0, mpfr_get_d(half_term_d.get(), MPFR_RNDD)});
  }
  return rep;
}

}  // namespace kamienny::bounds
