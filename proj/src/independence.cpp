#include "kamienny/independence.hpp"

#include "kamienny/bounds.hpp"

namespace kamienny {

namespace {

// Coordinate rows of hecke_class(1..d). Entries fit in i64 at desk scale;
// conversion is checked.
std::vector<std::vector<i64>> class_rows_i64(const HomologyPresentation& pres, i64 d) {
  std::vector<std::vector<i64>> rows;
  rows.reserve(static_cast<size_t>(d));
  for (i64 r = 1; r <= d; ++r) {
    HomologyClass cls = hecke_class(r, pres);
    std::vector<i64> row;
    row.reserve(cls.coords.size());
    for (const auto& c : cls.coords) {
      if (!c.fits_slong_p()) fail(errc::overflow, "class coordinate exceeds 64 bits");
      row.push_back(c.get_si());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ZMat class_rows_mpz(const HomologyPresentation& pres, i64 d) {
  ZMat rows;
  rows.reserve(static_cast<size_t>(d));
  for (i64 r = 1; r <= d; ++r) rows.push_back(hecke_class(r, pres).coords);
  return rows;
}

bool verify_witness(const HomologyPresentation& pres, const std::vector<i64>& lambda, i64 m) {
  HomologyClass acc = pres.zero_class();
  for (size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] == 0) continue;
    HomologyClass cls = hecke_class(static_cast<i64>(i) + 1, pres);
    cls *= mpz_class(gmp_cast(lambda[i]));
    acc += cls;
  }
  return acc.is_zero_mod(m);
}

}  // namespace

IndependenceReport rank_mod_m(const HomologyPresentation& pres, i64 d, i64 m) {
  if (d < 1) fail(errc::bad_argument, "d must be >= 1");
  if (!is_prime(m)) fail(errc::bad_argument, "m must be prime");
  IndependenceReport rep;
  rep.level = pres.level();
  rep.d = d;
  rep.mode = IndependenceMode::single_mod;
  rep.modulus = m;

  // Beyond the quotient rank the verdict is forced; eliminate only enough
  // rows to produce a witness.
  const i64 deff = std::min(d, pres.rank() + 1);
  rep.pigeonhole = d > pres.rank();

  auto rows = class_rows_i64(pres, deff);
  ModEliminationResult elim = eliminate_mod(rows, m);
  rep.rank_mod = elim.rank;
  rep.independent = (deff == d) && (elim.rank == d);
  if (!rep.independent && elim.dependency) {
    rep.witness = elim.dependency;
    rep.witness_modulus = m;
    if (!verify_witness(pres, *rep.witness, m))
      fail(errc::bad_argument, "internal: dependency witness failed re-evaluation");
  }
  return rep;
}

IndependenceReport independent_all_m(const HomologyPresentation& pres, i64 d) {
  if (d < 1) fail(errc::bad_argument, "d must be >= 1");
  IndependenceReport rep;
  rep.level = pres.level();
  rep.d = d;
  rep.mode = IndependenceMode::all_mod;

  const i64 deff = std::min(d, pres.rank() + 1);
  rep.pigeonhole = d > pres.rank();

  rep.divisors = elementary_divisors(class_rows_mpz(pres, deff));
  const bool full_rank = static_cast<i64>(rep.divisors.size()) == deff && deff == d;
  bool all_units = true;
  for (const auto& e : rep.divisors)
    if (e != 1) all_units = false;
  rep.independent = full_rank && all_units;

  if (!rep.independent) {
    // Some prime field must witness the dependence: any prime when the rank
    // over Q already drops, otherwise a prime dividing the first divisor > 1.
    i64 m = 2;
    if (full_rank) {
      mpz_class bad = 0;
      for (const auto& e : rep.divisors)
        if (e != 1) {
          bad = e;
          break;
        }
      for (m = 2;; m = (m == 2 ? 3 : m + 2)) {
        if (bad % gmp_cast(m) == 0 && is_prime(m)) break;
        if (m > 1000000) fail(errc::overflow, "no small prime factor found for divisor");
      }
    } else {
      // rank over Q < d: every prime works; pick the first that does.
      while (true) {
        auto sub = rank_mod_m(pres, d, m);
        if (!sub.independent) break;
        m = (m == 2 ? 3 : m + 2);
        while (!is_prime(m)) m += 2;
      }
    }
    auto sub = rank_mod_m(pres, d, m);
    rep.witness = sub.witness;
    rep.witness_modulus = m;
  }
  return rep;
}

i64 max_independent_d(const HomologyPresentation& pres, IndependenceMode mode,
                      std::optional<i64> m) {
  const i64 cap = pres.rank();
  if (mode == IndependenceMode::single_mod) {
    if (!m || !is_prime(*m)) fail(errc::bad_argument, "single-modulus mode needs a prime m");
    // Incremental elimination: the prefix stays independent until a row
    // reduces to zero.
    std::vector<std::vector<i64>> rows;
    for (i64 d = 1; d <= cap; ++d) {
      HomologyClass cls = hecke_class(d, pres);
      std::vector<i64> row;
      row.reserve(cls.coords.size());
      for (const auto& c : cls.coords) {
        if (!c.fits_slong_p()) fail(errc::overflow, "class coordinate exceeds 64 bits");
        row.push_back(c.get_si());
      }
      rows.push_back(std::move(row));
      if (eliminate_mod(rows, *m).rank < d) return d - 1;
    }
    return cap;
  }
  ZMat rows;
  for (i64 d = 1; d <= cap; ++d) {
    rows.push_back(hecke_class(d, pres).coords);
    auto divs = elementary_divisors(rows);
    bool ok = static_cast<i64>(divs.size()) == d;
    for (const auto& e : divs)
      if (e != 1) ok = false;
    if (!ok) return d - 1;
  }
  return cap;
}

CriterionReport criterion_verdict(const HomologyPresentation& pres, i64 degree,
                                  IndependenceMode mode, std::optional<i64> m) {
  if (degree < 1) fail(errc::bad_argument, "degree must be >= 1");
  if (mode == IndependenceMode::single_mod && !m)
    fail(errc::bad_argument, "single-modulus mode needs a prime m");
  CriterionReport rep;
  rep.degree = degree;
  rep.s = bounds::s_choice(pres.level().p);
  rep.tested = rep.s * degree;
  rep.result = mode == IndependenceMode::all_mod ? independent_all_m(pres, rep.tested)
                                                 : rank_mod_m(pres, rep.tested, m.value());
  rep.threshold = bounds::independence_threshold(pres.level().p, degree);
  rep.level_clears_threshold = mpz_class(gmp_cast(pres.level().q)) > rep.threshold;
  return rep;
}

}  // namespace kamienny
