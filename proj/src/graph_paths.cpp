#include "kamienny/graph_paths.hpp"

#include <unordered_set>

#include "kamienny/hecke.hpp"

namespace kamienny {

bool PathRecord::interval_contains(i64 residue) const {
  residue = floor_mod(residue, level.q);
  i64 off = direction == StepDirection::backward
                ? floor_mod(interval_start - residue, level.q)
                : floor_mod(residue - interval_start, level.q);
  return off < interval_length;
}

i64 PathRecord::interval_low() const {
  if (direction == StepDirection::forward) return interval_start;
  return floor_mod(interval_start - (interval_length - 1), level.q);
}

namespace {

PathRecord build_walk(const PrimePowerLevel& level, i64 r, i64 D, const P1Point& start,
                      StepDirection dir) {
  PathRecord rec;
  rec.level = level;
  rec.r = r;
  rec.bound_degree = D;
  rec.start = start;
  rec.direction = dir;

  std::set<P1Point> obstacles = sigma_r_support(r, level);
  auto blocked = [&](const P1Point& x) { return obstacles.count(x) != 0; };

  if (blocked(start)) {
    rec.start_blocked = true;
    rec.blocked_at = start;
    return rec;
  }
  if (start.kind != PointKind::affine)
    fail(errc::bad_argument, "walk must start at an affine point");

  rec.visited.push_back(start);
  rec.interval_start = start.v;
  rec.interval_length = 1;

  const i64 q = level.q;
  i64 c = start.v;
  for (i64 step = 0; step < q; ++step) {
    const P1Point cur = P1Point::affine(c);
    // Intermediate node: sigma-companion of the current point (backward) or
    // of the next point (forward); both arise as cur*sigma resp. cur*tau.
    const P1Point mid =
        dir == StepDirection::backward ? act_sigma(cur, level) : act_tau(cur, level);
    if (blocked(mid)) {
      rec.blocked_at = mid;
      break;
    }
    rec.visited.push_back(mid);

    const i64 next_c = dir == StepDirection::backward ? floor_mod(c - 1, q) : floor_mod(c + 1, q);
    const P1Point next = P1Point::affine(next_c);
    if (next == start) {
      rec.wrapped = true;  // covered every residue
      break;
    }
    if (blocked(next)) {
      rec.blocked_at = next;
      break;
    }
    rec.visited.push_back(next);
    rec.interval_length += 1;
    c = next_c;
  }
  return rec;
}

}  // namespace

PathRecord build_chemin_A(const PrimePowerLevel& level, i64 r, i64 D) {
  if (r < 1 || r > D) fail(errc::bad_argument, "need 1 <= r <= D");
  return build_walk(level, r, D, canonicalize(-r - 1, 1, level), StepDirection::backward);
}

PathRecord build_chemin_B(const PrimePowerLevel& level, i64 r, i64 D) {
  if (r < 1 || r > D) fail(errc::bad_argument, "need 1 <= r <= D");
  if (r % level.p != 0) {
    // Backward from the class of (1, r) itself, an affine point since r is a
    // unit here.
    return build_walk(level, r, D, canonicalize(1, r, level), StepDirection::backward);
  }
  // p | r: the class of (1, r) is infinity-like and backward steps do not
  // translate residues. Walk forward from (1,r)*sigma*tau^2*sigma = (r, r-1)
  // instead; r-1 is invertible, so the chain is a genuine interval.
  return build_walk(level, r, D, canonicalize(r, r - 1, level), StepDirection::forward);
}

double chemin_a_lower_bound(const PrimePowerLevel& level, i64 D) {
  return static_cast<double>(level.q) / static_cast<double>(D) - static_cast<double>(D) - 2.0;
}

double chemin_b_lower_bound(const PrimePowerLevel& level, i64 D) {
  return static_cast<double>(level.q) / static_cast<double>(D * D) - 2.0;
}

std::optional<MeetingWitness> find_meeting(const PathRecord& a, const PathRecord& b,
                                           const PrimePowerLevel& level) {
  if (a.interval_length == 0 || b.interval_length == 0) return std::nullopt;
  std::set<P1Point> a_nodes(a.visited.begin(), a.visited.end());

  // Scan the A chain in walk order; the witness pairs y with z = -1/y.
  const i64 q = level.q;
  i64 y = a.interval_start;
  for (i64 i = 0; i < a.interval_length; ++i) {
    if (y % level.p != 0) {
      i64 z = floor_mod(-inv_mod(y, q), q);
      if (b.interval_contains(z)) {
        MeetingWitness w;
        w.y = y;
        w.z = z;
        w.y_sigma_in_a = a_nodes.count(act_sigma(P1Point::affine(y), level)) != 0;
        return w;
      }
    }
    y = a.direction == StepDirection::backward ? floor_mod(y - 1, q) : floor_mod(y + 1, q);
  }
  return std::nullopt;
}

namespace {

i64 coeff_mod(const SymbolVector& v, const P1Point& x, i64 m) {
  mpz_class c = v.coeff(x) % gmp_cast(m);
  return floor_mod(c.get_si(), m);
}

// Truncate a chain at the pivot point (1, r) if the walk ran through it;
// beyond it the coefficient bookkeeping changes and the constancy argument
// stops. Returns the usable chain length.
i64 usable_chain(const PathRecord& rec, const P1Point& pivot, bool skip_first) {
  i64 len = rec.interval_length;
  i64 c = rec.interval_start;
  for (i64 i = 0; i < rec.interval_length; ++i) {
    if (!(skip_first && i == 0) && P1Point::affine(c) == pivot) {
      len = i;
      break;
    }
    c = rec.direction == StepDirection::backward ? floor_mod(c - 1, rec.level.q)
                                                 : floor_mod(c + 1, rec.level.q);
  }
  return len;
}

}  // namespace

EliminationReport verify_elimination(const HomologyPresentation& pres, i64 r,
                                     const std::vector<i64>& lambdas, i64 m) {
  const PrimePowerLevel& level = pres.level();
  if (r < 1 || static_cast<size_t>(r) != lambdas.size())
    fail(errc::bad_argument, "need coefficients lambda_1..lambda_r");
  if (!is_prime(m)) fail(errc::bad_argument, "m must be prime");

  EliminationReport rep;
  rep.r = r;
  rep.m = m;
  rep.lambda_r = floor_mod(lambdas.back(), m);

  SymbolVector v(level);
  for (i64 i = 1; i <= r; ++i) {
    SymbolVector img = hecke_image(i, level);
    img *= mpz_class(gmp_cast(lambdas[static_cast<size_t>(i - 1)]));
    v += img;
  }
  if (!pres.reduce(v).is_zero_mod(m))
    fail(errc::not_a_dependency, "coefficients do not give a dependency mod m");

  auto [alpha, beta] = pres.solve_membership_mod(v, m);

  const P1Point pivot = canonicalize(1, r, level);
  rep.pivot_coeff = coeff_mod(v, pivot, m);
  rep.pivot_isolated = rep.pivot_coeff == rep.lambda_r;

  PathRecord chem_a = build_chemin_A(level, r, r);
  PathRecord chem_b = build_chemin_B(level, r, r);

  // The B walk may start at the pivot itself (p not dividing r); its chain
  // constancy is read off from the companion nodes onward.
  const bool b_starts_at_pivot = chem_b.interval_length > 0 && chem_b.start == pivot;
  PathRecord a_cut = chem_a;
  a_cut.interval_length = usable_chain(chem_a, pivot, false);
  PathRecord b_cut = chem_b;
  b_cut.interval_length = usable_chain(chem_b, pivot, b_starts_at_pivot);

  rep.chain_a_nonempty = a_cut.interval_length > 0;
  rep.chain_b_nonempty = b_cut.interval_length > 0;
  rep.chain_a_length = a_cut.interval_length;
  rep.chain_b_length = b_cut.interval_length;

  // Constancy of alpha (= beta off the support of v) along each chain. On
  // chain nodes x the coefficient of v vanishes, so alpha_x = beta_x; sigma
  // and tau invariance of the two parts propagates a single value along the
  // walk. The pivot node itself is exempt: there v_x need not vanish.
  auto chain_check = [&](const PathRecord& rec, bool skip_first, i64& value) -> bool {
    bool first = true;
    bool ok = true;
    i64 c = rec.interval_start;
    for (i64 i = 0; i < rec.interval_length; ++i) {
      const P1Point x = P1Point::affine(c);
      if (!(skip_first && i == 0)) {
        i64 ax = coeff_mod(alpha, x, m);
        i64 bx = coeff_mod(beta, x, m);
        if (ax != bx) ok = false;
        if (first) {
          value = ax;
          first = false;
        } else if (ax != value) {
          ok = false;
        }
      }
      c = rec.direction == StepDirection::backward ? floor_mod(c - 1, level.q)
                                                   : floor_mod(c + 1, level.q);
    }
    return ok && !first;
  };

  bool const_a = rep.chain_a_nonempty && chain_check(a_cut, false, rep.chain_a_value);
  bool const_b = false;
  if (rep.chain_b_nonempty) {
    if (b_starts_at_pivot) {
      // Value carried by the sigma-companion of the pivot, -r, which the walk
      // visited right after its start.
      if (b_cut.interval_length > 1) {
        const_b = chain_check(b_cut, true, rep.chain_b_value);
      } else if (chem_b.visited.size() >= 2) {
        // Only the companion of the pivot was reached; it carries the value.
        const P1Point companion = chem_b.visited[1];
        rep.chain_b_value = coeff_mod(alpha, companion, m);
        const_b = coeff_mod(beta, companion, m) == rep.chain_b_value;
      }
    } else {
      const_b = chain_check(b_cut, false, rep.chain_b_value);
    }
  }
  rep.constancy_ok = const_a && const_b;

  auto meeting = find_meeting(a_cut, b_cut, level);
  rep.met = meeting.has_value();

  if (rep.met && rep.constancy_ok) {
    rep.inconclusive = false;
    // Meeting identifies the two chain constants; the pivot coefficient is
    // their difference and must vanish.
    rep.forced_zero = (rep.chain_a_value == rep.chain_b_value) && rep.pivot_coeff == 0;
  } else {
    rep.inconclusive = true;
  }
  return rep;
}

}  // namespace kamienny
