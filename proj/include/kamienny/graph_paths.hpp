#pragma once

#include <optional>
#include <vector>

#include "kamienny/symbols.hpp"

namespace kamienny {

// Walks on the sigma/tau graph of P^1(Z/qZ). A backward step from an affine
// point (a, 1) visits (a,1)*sigma and then (a-1, 1); a forward step visits
// (a,1)*tau and then (a+1, 1). In both cases the intermediate node is the
// sigma-image of an endpoint, so a walk's node set is its affine chain
// together with the sigma-companions of chain points.
enum class StepDirection { backward, forward };

struct PathRecord {
  PrimePowerLevel level{2, 1};
  i64 r = 0;
  i64 bound_degree = 0;  // the D the walk was built for (r <= D)
  P1Point start;
  StepDirection direction = StepDirection::backward;

  std::vector<P1Point> visited;  // walk order, chain points and companions
  i64 interval_start = 0;        // first chain residue (= start point)
  i64 interval_length = 0;       // number of chain points, consecutive mod q

  std::optional<P1Point> blocked_at;  // first obstacle met, if any
  bool start_blocked = false;
  bool wrapped = false;  // covered all residues without meeting an obstacle

  /// Chain residues in walk order: interval_start, interval_start -+ 1, ...
  bool interval_contains(i64 residue) const;
  i64 interval_low() const;   // smallest residue of the chain, as walked
};

/// Backward walk flanking (1, r) from the affine point -r-1.
PathRecord build_chemin_A(const PrimePowerLevel& level, i64 r, i64 D);

/// Second walk: backward from the class of (1, r) when p does not divide r;
/// forward from the class of (r, r-1) when p | r (where r-1 is invertible).
PathRecord build_chemin_B(const PrimePowerLevel& level, i64 r, i64 D);

double chemin_a_lower_bound(const PrimePowerLevel& level, i64 D);  // q/D - D - 2
double chemin_b_lower_bound(const PrimePowerLevel& level, i64 D);  // q/D^2 - 2

struct MeetingWitness {
  i64 y = 0;  // in the A chain
  i64 z = 0;  // in the B chain, z = -1/y mod q
  bool y_sigma_in_a = false;  // the sigma-companion of y was visited by A
};

/// First (y, z) in A-walk order with y a unit and z = -1/y in the B chain.
std::optional<MeetingWitness> find_meeting(const PathRecord& a, const PathRecord& b,
                                           const PrimePowerLevel& level);

struct EliminationReport {
  i64 r = 0;
  i64 m = 0;
  bool met = false;            // the two walks share a point
  bool constancy_ok = false;   // alpha = beta and constant along both chains
  bool chain_a_nonempty = false;
  bool chain_b_nonempty = false;
  i64 chain_a_length = 0;
  i64 chain_b_length = 0;
  i64 chain_a_value = 0;       // common alpha value on the A chain (mod m)
  i64 chain_b_value = 0;       // common alpha value on the B chain (mod m)
  i64 pivot_coeff = 0;         // coefficient of the class of (1, r) in v, mod m
  i64 lambda_r = 0;            // last input coefficient, mod m
  bool pivot_isolated = false; // pivot_coeff == lambda_r
  bool forced_zero = false;    // argument concluded: pivot coefficient is 0 mod m
  bool inconclusive = true;
};

/// Checker for the induction step: given lambda with
/// sum_i lambda_i * hecke_class(i) = 0 mod m (else errc::not_a_dependency),
/// decompose v = sum lambda_i * hecke_image(i) as alpha - beta over F_m and
/// trace the constancy of alpha along both walks. When the walks meet, the
/// coefficient of (1, r) in v is forced to 0 mod m; when they do not, the
/// verdict is honestly inconclusive.
EliminationReport verify_elimination(const HomologyPresentation& pres, i64 r,
                                     const std::vector<i64>& lambdas, i64 m);

}  // namespace kamienny
