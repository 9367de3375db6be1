#pragma once

#include <set>
#include <vector>

#include "kamienny/symbols.hpp"

namespace kamienny {

/// Integer matrix (u v / w t) with ut - vw = r, 0 <= w < t, 0 <= v < u.
/// These satisfy u + t - 1 <= r, hence u, t <= r.
struct HeckeMatrix {
  i64 u = 0, v = 0, w = 0, t = 0;
  bool operator==(const HeckeMatrix&) const = default;
};

/// All matrices for determinant r, ordered lexicographically by (t, w, u, v).
std::vector<HeckeMatrix> hecke_matrices(i64 r);

/// Image of the modular symbol {0, oo} under T_r as an element of Z[P^1]:
/// the sum over hecke_matrices(r) of the class of (w, t) mod q, with pairs
/// whose gcd with p exceeds 1 contributing nothing.
SymbolVector hecke_image(i64 r, const PrimePowerLevel& level);

HomologyClass hecke_class(i64 r, const HomologyPresentation& pres);

/// Union of the supports of hecke_image(k) for 1 <= k <= r, minus the class
/// of (1, r): the obstacle set for the graph walks.
std::set<P1Point> sigma_r_support(i64 r, const PrimePowerLevel& level);

}  // namespace kamienny
