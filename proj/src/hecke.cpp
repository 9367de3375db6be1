#include "kamienny/hecke.hpp"

namespace kamienny {

std::vector<HeckeMatrix> hecke_matrices(i64 r) {
  if (r < 1) fail(errc::bad_argument, "r must be >= 1");
  std::vector<HeckeMatrix> out;
  for (i64 t = 1; t <= r; ++t) {
    for (i64 w = 0; w < t; ++w) {
      for (i64 u = 1; u <= r; ++u) {
        if (w == 0) {
          // ut = r, any v in [0, u)
          if (u * t == r)
            for (i64 v = 0; v < u; ++v) out.push_back({u, v, 0, t});
        } else {
          i64 num = u * t - r;
          if (num >= 0 && num % w == 0) {
            i64 v = num / w;
            if (v < u) out.push_back({u, v, w, t});
          }
        }
      }
    }
  }
  return out;
}

SymbolVector hecke_image(i64 r, const PrimePowerLevel& level) {
  SymbolVector img(level);
  for (const HeckeMatrix& m : hecke_matrices(r)) {
    if (m.w % level.p == 0 && m.t % level.p == 0) continue;  // contributes nothing
    img.add(canonicalize(m.w, m.t, level), 1);
  }
  return img;
}

HomologyClass hecke_class(i64 r, const HomologyPresentation& pres) {
  return pres.reduce(hecke_image(r, pres.level()));
}

std::set<P1Point> sigma_r_support(i64 r, const PrimePowerLevel& level) {
  std::set<P1Point> support;
  for (i64 k = 1; k <= r; ++k) {
    const SymbolVector img = hecke_image(k, level);
    for (const auto& [pt, c] : img.terms()) support.insert(pt);
  }
  support.erase(canonicalize(1, r, level));
  return support;
}

}  // namespace kamienny
