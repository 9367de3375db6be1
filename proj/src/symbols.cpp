#include "kamienny/symbols.hpp"

#include <json.hpp>

#include <algorithm>

namespace kamienny {

SymbolVector& SymbolVector::operator+=(const SymbolVector& rhs) {
  for (const auto& [pt, c] : rhs.coeffs_) add(pt, c);
  return *this;
}

SymbolVector& SymbolVector::operator-=(const SymbolVector& rhs) {
  for (const auto& [pt, c] : rhs.coeffs_) add(pt, -c);
  return *this;
}

SymbolVector& SymbolVector::operator*=(const mpz_class& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [pt, x] : coeffs_) x *= c;
  return *this;
}

SymbolVector SymbolVector::acted(const GroupWord& word) const {
  SymbolVector out(level_);
  for (const auto& [pt, c] : coeffs_) out.add(act(pt, word, level_), c);
  return out;
}

SymbolVector SymbolVector::reduced_mod(i64 m) const {
  SymbolVector out(level_);
  for (const auto& [pt, c] : coeffs_) out.add(pt, mpz_class(((c % gmp_cast(m)) + gmp_cast(m)) % gmp_cast(m)));
  return out;
}

HomologyClass& HomologyClass::operator+=(const HomologyClass& rhs) {
  for (size_t i = 0; i < coords.size(); ++i) coords[i] += rhs.coords[i];
  return *this;
}

HomologyClass& HomologyClass::operator*=(const mpz_class& c) {
  for (auto& x : coords) x *= c;
  return *this;
}

void HomologyPresentation::build_rows() {
  const i64 npts = level_.point_count();
  std::vector<P1Point> pts = enumerate_points(level_);

  std::vector<i64> sigma_img(npts), tau_img(npts);
  for (i64 i = 0; i < npts; ++i) {
    sigma_img[i] = point_index(act_sigma(pts[i], level_), level_);
    tau_img[i] = point_index(act_tau(pts[i], level_), level_);
  }

  // One row per orbit: the orbit sum x + x*sigma (or x alone on a fixed
  // point), then x + x*tau + x*tau^2 likewise. Orbits in order of smallest
  // member.
  std::vector<char> seen(npts, 0);
  for (i64 i = 0; i < npts; ++i) {
    if (seen[i]) continue;
    i64 j = sigma_img[i];
    seen[i] = seen[j] = 1;
    std::vector<std::pair<i64, int>> row;
    if (j == i) {
      row = {{i, 1}};
    } else {
      row = {{std::min(i, j), 1}, {std::max(i, j), 1}};
    }
    rows_.push_back(std::move(row));
  }
  sigma_rows_ = rows_.size();

  std::fill(seen.begin(), seen.end(), 0);
  for (i64 i = 0; i < npts; ++i) {
    if (seen[i]) continue;
    i64 j = tau_img[i];
    i64 k = tau_img[j];
    seen[i] = seen[j] = seen[k] = 1;
    std::vector<std::pair<i64, int>> row;
    if (j == i) {
      row = {{i, 1}};
    } else {
      std::vector<i64> orb = {i, j, k};
      std::sort(orb.begin(), orb.end());
      row = {{orb[0], 1}, {orb[1], 1}, {orb[2], 1}};
    }
    rows_.push_back(std::move(row));
  }
}

void HomologyPresentation::run_elimination() {
  const size_t ncols = static_cast<size_t>(level_.point_count());
  ZMat dense_rows(rows_.size(), std::vector<mpz_class>(ncols, 0));
  for (size_t i = 0; i < rows_.size(); ++i)
    for (const auto& [col, c] : rows_[i]) dense_rows[i][col] += c;

  HnfResult hnf = hermite_normal_form(std::move(dense_rows));

  pivot_cols_ = hnf.pivot_cols;
  hrows_.clear();
  divisors_.clear();
  for (i64 k = 0; k < hnf.rank; ++k) {
    const mpz_class& piv = hnf.h[k][pivot_cols_[k]];
    if (piv != 1)
      fail(errc::torsion_detected, "nonunit pivot " + piv.get_str() +
                                       " at generator " + std::to_string(pivot_cols_[k]) +
                                       "; the quotient must be free");
    divisors_.push_back(1);
    std::vector<std::pair<i64, mpz_class>> sparse;
    for (size_t j = 0; j < ncols; ++j)
      if (hnf.h[k][j] != 0) sparse.emplace_back(static_cast<i64>(j), hnf.h[k][j]);
    hrows_.push_back(std::move(sparse));
  }

  basis_cols_.clear();
  col_to_basis_.assign(ncols, -1);
  size_t pi = 0;
  for (size_t j = 0; j < ncols; ++j) {
    if (pi < pivot_cols_.size() && pivot_cols_[pi] == static_cast<i64>(j)) {
      ++pi;
      continue;
    }
    col_to_basis_[j] = static_cast<i64>(basis_cols_.size());
    basis_cols_.push_back(static_cast<i64>(j));
  }

  ZMat u(hnf.u.begin(), hnf.u.begin() + hnf.rank);
  transform_ = std::move(u);
}

HomologyPresentation HomologyPresentation::build(const PrimePowerLevel& level) {
  HomologyPresentation pres(level);
  pres.build_rows();
  pres.run_elimination();
  return pres;
}

void HomologyPresentation::ensure_transform() const {
  if (transform_) return;
  // Loaded from cache: rerun the (deterministic) elimination to recover the
  // transform rows aligned with hrows_.
  HomologyPresentation full = build(level_);
  transform_ = std::move(full.transform_);
}

std::vector<mpz_class> HomologyPresentation::dense(const SymbolVector& v) const {
  std::vector<mpz_class> vec(static_cast<size_t>(level_.point_count()), 0);
  for (const auto& [pt, c] : v.terms()) vec[point_index(pt, level_)] = c;
  return vec;
}

HomologyClass HomologyPresentation::reduce(const SymbolVector& v) const {
  if (!(v.level() == level_)) fail(errc::bad_argument, "level mismatch");
  std::vector<mpz_class> vec = dense(v);
  for (size_t k = 0; k < hrows_.size(); ++k) {
    mpz_class c = vec[pivot_cols_[k]];
    if (c == 0) continue;
    for (const auto& [col, h] : hrows_[k]) vec[col] -= c * h;
  }
  HomologyClass out{level_, {}};
  out.coords.reserve(basis_cols_.size());
  for (i64 col : basis_cols_) out.coords.push_back(vec[col]);
  return out;
}

HomologyClass HomologyPresentation::xi_class(const P1Point& x) const {
  SymbolVector v(level_);
  v.add(x, 1);
  return reduce(v);
}

std::pair<SymbolVector, SymbolVector> HomologyPresentation::solve_membership(
    const SymbolVector& v) const {
  if (!(v.level() == level_)) fail(errc::bad_argument, "level mismatch");
  ensure_transform();

  // Back-substitution against the unit pivots: v = sum_k y_k * hrow_k when v
  // lies in the relation lattice.
  std::vector<mpz_class> vec = dense(v);
  std::vector<mpz_class> y(hrows_.size(), 0);
  for (size_t k = 0; k < hrows_.size(); ++k) {
    mpz_class c = vec[pivot_cols_[k]];
    y[k] = c;
    if (c == 0) continue;
    for (const auto& [col, h] : hrows_[k]) vec[col] -= c * h;
  }
  for (const auto& x : vec)
    if (x != 0) fail(errc::not_in_kernel, "vector does not reduce to the zero class");

  // Coefficients on the original orbit rows: z = y * U.
  const ZMat& u = *transform_;
  std::vector<mpz_class> z(rows_.size(), 0);
  for (size_t k = 0; k < y.size(); ++k) {
    if (y[k] == 0) continue;
    for (size_t j = 0; j < rows_.size(); ++j)
      if (u[k][j] != 0) z[j] += y[k] * u[k][j];
  }

  SymbolVector alpha(level_), beta(level_);
  for (size_t j = 0; j < rows_.size(); ++j) {
    if (z[j] == 0) continue;
    for (const auto& [col, c] : rows_[j]) {
      const P1Point pt = point_at(col, level_);
      if (j < sigma_rows_) {
        alpha.add(pt, z[j] * c);
      } else {
        beta.add(pt, -z[j] * c);
      }
    }
  }
  return {std::move(alpha), std::move(beta)};
}

std::pair<SymbolVector, SymbolVector> HomologyPresentation::solve_membership_mod(
    const SymbolVector& v, i64 m) const {
  if (!(v.level() == level_)) fail(errc::bad_argument, "level mismatch");
  const size_t ncols = static_cast<size_t>(level_.point_count());

  std::vector<std::vector<i64>> rows_mod(rows_.size(), std::vector<i64>(ncols, 0));
  for (size_t i = 0; i < rows_.size(); ++i)
    for (const auto& [col, c] : rows_[i]) rows_mod[i][col] = floor_mod(c, m);

  std::vector<i64> target(ncols, 0);
  for (const auto& [pt, c] : v.terms())
    target[point_index(pt, level_)] = floor_mod(static_cast<i64>(mpz_class(c % gmp_cast(m)).get_si()), m);

  auto coeffs = solve_in_span_mod(rows_mod, target, m);
  if (!coeffs) fail(errc::not_in_kernel, "vector is not in the relation span mod m");

  SymbolVector alpha(level_), beta(level_);
  for (size_t j = 0; j < rows_.size(); ++j) {
    if ((*coeffs)[j] == 0) continue;
    for (const auto& [col, c] : rows_[j]) {
      const P1Point pt = point_at(col, level_);
      if (j < sigma_rows_) {
        alpha.add(pt, mpz_class(gmp_cast((*coeffs)[j] * c)));
      } else {
        beta.add(pt, mpz_class(gmp_cast(-(*coeffs)[j] * c)));
      }
    }
  }
  return {alpha.reduced_mod(m), beta.reduced_mod(m)};
}

std::string HomologyPresentation::to_cache_string() const {
  nlohmann::json doc;
  doc["format_version"] = 1;
  doc["p"] = level_.p;
  doc["n"] = level_.n;
  doc["rank"] = rank();
  doc["pivots"] = pivot_cols_;
  nlohmann::json triples = nlohmann::json::array();
  for (size_t k = 0; k < hrows_.size(); ++k)
    for (const auto& [col, val] : hrows_[k])
      triples.push_back({static_cast<i64>(k), col, val.get_str()});
  doc["rows"] = std::move(triples);
  return doc.dump();
}

HomologyPresentation HomologyPresentation::from_cache_string(const std::string& text) {
  nlohmann::json doc = nlohmann::json::parse(text);
  if (doc.at("format_version").get<int>() != 1)
    fail(errc::bad_argument, "unsupported cache format version");
  PrimePowerLevel level(doc.at("p").get<i64>(), doc.at("n").get<int>());
  HomologyPresentation pres(level);
  pres.build_rows();
  pres.pivot_cols_ = doc.at("pivots").get<std::vector<i64>>();
  pres.hrows_.assign(pres.pivot_cols_.size(), {});
  for (const auto& t : doc.at("rows")) {
    size_t row = t.at(0).get<size_t>();
    i64 col = t.at(1).get<i64>();
    mpz_class val(t.at(2).get<std::string>());
    pres.hrows_.at(row).emplace_back(col, std::move(val));
  }
  pres.divisors_.assign(pres.pivot_cols_.size(), 1);
  const size_t ncols = static_cast<size_t>(level.point_count());
  pres.col_to_basis_.assign(ncols, -1);
  size_t pi = 0;
  for (size_t j = 0; j < ncols; ++j) {
    if (pi < pres.pivot_cols_.size() && pres.pivot_cols_[pi] == static_cast<i64>(j)) {
      ++pi;
      continue;
    }
    pres.col_to_basis_[j] = static_cast<i64>(pres.basis_cols_.size());
    pres.basis_cols_.push_back(static_cast<i64>(j));
  }
  if (pres.rank() != doc.at("rank").get<i64>())
    fail(errc::bad_argument, "cache rank disagrees with pivot data");
  return pres;
}

}  // namespace kamienny
