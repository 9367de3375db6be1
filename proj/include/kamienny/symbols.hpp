#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "kamienny/intmat.hpp"
#include "kamienny/p1.hpp"

namespace kamienny {

/// A finitely supported integer combination of P^1 points. Zero coefficients
/// are never stored.
class SymbolVector {
 public:
  explicit SymbolVector(PrimePowerLevel level) : level_(level) {}

  const PrimePowerLevel& level() const { return level_; }

  void add(const P1Point& x, const mpz_class& c) {
    if (c == 0) return;
    auto it = coeffs_.find(x);
    if (it == coeffs_.end()) {
      coeffs_.emplace(x, c);
    } else {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  mpz_class coeff(const P1Point& x) const {
    auto it = coeffs_.find(x);
    return it == coeffs_.end() ? mpz_class(0) : it->second;
  }

  const std::map<P1Point, mpz_class>& terms() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  size_t support_size() const { return coeffs_.size(); }

  SymbolVector& operator+=(const SymbolVector& rhs);
  SymbolVector& operator-=(const SymbolVector& rhs);
  SymbolVector& operator*=(const mpz_class& c);
  friend SymbolVector operator+(SymbolVector a, const SymbolVector& b) { return a += b; }
  friend SymbolVector operator-(SymbolVector a, const SymbolVector& b) { return a -= b; }
  bool operator==(const SymbolVector& rhs) const {
    return level_ == rhs.level_ && coeffs_ == rhs.coeffs_;
  }

  /// Right action applied to every point of the support.
  SymbolVector acted(const GroupWord& word) const;

  /// Coefficient-wise reduction to least nonnegative residues mod m.
  SymbolVector reduced_mod(i64 m) const;

 private:
  PrimePowerLevel level_;
  std::map<P1Point, mpz_class> coeffs_;
};

struct HomologyClass {
  PrimePowerLevel level;
  std::vector<mpz_class> coords;  // length = quotient rank

  bool is_zero() const {
    for (const auto& c : coords)
      if (c != 0) return false;
    return true;
  }
  bool is_zero_mod(i64 m) const {
    for (const auto& c : coords)
      if (mpz_class(c % gmp_cast(m)) != 0) return false;
    return true;
  }
  HomologyClass& operator+=(const HomologyClass& rhs);
  HomologyClass& operator*=(const mpz_class& c);
  bool operator==(const HomologyClass& rhs) const {
    return level == rhs.level && coords == rhs.coords;
  }
};

// Presentation of the relative homology of the modular curve of level p^n as
// Z[P^1] modulo the lattice spanned by sigma-orbit sums and tau-orbit sums.
// The quotient is free; construction fails with errc::torsion_detected
// otherwise (which would mean a bug, not bad input).
class HomologyPresentation {
 public:
  static HomologyPresentation build(const PrimePowerLevel& level);

  const PrimePowerLevel& level() const { return level_; }
  i64 generator_count() const { return level_.point_count(); }
  i64 rank() const { return static_cast<i64>(basis_cols_.size()); }

  const std::vector<i64>& pivot_columns() const { return pivot_cols_; }
  const std::vector<i64>& basis_columns() const { return basis_cols_; }
  const std::vector<mpz_class>& divisors() const { return divisors_; }

  /// Sparse orbit-sum relation rows as (generator index, coefficient) lists;
  /// sigma rows first, then tau rows.
  const std::vector<std::vector<std::pair<i64, int>>>& relation_rows() const { return rows_; }
  size_t sigma_row_count() const { return sigma_rows_; }

  HomologyClass reduce(const SymbolVector& v) const;
  HomologyClass xi_class(const P1Point& x) const;
  HomologyClass zero_class() const { return {level_, std::vector<mpz_class>(rank())}; }

  /// An integer pair (alpha, beta) with v = alpha - beta, alpha a combination
  /// of sigma-orbit sums and beta of tau-orbit sums. Throws errc::not_in_kernel
  /// when reduce(v) != 0. The pair is not unique; only the stated properties hold.
  std::pair<SymbolVector, SymbolVector> solve_membership(const SymbolVector& v) const;

  /// Same decomposition over F_m: v = alpha - beta mod m, coefficients in [0, m).
  std::pair<SymbolVector, SymbolVector> solve_membership_mod(const SymbolVector& v, i64 m) const;

  // Cache round trip. A presentation loaded from cache rebuilds the
  // elimination transform lazily on the first solve_membership call.
  std::string to_cache_string() const;
  static HomologyPresentation from_cache_string(const std::string& text);

 private:
  HomologyPresentation(PrimePowerLevel level) : level_(level) {}
  void build_rows();
  void run_elimination();
  void ensure_transform() const;
  std::vector<mpz_class> dense(const SymbolVector& v) const;

  PrimePowerLevel level_{2, 1};
  std::vector<std::vector<std::pair<i64, int>>> rows_;
  size_t sigma_rows_ = 0;
  // Reduced relation matrix: for pivot_cols_[k] the sparse row hrows_[k]
  // has a unit pivot there and support elsewhere only on basis columns.
  std::vector<std::vector<std::pair<i64, mpz_class>>> hrows_;
  std::vector<i64> pivot_cols_;
  std::vector<i64> basis_cols_;
  std::vector<i64> col_to_basis_;  // generator index -> basis position or -1
  std::vector<mpz_class> divisors_;
  mutable std::optional<ZMat> transform_;  // u with h = u * rows, row-aligned
  mutable std::optional<std::vector<i64>> hrow_to_urow_;
};

}  // namespace kamienny
