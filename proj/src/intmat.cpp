#include "kamienny/intmat.hpp"

#include <algorithm>
#include <cstdlib>

namespace kamienny {

namespace {

void row_axpy(std::vector<mpz_class>& dst, const mpz_class& f, const std::vector<mpz_class>& src) {
  // dst -= f * src
  if (f == 0) return;
  for (size_t j = 0; j < dst.size(); ++j) {
    if (src[j] != 0) dst[j] -= f * src[j];
  }
}

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace

HnfResult hermite_normal_form(ZMat rows) {
  const size_t nrows = rows.size();
  const size_t ncols = nrows ? rows[0].size() : 0;

  ZMat u(nrows, std::vector<mpz_class>(nrows, 0));
  for (size_t i = 0; i < nrows; ++i) u[i][i] = 1;

  auto swap_rows = [&](size_t i, size_t j) {
    if (i == j) return;
    std::swap(rows[i], rows[j]);
    std::swap(u[i], u[j]);
  };
  auto axpy = [&](size_t dst, const mpz_class& f, size_t src) {
    row_axpy(rows[dst], f, rows[src]);
    row_axpy(u[dst], f, u[src]);
  };

  HnfResult res;
  size_t pr = 0;
  for (size_t col = 0; col < ncols && pr < nrows; ++col) {
    // Euclidean reduction of the column below pr until one nonzero remains.
    while (true) {
      size_t best = nrows;
      for (size_t i = pr; i < nrows; ++i) {
        if (rows[i][col] == 0) continue;
        if (best == nrows || cmp(abs(rows[i][col]), abs(rows[best][col])) < 0) best = i;
      }
      if (best == nrows) break;  // column empty below pr
      swap_rows(pr, best);
      bool others = false;
      const mpz_class piv = rows[pr][col];
      for (size_t i = pr + 1; i < nrows; ++i) {
        if (rows[i][col] == 0) continue;
        axpy(i, floor_div(rows[i][col], piv), pr);
        if (rows[i][col] != 0) others = true;
      }
      if (!others) break;
    }
    if (pr >= nrows || rows[pr][col] == 0) continue;
    if (rows[pr][col] < 0) {
      for (auto& x : rows[pr]) x = -x;
      for (auto& x : u[pr]) x = -x;
    }
    // Reduce entries above the pivot into [0, pivot).
    const mpz_class piv = rows[pr][col];
    for (size_t i = 0; i < pr; ++i) {
      if (rows[i][col] != 0) axpy(i, floor_div(rows[i][col], piv), pr);
    }
    res.pivot_cols.push_back(static_cast<i64>(col));
    ++pr;
  }
  res.rank = static_cast<i64>(pr);
  res.h = std::move(rows);
  res.u = std::move(u);
  return res;
}

std::vector<mpz_class> elementary_divisors(ZMat m) {
  const size_t nr = m.size();
  const size_t nc = nr ? m[0].size() : 0;
  std::vector<mpz_class> divs;
  size_t k = 0;
  while (k < nr && k < nc) {
    // Locate a minimal nonzero entry in the trailing block.
    size_t bi = nr, bj = nc;
    for (size_t i = k; i < nr; ++i) {
      for (size_t j = k; j < nc; ++j) {
        if (m[i][j] == 0) continue;
        if (bi == nr || cmp(abs(m[i][j]), abs(m[bi][bj])) < 0) {
          bi = i;
          bj = j;
        }
      }
    }
    if (bi == nr) break;  // trailing block is zero
    std::swap(m[k], m[bi]);
    for (size_t i = k; i < nr; ++i) std::swap(m[i][k], m[i][bj]);

    bool clean = true;
    for (size_t i = k + 1; i < nr; ++i) {
      if (m[i][k] == 0) continue;
      row_axpy(m[i], floor_div(m[i][k], m[k][k]), m[k]);
      if (m[i][k] != 0) clean = false;
    }
    for (size_t j = k + 1; j < nc; ++j) {
      if (m[k][j] == 0) continue;
      mpz_class f = floor_div(m[k][j], m[k][k]);
      if (f != 0)
        for (size_t i = k; i < nr; ++i) m[i][j] -= f * m[i][k];
      if (m[k][j] != 0) clean = false;
    }
    if (!clean) continue;  // keep reducing this block

    // Enforce divisibility: the pivot must divide every later entry.
    bool fixed = false;
    for (size_t i = k + 1; i < nr && !fixed; ++i) {
      for (size_t j = k + 1; j < nc && !fixed; ++j) {
        if (m[i][j] % m[k][k] != 0) {
          for (size_t jj = k; jj < nc; ++jj) m[k][jj] += m[i][jj];
          fixed = true;
        }
      }
    }
    if (fixed) continue;

    if (m[k][k] < 0) m[k][k] = -m[k][k];
    divs.push_back(m[k][k]);
    ++k;
  }
  return divs;
}

ModEliminationResult eliminate_mod(const std::vector<std::vector<i64>>& rows, i64 m) {
  ModEliminationResult res;
  if (rows.empty()) return res;
  const size_t ncols = rows[0].size();
  const size_t nrows = rows.size();

  // Reduced rows paired with their expression in terms of the input rows.
  std::vector<std::vector<i64>> basis;      // echelon rows
  std::vector<size_t> basis_pivot;          // pivot column per basis row
  std::vector<std::vector<i64>> basis_comb; // combination over original rows

  for (size_t i = 0; i < nrows; ++i) {
    std::vector<i64> row(ncols);
    for (size_t j = 0; j < ncols; ++j) row[j] = floor_mod(rows[i][j], m);
    std::vector<i64> comb(nrows, 0);
    comb[i] = 1;

    for (size_t b = 0; b < basis.size(); ++b) {
      i64 c = row[basis_pivot[b]];
      if (c == 0) continue;
      for (size_t j = 0; j < ncols; ++j)
        row[j] = floor_mod(row[j] - mul_mod(c, basis[b][j], m), m);
      for (size_t j = 0; j < nrows; ++j)
        comb[j] = floor_mod(comb[j] - mul_mod(c, basis_comb[b][j], m), m);
    }

    size_t piv = ncols;
    for (size_t j = 0; j < ncols; ++j) {
      if (row[j] != 0) {
        piv = j;
        break;
      }
    }
    if (piv == ncols) {
      if (!res.dependency) res.dependency = comb;
      continue;
    }
    i64 inv = inv_mod(row[piv], m);
    for (size_t j = 0; j < ncols; ++j) row[j] = mul_mod(inv, row[j], m);
    for (size_t j = 0; j < nrows; ++j) comb[j] = mul_mod(inv, comb[j], m);
    basis.push_back(std::move(row));
    basis_pivot.push_back(piv);
    basis_comb.push_back(std::move(comb));
    ++res.rank;
  }
  return res;
}

std::optional<std::vector<i64>> solve_in_span_mod(const std::vector<std::vector<i64>>& rows,
                                                  const std::vector<i64>& target, i64 m) {
  if (rows.empty()) return std::nullopt;
  const size_t ncols = rows[0].size();
  const size_t nrows = rows.size();

  std::vector<std::vector<i64>> basis;
  std::vector<size_t> basis_pivot;
  std::vector<std::vector<i64>> basis_comb;
  for (size_t i = 0; i < nrows; ++i) {
    std::vector<i64> row(ncols);
    for (size_t j = 0; j < ncols; ++j) row[j] = floor_mod(rows[i][j], m);
    std::vector<i64> comb(nrows, 0);
    comb[i] = 1;
    for (size_t b = 0; b < basis.size(); ++b) {
      i64 c = row[basis_pivot[b]];
      if (c == 0) continue;
      for (size_t j = 0; j < ncols; ++j)
        row[j] = floor_mod(row[j] - mul_mod(c, basis[b][j], m), m);
      for (size_t j = 0; j < nrows; ++j)
        comb[j] = floor_mod(comb[j] - mul_mod(c, basis_comb[b][j], m), m);
    }
    size_t piv = ncols;
    for (size_t j = 0; j < ncols; ++j)
      if (row[j] != 0) {
        piv = j;
        break;
      }
    if (piv == ncols) continue;
    i64 inv = inv_mod(row[piv], m);
    for (size_t j = 0; j < ncols; ++j) row[j] = mul_mod(inv, row[j], m);
    for (size_t j = 0; j < nrows; ++j) comb[j] = mul_mod(inv, comb[j], m);
    basis.push_back(std::move(row));
    basis_pivot.push_back(piv);
    basis_comb.push_back(std::move(comb));
  }

  std::vector<i64> t(ncols);
  for (size_t j = 0; j < ncols; ++j) t[j] = floor_mod(target[j], m);
  std::vector<i64> coeffs(nrows, 0);
  for (size_t b = 0; b < basis.size(); ++b) {
    i64 c = t[basis_pivot[b]];
    if (c == 0) continue;
    for (size_t j = 0; j < ncols; ++j)
      t[j] = floor_mod(t[j] - mul_mod(c, basis[b][j], m), m);
    for (size_t j = 0; j < nrows; ++j)
      coeffs[j] = floor_mod(coeffs[j] + mul_mod(c, basis_comb[b][j], m), m);
  }
  for (i64 x : t)
    if (x != 0) return std::nullopt;
  return coeffs;
}

}  // namespace kamienny
