#include "hmv/smith.hpp"

#include <algorithm>
#include <cstddef>

namespace hmv {

namespace {

void swap_rows(std::vector<std::vector<mpz_class>>& a, std::size_t i, std::size_t j) {
  if (i != j) std::swap(a[i], a[j]);
}

void swap_cols(std::vector<std::vector<mpz_class>>& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (auto& row : a) std::swap(row[i], row[j]);
}

} // namespace

std::vector<mpz_class> smith_diagonal(std::vector<std::vector<mpz_class>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  const std::size_t rank_bound = std::min(rows, cols);
  std::vector<mpz_class> diag;

  for (std::size_t t = 0; t < rank_bound; ++t) {
    // Locate a pivot of minimal absolute value in the trailing block.
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (a[i][j] == 0) continue;
        if (!found || cmp(abs(a[i][j]), abs(a[pi][pj])) < 0) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    }
    if (!found) break;
    swap_rows(a, t, pi);
    swap_cols(a, t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        mpz_class q = a[i][t] / a[t][t];
        if (q != 0) {
          for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        }
        if (a[i][t] != 0) {
          // Remainder is smaller than the pivot; promote it.
          swap_rows(a, t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        mpz_class q = a[t][j] / a[t][t];
        if (q != 0) {
          for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        }
        if (a[t][j] != 0) {
          swap_cols(a, t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // Pivot must divide every remaining entry before moving on.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < rows && divides_all; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
            divides_all = false;
            break;
          }
        }
      }
      if (divides_all) break;
    }
    diag.push_back(abs(a[t][t]));
  }

  // Enforce the divisibility chain (entries are already mutually dividing
  // by construction, but keep this as a safety normalization).
  for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      if (diag[j] % diag[i] != 0) {
        mpz_class g = gcd(diag[i], diag[j]);
        mpz_class l = diag[i] / g * diag[j];
        diag[i] = g;
        diag[j] = l;
      }
    }
  }
  return diag;
}

} // namespace hmv
