// Copyright 2026 The dhlab Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Shared test utilities: deterministic random instances and independent
// oracles (characteristic-polynomial sign counting, brute-force rank).

#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "dhlab/exactlin.hpp"
#include "dhlab/polynomial.hpp"
#include "dhlab/rational.hpp"

namespace testutil {

using dhlab::Integer;
using dhlab::Rational;
using dhlab::Vec;

inline dhlab::exactlin::SymmetricForm random_symmetric_form(
    std::mt19937_64& rng, std::size_t n, int lo = -10, int hi = 10) {
  std::uniform_int_distribution<int> entry(lo, hi);
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m[i][j] = m[j][i] = entry(rng);
  return dhlab::exactlin::SymmetricForm(std::move(m));
}

inline Vec random_int_vector(std::mt19937_64& rng, std::size_t n,
                             int lo = -5, int hi = 5) {
  std::uniform_int_distribution<int> entry(lo, hi);
  Vec v(n);
  for (auto& x : v) x = Rational(entry(rng));
  return v;
}

// Characteristic polynomial det(tI - A) by the Faddeev-LeVerrier
// recurrence, exact over the rationals.
inline dhlab::polycert::Polynomial characteristic_polynomial(
    const dhlab::exactlin::SymmetricForm& form) {
  const std::size_t n = form.dimension();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(form.at(i, j));
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  Vec coeffs(n + 1, Rational(0));
  coeffs[n] = Rational(1);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Rational(1);
  Rational c = Rational(1);
  for (std::size_t k = 1; k <= n; ++k) {
    // m <- a * (m + c I)
    std::vector<std::vector<Rational>> next(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] += (k == 1 ? Rational(0) : c);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) next[i][j] += a[i][l] * m[l][j];
    m = next;
    Rational trace(0);
    for (std::size_t i = 0; i < n; ++i) trace += m[i][i];
    c = -trace / Rational(static_cast<long>(k));
    coeffs[n - k] = c;
  }
  return dhlab::polycert::Polynomial(coeffs);
}

struct SignCounts {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};

// Eigenvalue sign counts (with multiplicity) of a symmetric matrix via
// Descartes' rule on the characteristic polynomial: valid because every
// root is real, so the variation bounds are attained.
inline SignCounts eigen_sign_counts(const dhlab::exactlin::SymmetricForm& form) {
  const auto p = characteristic_polynomial(form);
  const Vec& c = p.coefficients();
  SignCounts counts;
  while (counts.zero < c.size() && c[counts.zero].is_zero()) ++counts.zero;
  int last_pos = 0, last_neg = 0;
  for (std::size_t k = counts.zero; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    const int s = c[k].sign();
    if (last_pos != 0 && s != last_pos) ++counts.positive;
    last_pos = s;
    const int sn = (k % 2 == 0) ? s : -s;  // coefficient of p(-t)
    if (last_neg != 0 && sn != last_neg) ++counts.negative;
    last_neg = sn;
  }
  return counts;
}

// Row-reduction rank with full pivot search; independent of the library's
// Gauss-Jordan kernel routine.
inline std::size_t brute_force_rank(std::vector<Vec> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  std::vector<bool> used_row(rows, false), used_col(cols, false);
  while (true) {
    std::size_t pr = rows, pc = cols;
    for (std::size_t r = 0; r < rows && pr == rows; ++r) {
      if (used_row[r]) continue;
      for (std::size_t c = 0; c < cols; ++c)
        if (!used_col[c] && !m[r][c].is_zero()) { pr = r; pc = c; break; }
    }
    if (pr == rows) return rank;
    used_row[pr] = true;
    used_col[pc] = true;
    ++rank;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pr || m[r][pc].is_zero()) continue;
      const Rational f = m[r][pc] / m[pr][pc];
      for (std::size_t c = 0; c < cols; ++c) m[r][c] -= f * m[pr][c];
    }
  }
}

}  // namespace testutil
