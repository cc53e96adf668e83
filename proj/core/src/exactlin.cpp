// Copyright 2026 The dhlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dhlab/exactlin.hpp"

#include <utility>

namespace dhlab::exactlin {

namespace {

using Matrix = std::vector<Vec>;  // row-major square matrix of rationals

// Symmetric congruence reduction of a rational symmetric matrix.
// Returns (basis columns, diagonal), already sign-ordered.
std::pair<std::vector<Vec>, Vec> diagonalize_rational(Matrix m) {
  const std::size_t n = m.size();
  // basis[j] is the j-th new basis vector, expressed in the original basis.
  std::vector<Vec> basis(n, Vec(n, Rational(0)));
  for (std::size_t j = 0; j < n; ++j) basis[j][j] = Rational(1);

  auto add_col = [&](std::size_t dst, std::size_t src, const Rational& factor) {
    // e_dst <- e_dst + factor * e_src, applied congruently to m.
    for (std::size_t i = 0; i < n; ++i) m[i][dst] += factor * m[i][src];
    for (std::size_t j = 0; j < n; ++j) m[dst][j] += factor * m[src][j];
    for (std::size_t i = 0; i < n; ++i) basis[dst][i] += factor * basis[src][i];
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < n; ++i) std::swap(m[i][a], m[i][b]);
    for (std::size_t j = 0; j < n; ++j) std::swap(m[a][j], m[b][j]);
    std::swap(basis[a], basis[b]);
  };

  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k].is_zero()) {
      // Prefer a later nonzero diagonal entry; otherwise repair the pivot
      // with e_k <- e_k + e_j against a nonzero off-diagonal partner.
      std::size_t swap_j = n, off_j = n;
      for (std::size_t j = k + 1; j < n && swap_j == n; ++j) {
        if (!m[j][j].is_zero()) swap_j = j;
        if (off_j == n && !m[k][j].is_zero()) off_j = j;
      }
      if (swap_j < n) {
        swap_cols(k, swap_j);
      } else if (off_j < n) {
        add_col(k, off_j, Rational(1));  // new m[k][k] = 2*m[k][off_j] != 0
      } else {
        continue;  // row and column already zero past the pivot
      }
    }
    const Rational pivot = m[k][k];
    for (std::size_t j = k + 1; j < n; ++j) {
      if (!m[k][j].is_zero()) add_col(j, k, -(m[k][j] / pivot));
    }
  }

  // Order: positive pivots, then negative, then zero.
  std::vector<std::size_t> order;
  for (int want : {+1, -1, 0})
    for (std::size_t k = 0; k < n; ++k)
      if (m[k][k].sign() == want) order.push_back(k);

  std::vector<Vec> obasis(n);
  Vec diag(n);
  for (std::size_t j = 0; j < n; ++j) {
    obasis[j] = basis[order[j]];
    diag[j] = m[order[j]][order[j]];
  }
  return {std::move(obasis), std::move(diag)};
}

}  // namespace

SymmetricForm::SymmetricForm(std::vector<std::vector<Integer>> entries)
    : n_(entries.size()), entries_(std::move(entries)) {
  for (const auto& row : entries_)
    if (row.size() != n_)
      throw Error(ErrorCode::DimensionMismatch, "form matrix is not square");
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (entries_[i][j] != entries_[j][i])
        throw Error(ErrorCode::ParseError, "form matrix is not symmetric");
}

SymmetricForm SymmetricForm::hyperbolic_sum(std::size_t blocks) {
  std::vector<std::vector<Integer>> e(2 * blocks,
                                      std::vector<Integer>(2 * blocks, 0));
  for (std::size_t b = 0; b < blocks; ++b) {
    e[2 * b][2 * b + 1] = 1;
    e[2 * b + 1][2 * b] = 1;
  }
  return SymmetricForm(std::move(e));
}

SymmetricForm SymmetricForm::diagonal(const std::vector<Integer>& d) {
  std::vector<std::vector<Integer>> e(d.size(), std::vector<Integer>(d.size(), 0));
  for (std::size_t i = 0; i < d.size(); ++i) e[i][i] = d[i];
  return SymmetricForm(std::move(e));
}

Rational evaluate(const SymmetricForm& form, const Vec& x, const Vec& y) {
  const std::size_t n = form.dimension();
  if (x.size() != n || y.size() != n)
    throw Error(ErrorCode::DimensionMismatch,
                "vector length does not match form dimension");
  Rational acc(0);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      acc += x[i] * Rational(form.at(i, j)) * y[j];
    }
  }
  return acc;
}

Diagonalization diagonalize(const SymmetricForm& form) {
  const std::size_t n = form.dimension();
  Matrix m(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(form.at(i, j));
  auto [basis, diag] = diagonalize_rational(std::move(m));
  Diagonalization out;
  out.basis = std::move(basis);
  out.diagonal = std::move(diag);
  for (const auto& d : out.diagonal) {
    if (d.sign() > 0) ++out.b_plus;
    else if (d.sign() < 0) ++out.b_minus;
    else ++out.b_zero;
  }
  return out;
}

Inertia inertia(const SymmetricForm& form) {
  auto d = diagonalize(form);
  return Inertia{d.b_plus, d.b_minus, d.b_zero,
                 static_cast<long long>(d.b_plus) - static_cast<long long>(d.b_minus)};
}

bool is_zero_vector(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

bool is_integral(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_integer()) return false;
  return true;
}

Vec find_positive_orthogonal_class(const SymmetricForm& form, const Vec& omega) {
  const std::size_t n = form.dimension();
  if (omega.size() != n)
    throw Error(ErrorCode::DimensionMismatch,
                "omega length does not match form dimension");
  if (is_zero_vector(omega))
    throw Error(ErrorCode::ZeroVector, "omega is the zero class");
  const Rational q_ww = evaluate(form, omega, omega);
  if (q_ww.sign() <= 0)
    throw Error(ErrorCode::NotPositive, "Q(omega, omega) must be positive");
  if (inertia(form).b_plus < 2)
    throw Error(ErrorCode::InsufficientBPlus, "form needs b+ >= 2");

  // Span of { e_j - (Q(e_j, omega)/Q(omega, omega)) * omega : j != j0 } is
  // the Q-orthogonal complement of omega; j0 is the first nonzero slot.
  std::size_t j0 = 0;
  while (omega[j0].is_zero()) ++j0;
  std::vector<Vec> complement;
  complement.reserve(n - 1);
  for (std::size_t j = 0; j < n; ++j) {
    if (j == j0) continue;
    Vec e(n, Rational(0));
    e[j] = Rational(1);
    const Rational proj = evaluate(form, e, omega) / q_ww;
    for (std::size_t i = 0; i < n; ++i) e[i] -= proj * omega[i];
    complement.push_back(std::move(e));
  }

  Matrix gram(n - 1, Vec(n - 1));
  for (std::size_t a = 0; a < n - 1; ++a)
    for (std::size_t b = a; b < n - 1; ++b)
      gram[a][b] = gram[b][a] = evaluate(form, complement[a], complement[b]);

  auto [cbasis, cdiag] = diagonalize_rational(std::move(gram));
  // Sylvester: the complement of a positive omega carries b+ - 1 >= 1
  // positive directions, and the ordering puts them first.
  if (cdiag.empty() || cdiag[0].sign() <= 0)
    throw Error(ErrorCode::InternalInconsistency,
                "orthogonal complement lost its positive direction");

  Vec c(n, Rational(0));
  for (std::size_t a = 0; a < n - 1; ++a)
    for (std::size_t i = 0; i < n; ++i) c[i] += cbasis[0][a] * complement[a][i];

  Integer scale = 1;
  for (const auto& x : c) scale = lcm(scale, x.denominator());
  for (auto& x : c) x *= Rational(scale);
  return c;
}

}  // namespace dhlab::exactlin
