// Copyright 2026 The dhlab Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "dhlab/errors.hpp"
#include "dhlab/rational.hpp"

namespace dhlab::exactlin {

/// Symmetric bilinear form with integer entries (the intersection form on
/// the middle cohomology of a closed oriented 4-manifold).
class SymmetricForm {
 public:
  explicit SymmetricForm(std::vector<std::vector<Integer>> entries);

  /// n x n block-diagonal sum of hyperbolic blocks [[0,1],[1,0]].
  static SymmetricForm hyperbolic_sum(std::size_t blocks);
  static SymmetricForm diagonal(const std::vector<Integer>& d);

  std::size_t dimension() const { return n_; }
  const Integer& at(std::size_t i, std::size_t j) const { return entries_[i][j]; }
  const std::vector<std::vector<Integer>>& entries() const { return entries_; }

 private:
  std::size_t n_;
  std::vector<std::vector<Integer>> entries_;
};

/// Result of congruence diagonalization: B^T Q B = diag(d), with the
/// diagonal ordered positives first, then negatives, then zeros.
struct Diagonalization {
  std::vector<Vec> basis;  // columns basis[j] are the new basis vectors
  Vec diagonal;
  std::size_t b_plus = 0;
  std::size_t b_minus = 0;
  std::size_t b_zero = 0;
};

struct Inertia {
  std::size_t b_plus = 0;
  std::size_t b_minus = 0;
  std::size_t b_zero = 0;
  long long signature = 0;
};

/// x^T Q y, exact.
Rational evaluate(const SymmetricForm& form, const Vec& x, const Vec& y);

/// Congruence diagonalization over the rationals (symmetric Gaussian
/// elimination; a zero diagonal pivot with a nonzero off-diagonal partner
/// is repaired by the move e_i <- e_i + e_j first).
Diagonalization diagonalize(const SymmetricForm& form);

Inertia inertia(const SymmetricForm& form);

/// Given Q and a class omega with Q(omega, omega) > 0 on a form with
/// b+ >= 2, returns an all-integer class c with Q(c, c) > 0 and
/// Q(c, omega) = 0. Deterministic: the first positive direction of the
/// diagonalized orthogonal complement, scaled by the least common multiple
/// of coordinate denominators.
Vec find_positive_orthogonal_class(const SymmetricForm& form, const Vec& omega);

bool is_zero_vector(const Vec& v);
bool is_integral(const Vec& v);

}  // namespace dhlab::exactlin
