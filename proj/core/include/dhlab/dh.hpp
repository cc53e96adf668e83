// Copyright 2026 The dhlab Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "dhlab/exactlin.hpp"
#include "dhlab/polynomial.hpp"

namespace dhlab::dhcore {

using exactlin::SymmetricForm;
using polycert::Interval;
using polycert::Polynomial;
using polycert::SignKind;
using polycert::SignVerdict;

/// One regular-value component of a complexity-two reduction: the reduced
/// space's intersection form, the reduced symplectic class at the
/// reference point, and the line-restricted Chern class of the direction.
struct ReducedComponentData {
  SymmetricForm form;
  Vec omega_a;
  Vec chern;
  Interval interval;
};

/// Piecewise-polynomial density with shared breakpoints between pieces.
struct DHProfile {
  std::vector<std::pair<Interval, Polynomial>> pieces;
  std::vector<Rational> walls;  // interior breakpoints, increasing
};

struct WallCheck {
  std::size_t wall_index = 0;
  Rational wall;
  Rational left_derivative;
  Rational right_derivative;
  bool pass = false;
  bool boundary = false;  // only one side present; reported, never failed
};

enum class Verdict { LogConcave, StrictlyNonLogConcave, Inconclusive };

const char* verdict_name(Verdict verdict);

struct LogConcavityReport {
  std::vector<SignVerdict> per_piece;  // sign of the defect h per piece
  std::vector<WallCheck> wall_checks;
  Verdict verdict = Verdict::Inconclusive;
};

/// f(t) = (Q(c,c) t^2 + 2 Q(c,omega_a) t + Q(omega_a,omega_a)) / 2.
Polynomial dh_density(const ReducedComponentData& component);

/// Builds a profile from abutting components (densities derived from the
/// forms); walls are the shared interval endpoints.
DHProfile profile_from_components(const std::vector<ReducedComponentData>& components);

/// One-sided derivative comparison at an interior wall: pass iff the right
/// derivative does not exceed the left one.
WallCheck graham_wall_check(const DHProfile& profile, std::size_t wall_index);

/// Certifies each piece's defect sign and every interior wall; requires
/// each density to be strictly positive on its piece.
LogConcavityReport log_concavity_verdict(const DHProfile& profile);

}  // namespace dhlab::dhcore
