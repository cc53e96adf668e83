// Copyright 2026 The dhlab Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "dhlab/exactlin.hpp"
#include "dhlab/polynomial.hpp"

namespace dhlab::construct {

using exactlin::SymmetricForm;
using polycert::Interval;
using polycert::Polynomial;
using polycert::SignVerdict;

struct CounterexampleInput {
  SymmetricForm form;  // intersection form Q of the base four-manifold
  Vec omega0;          // integral symplectic class
  std::string name;
};

struct CounterexampleReport {
  std::string name;
  Vec c;                      // integral class with Q(c,c) > 0, Q(c,omega0) = 0
  Rational epsilon;
  Polynomial density;         // f(t) on (-epsilon, epsilon)
  Interval interval;
  Polynomial defect;          // h = f'' f - (f')^2
  SignVerdict certificate;    // PositiveThroughout on the interval
};

/// Largest epsilon = 1/m (m a positive integer) with
/// epsilon^2 <= Q(omega0,omega0) / (2 Q(c,c)); deterministic.
Rational choose_epsilon(const SymmetricForm& form, const Vec& omega0, const Vec& c);

/// Full pipeline: orthogonal class, scale, density, defect, and the
/// strict-positivity certificate of the defect on (-epsilon, epsilon).
CounterexampleReport build_counterexample(const CounterexampleInput& input);

/// Coefficient-wise check of 2h = Q(c,c) Q(omega0,omega0) - Q(c,c)^2 t^2.
bool defect_identity_check(const CounterexampleReport& report,
                           const SymmetricForm& form, const Vec& omega0);

}  // namespace dhlab::construct
