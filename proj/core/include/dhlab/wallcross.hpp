// Copyright 2026 The dhlab Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "dhlab/polynomial.hpp"

namespace dhlab::wallcross {

using polycert::Interval;
using polycert::Polynomial;

/// One critical submanifold at a level: its dimension, the moment-map
/// Hessian type (2f, 2b) transverse to it, its signature, and its
/// Poincare polynomial.
struct CriticalStratumData {
  std::string label;
  std::size_t dimension = 0;
  std::size_t two_f = 0;
  std::size_t two_b = 0;
  long long signature = 0;
  Polynomial poincare;

  std::size_t half_rank() const { return (two_f + two_b) / 2; }  // q_i
};

struct CriticalLevelData {
  Rational value;
  std::vector<CriticalStratumData> strata;
};

/// Invariants of the quotient on one regular interval.
struct QuotientProfile {
  Interval interval;
  long long signature = 0;
  Polynomial poincare;
  long long b2 = 0;
  Rational b_plus;           // (signature + b2) / 2 in six-manifold mode
  bool b_plus_valid = false; // non-negative integer
  bool palindromic = true;   // P(t) = t^4 P(1/t); informative only
};

struct MomentProfileSpec {
  std::size_t ambient_dimension = 6;
  std::vector<CriticalLevelData> critical_levels;  // strictly increasing
  QuotientProfile initial;  // first regular interval, above the minimum
};

struct ConstancyReport {
  bool constant = false;
  std::vector<QuotientProfile> profiles;
  std::vector<long long> sigma_b2_change;  // per interior level, must be 0
};

/// Validates stratum invariants (dimension + 2f + 2b = ambient) plus, in
/// strict six-manifold mode, the interior taxonomy: points of type (2,4)
/// or (4,2), surfaces of type (2,2), nothing of dimension 4.
void validate_spec(const MomentProfileSpec& spec, bool strict_taxonomy);

/// Metzler signature jump: sum over strata with odd half-rank of
/// (-1)^{b_i} sigma(X_i).
long long signature_jump(const CriticalLevelData& level);

/// Metzler Poincare-polynomial jump:
/// sum_i P(X_i)(t) (t^{2 b_i} - t^{2 f_i}) / (1 - t^2), exact division.
Polynomial poincare_jump(const CriticalLevelData& level);

/// Propagates the initial profile across every interior critical level;
/// one profile per open interval between consecutive critical values.
std::vector<QuotientProfile> propagate(const MomentProfileSpec& spec);

/// Lemma-style b+ constancy: propagates and checks that b+ is identical on
/// every regular interval; also reports the change of sigma + b2 per
/// interior level.
ConstancyReport bplus_constancy_check(const MomentProfileSpec& spec,
                                      bool strict_taxonomy = true);

/// Multiplicativity of the signature in coherently oriented fibrations.
long long fiber_signature(long long sigma_base, long long sigma_fiber);

struct DefectCertificate {
  Polynomial defect2;    // 2 (g'' g - (g')^2) in the b+ = 1 normal form
  Rational discriminant; // the closed-form Delta; always <= 0
};

/// The b+ = 1 log-concavity certificate: for [omega_a] = r alpha_1 and
/// [c] = sum lambda_i alpha_i in a diag(1, -1, ..., -1) basis,
///   defect2 = -S^2 t^2 - 2 S lambda_1 r t - (sum lambda_i^2) r^2,
///   Delta   = -4 S^2 (lambda_2^2 + ... + lambda_k^2) r^2,
/// with S = lambda_1^2 - lambda_2^2 - ... - lambda_k^2. When S != 0 the
/// quadratic discriminant of defect2 equals Delta; both are cross-checked.
DefectCertificate theorem51_defect(const Vec& lambda, const Rational& r);

}  // namespace dhlab::wallcross
