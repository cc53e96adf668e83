// Copyright 2026 The dhlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dhlab/dh.hpp"

#include <utility>

namespace dhlab::dhcore {

const char* verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::LogConcave: return "LogConcave";
    case Verdict::StrictlyNonLogConcave: return "StrictlyNonLogConcave";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

Polynomial dh_density(const ReducedComponentData& component) {
  const Rational qcc = exactlin::evaluate(component.form, component.chern,
                                          component.chern);
  const Rational qcw = exactlin::evaluate(component.form, component.chern,
                                          component.omega_a);
  const Rational qww = exactlin::evaluate(component.form, component.omega_a,
                                          component.omega_a);
  if (qww.sign() <= 0)
    throw Error(ErrorCode::NotPositive,
                "Q(omega_a, omega_a) must be positive on a reduced component");
  const Rational half(1, 2);
  return Polynomial(Vec{qww * half, qcw, qcc * half});
}

DHProfile profile_from_components(
    const std::vector<ReducedComponentData>& components) {
  DHProfile profile;
  for (const auto& component : components)
    profile.pieces.push_back({component.interval, dh_density(component)});
  for (std::size_t i = 0; i + 1 < profile.pieces.size(); ++i) {
    const auto& up = profile.pieces[i].first.upper;
    const auto& lo = profile.pieces[i + 1].first.lower;
    if (!up || !lo || *up != *lo)
      throw Error(ErrorCode::ParseError,
                  "component intervals must abut at shared walls");
    profile.walls.push_back(*up);
  }
  return profile;
}

WallCheck graham_wall_check(const DHProfile& profile, std::size_t wall_index) {
  if (wall_index >= profile.walls.size())
    throw Error(ErrorCode::ParseError, "wall index out of range");
  const Rational& w = profile.walls[wall_index];
  WallCheck check;
  check.wall_index = wall_index;
  check.wall = w;

  const std::pair<Interval, Polynomial>* left = nullptr;
  const std::pair<Interval, Polynomial>* right = nullptr;
  for (const auto& piece : profile.pieces) {
    if (piece.first.upper && *piece.first.upper == w) left = &piece;
    if (piece.first.lower && *piece.first.lower == w) right = &piece;
  }
  if (!left || !right) {
    check.boundary = true;
    check.pass = true;
    const auto* side = left ? left : right;
    if (!side)
      throw Error(ErrorCode::ParseError, "wall touches no piece");
    const Rational d = side->second.derivative()(w);
    check.left_derivative = left ? d : Rational(0);
    check.right_derivative = right ? d : Rational(0);
    return check;
  }
  check.left_derivative = left->second.derivative()(w);
  check.right_derivative = right->second.derivative()(w);
  check.pass = check.right_derivative <= check.left_derivative;
  return check;
}

LogConcavityReport log_concavity_verdict(const DHProfile& profile) {
  LogConcavityReport report;
  bool any_strictly_positive = false;
  bool all_weakly_nonpositive = true;
  for (const auto& [interval, density] : profile.pieces) {
    // ln f needs f > 0 on the piece interior; certified, not assumed.
    const SignVerdict positivity = polycert::sign_on_interval(density, interval);
    if (positivity.kind != SignKind::PositiveThroughout)
      throw Error(ErrorCode::NonPositiveDensity,
                  "density is not strictly positive on a piece");
    const SignVerdict sign =
        polycert::sign_on_interval(polycert::logconcavity_defect(density), interval);
    if (sign.kind == SignKind::PositiveThroughout) any_strictly_positive = true;
    if (sign.kind != SignKind::NonPositive &&
        sign.kind != SignKind::NegativeThroughout &&
        sign.kind != SignKind::IdenticallyZero)
      all_weakly_nonpositive = false;
    report.per_piece.push_back(sign);
  }
  bool walls_pass = true;
  for (std::size_t w = 0; w < profile.walls.size(); ++w) {
    report.wall_checks.push_back(graham_wall_check(profile, w));
    walls_pass = walls_pass && report.wall_checks.back().pass;
  }
  if (any_strictly_positive)
    report.verdict = Verdict::StrictlyNonLogConcave;
  else if (all_weakly_nonpositive && walls_pass)
    report.verdict = Verdict::LogConcave;
  else
    report.verdict = Verdict::Inconclusive;
  return report;
}

}  // namespace dhlab::dhcore
