// Copyright 2026 The dhlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dhlab/construct.hpp"

namespace dhlab::construct {

Rational choose_epsilon(const SymmetricForm& form, const Vec& omega0,
                        const Vec& c) {
  const Rational qww = exactlin::evaluate(form, omega0, omega0);
  const Rational qcc = exactlin::evaluate(form, c, c);
  if (qww.sign() <= 0 || qcc.sign() <= 0)
    throw Error(ErrorCode::NotPositive,
                "choose_epsilon needs Q(omega0,omega0) > 0 and Q(c,c) > 0");
  // Smallest positive integer m with (1/m)^2 <= qww / (2 qcc).
  const Rational target = Rational(2) * qcc / qww;  // need m^2 >= target
  Integer m = 1;
  while (Rational(Integer(m * m)) < target) ++m;
  return Rational(Integer(1), m);
}

CounterexampleReport build_counterexample(const CounterexampleInput& input) {
  if (!exactlin::is_integral(input.omega0))
    throw Error(ErrorCode::ParseError, "omega0 must have integer coordinates");

  CounterexampleReport report;
  report.name = input.name;
  report.c = exactlin::find_positive_orthogonal_class(input.form, input.omega0);
  report.epsilon = choose_epsilon(input.form, input.omega0, report.c);

  const Rational qcc = exactlin::evaluate(input.form, report.c, report.c);
  const Rational qcw = exactlin::evaluate(input.form, report.c, input.omega0);
  const Rational qww = exactlin::evaluate(input.form, input.omega0, input.omega0);
  const Rational half(1, 2);
  report.density = Polynomial(Vec{qww * half, qcw, qcc * half});
  report.interval = Interval::open(-report.epsilon, report.epsilon);
  report.defect = polycert::logconcavity_defect(report.density);
  report.certificate = polycert::sign_on_interval(report.defect, report.interval);
  if (report.certificate.kind != polycert::SignKind::PositiveThroughout)
    throw Error(ErrorCode::CertificateFailed,
                "defect failed strict positivity on (-epsilon, epsilon)");
  return report;
}

bool defect_identity_check(const CounterexampleReport& report,
                           const SymmetricForm& form, const Vec& omega0) {
  Rational qcc(0), qww(0);
  try {
    qcc = exactlin::evaluate(form, report.c, report.c);
    qww = exactlin::evaluate(form, omega0, omega0);
  } catch (const Error&) {
    return false;
  }
  const Polynomial expected(Vec{qcc * qww, Rational(0), -(qcc * qcc)});
  return report.defect.scaled(Rational(2)) == expected;
}

}  // namespace dhlab::construct
