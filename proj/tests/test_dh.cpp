// Copyright 2026 The dhlab Authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dhlab/dh.hpp"
#include "helpers.hpp"

using namespace dhlab;
using namespace dhlab::dhcore;

namespace {

Vec rat(std::vector<long> v) {
  Vec out;
  for (long x : v) out.push_back(Rational(x));
  return out;
}

Polynomial poly(std::vector<long> coeffs) {
  Vec v;
  for (long c : coeffs) v.push_back(Rational(c));
  return Polynomial(v);
}

const Interval unit = Interval::open(Rational(-1), Rational(1));

}  // namespace

TEST_CASE("dh_density from reduced-component data") {
  {
    ReducedComponentData comp{SymmetricForm::hyperbolic_sum(3),
                              rat({1, 1, 0, 0, 0, 0}), rat({0, 0, 1, 1, 0, 0}),
                              unit};
    CHECK(dh_density(comp) == poly({1, 0, 1}));
  }
  {
    ReducedComponentData comp{SymmetricForm::hyperbolic_sum(1), rat({1, 1}),
                              rat({0, 0}), unit};
    CHECK(dh_density(comp) == poly({1}));
  }
  {
    ReducedComponentData comp{SymmetricForm::diagonal({1, -1, -1}),
                              rat({1, 0, 0}), rat({0, 1, 0}), unit};
    CHECK(dh_density(comp) ==
          Polynomial(Vec{Rational(Integer(1), Integer(2)), Rational(0),
                         Rational(Integer(-1), Integer(2))}));
  }
  {
    ReducedComponentData bad{SymmetricForm::diagonal({-1, 1}), rat({1, 0}),
                             rat({0, 1}), unit};
    CHECK_THROWS_AS(dh_density(bad), Error);  // Q(omega, omega) <= 0
  }
}

TEST_CASE("graham_wall_check compares one-sided derivatives") {
  DHProfile profile;
  profile.pieces.push_back({Interval::open(Rational(-1), Rational(0)), poly({1, 1})});
  profile.pieces.push_back({Interval::open(Rational(0), Rational(1)), poly({1})});
  profile.walls.push_back(Rational(0));
  {
    const auto w = graham_wall_check(profile, 0);
    CHECK(w.left_derivative == Rational(1));
    CHECK(w.right_derivative == Rational(0));
    CHECK(w.pass);
  }
  profile.pieces[0].second = poly({1});
  profile.pieces[1].second = poly({1, 1});
  {
    const auto w = graham_wall_check(profile, 0);
    CHECK(w.left_derivative == Rational(0));
    CHECK(w.right_derivative == Rational(1));
    CHECK(!w.pass);
  }
  profile.pieces[0].second = poly({2, 1, 1});
  profile.pieces[1].second = poly({2, 1, 1});
  {
    const auto w = graham_wall_check(profile, 0);
    CHECK(w.left_derivative == w.right_derivative);
    CHECK(w.pass);
  }
}

TEST_CASE("log_concavity_verdict on single pieces") {
  const Rational half(Integer(1), Integer(2));
  {
    DHProfile profile;
    profile.pieces.push_back({Interval::open(-half, half), poly({1, 0, 1})});
    const auto report = log_concavity_verdict(profile);
    CHECK(report.verdict == Verdict::StrictlyNonLogConcave);
    CHECK(report.per_piece[0].kind == SignKind::PositiveThroughout);
  }
  {
    DHProfile profile;
    profile.pieces.push_back(
        {Interval::open(-half, half),
         Polynomial(Vec{half, Rational(0), -half})});
    CHECK(log_concavity_verdict(profile).verdict == Verdict::LogConcave);
  }
  {
    DHProfile profile;
    profile.pieces.push_back({Interval::open(-half, half), poly({5})});
    CHECK(log_concavity_verdict(profile).verdict == Verdict::LogConcave);
  }
  {
    DHProfile profile;
    profile.pieces.push_back({Interval::open(Rational(0), Rational(2)), poly({-1, 1})});
    CHECK_THROWS_AS(log_concavity_verdict(profile), Error);  // f <= 0 inside
  }
}

TEST_CASE("failing wall makes a piecewise log-concave profile fail") {
  DHProfile profile;
  profile.pieces.push_back({Interval::open(Rational(-1), Rational(0)), poly({1})});
  profile.pieces.push_back({Interval::open(Rational(0), Rational(1)), poly({1, 1})});
  profile.walls.push_back(Rational(0));
  const auto report = log_concavity_verdict(profile);
  CHECK(!report.wall_checks[0].pass);
  CHECK(report.verdict == Verdict::Inconclusive);
}

TEST_CASE("profile_from_components derives walls and rejects gaps") {
  std::vector<ReducedComponentData> comps;
  comps.push_back({SymmetricForm::diagonal({1, 1}), rat({1, 0}), rat({0, 1}),
                   Interval::open(Rational(-1), Rational(0))});
  comps.push_back({SymmetricForm::diagonal({1, 1}), rat({1, 0}), rat({0, 1}),
                   Interval::open(Rational(0), Rational(1))});
  const auto profile = profile_from_components(comps);
  CHECK(profile.pieces.size() == 2);
  REQUIRE(profile.walls.size() == 1);
  CHECK(profile.walls[0] == Rational(0));
  comps[1].interval = Interval::open(Rational(1), Rational(2));
  CHECK_THROWS_AS(profile_from_components(comps), Error);
}

TEST_CASE("closed-form defect identity when Q(c, omega) = 0") {
  std::mt19937_64 rng(23);
  int accepted = 0;
  while (accepted < 40) {
    const std::size_t n = 2 + rng() % 5;
    const auto q = testutil::random_symmetric_form(rng, n);
    const Vec omega = testutil::random_int_vector(rng, n);
    const Vec c = testutil::random_int_vector(rng, n);
    if (exactlin::evaluate(q, omega, omega).sign() <= 0) continue;
    if (!exactlin::evaluate(q, c, omega).is_zero()) continue;
    ++accepted;
    ReducedComponentData comp{q, omega, c, unit};
    const Polynomial f = dh_density(comp);
    const Rational qcc = exactlin::evaluate(q, c, c);
    const Rational qww = exactlin::evaluate(q, omega, omega);
    const Polynomial two_h = polycert::logconcavity_defect(f).scaled(Rational(2));
    CHECK(two_h == Polynomial(Vec{qcc * qww, Rational(0), -(qcc * qcc)}));
  }
}

TEST_CASE("affine reparameterization shifts the density") {
  std::mt19937_64 rng(29);
  int accepted = 0;
  while (accepted < 40) {
    const std::size_t n = 2 + rng() % 5;
    const auto q = testutil::random_symmetric_form(rng, n);
    const Vec omega = testutil::random_int_vector(rng, n);
    const Vec c = testutil::random_int_vector(rng, n);
    const Rational s(static_cast<long>(rng() % 5) - 2);
    // Moving the reference point by s replaces omega_a with omega_a + s c.
    Vec shifted = omega;
    for (std::size_t i = 0; i < n; ++i) shifted[i] += s * c[i];
    if (exactlin::evaluate(q, omega, omega).sign() <= 0) continue;
    if (exactlin::evaluate(q, shifted, shifted).sign() <= 0) continue;
    ++accepted;
    const Polynomial f = dh_density({q, omega, c, unit});
    const Polynomial g = dh_density({q, shifted, c, unit});
    CHECK(g == f.compose_affine(Rational(1), s));
  }
}
