// Copyright 2026 The dhlab Authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dhlab/wallcross.hpp"
#include "helpers.hpp"

using namespace dhlab;
using namespace dhlab::wallcross;

namespace {

Polynomial poly(std::vector<long> coeffs) {
  Vec v;
  for (long c : coeffs) v.push_back(Rational(c));
  return Polynomial(v);
}

CriticalStratumData point_24() { return {"p24", 0, 2, 4, 1, poly({1})}; }
CriticalStratumData point_42() { return {"p42", 0, 4, 2, 1, poly({1})}; }
CriticalStratumData surface_22() { return {"s22", 2, 2, 2, 0, poly({1, 2, 1})}; }

CriticalLevelData level(const Rational& value,
                        std::vector<CriticalStratumData> strata) {
  // Make labels unique within the level.
  for (std::size_t i = 0; i < strata.size(); ++i)
    strata[i].label += "#" + std::to_string(i);
  return {value, std::move(strata)};
}

MomentProfileSpec spec_with_interior(
    std::vector<CriticalLevelData> interior, long long sigma0,
    const Polynomial& p0) {
  MomentProfileSpec spec;
  spec.critical_levels.push_back(
      level(Rational(0), {{"min", 0, 6, 0, 1, poly({1})}}));
  for (std::size_t i = 0; i < interior.size(); ++i) {
    interior[i].value = Rational(static_cast<long>(i + 1));
    spec.critical_levels.push_back(interior[i]);
  }
  spec.critical_levels.push_back(
      level(Rational(static_cast<long>(interior.size() + 1)),
            {{"max", 0, 0, 6, 1, poly({1})}}));
  spec.initial.signature = sigma0;
  spec.initial.poincare = p0;
  return spec;
}

}  // namespace

TEST_CASE("signature jumps") {
  CHECK(signature_jump(level(Rational(0), {point_24()})) == 1);
  CHECK(signature_jump(level(Rational(0), {point_42()})) == -1);
  CHECK(signature_jump(level(Rational(0), {surface_22()})) == 0);
  CHECK(signature_jump(level(Rational(0), {point_24(), point_42()})) == 0);
}

TEST_CASE("poincare jumps via exact division") {
  CHECK(poincare_jump(level(Rational(0), {point_24()})) == poly({0, 0, -1}));
  CHECK(poincare_jump(level(Rational(0), {point_42()})) == poly({0, 0, 1}));
  CHECK(poincare_jump(level(Rational(0), {surface_22()})).is_zero());
}

TEST_CASE("propagate across documented profiles") {
  {
    // No interior levels: initial profile echoed, T4 quotient flavor.
    const auto profiles =
        propagate(spec_with_interior({}, 0, poly({1, 4, 6, 4, 1})));
    REQUIRE(profiles.size() == 1);
    CHECK(profiles[0].b2 == 6);
    CHECK(profiles[0].b_plus == Rational(3));
    CHECK(profiles[0].palindromic);
  }
  {
    const auto profiles = propagate(spec_with_interior(
        {level(Rational(0), {point_24()}), level(Rational(0), {point_42()})},
        1, poly({1, 0, 1})));
    REQUIRE(profiles.size() == 3);
    CHECK(profiles[0].signature == 1);
    CHECK(profiles[1].signature == 2);
    CHECK(profiles[2].signature == 1);
    CHECK(profiles[0].b2 == 1);
    CHECK(profiles[1].b2 == 0);
    CHECK(profiles[2].b2 == 1);
    for (const auto& p : profiles) CHECK(p.b_plus == Rational(1));
  }
  {
    const auto profiles = propagate(spec_with_interior(
        {level(Rational(0), {surface_22()})}, 1, poly({1, 0, 1})));
    REQUIRE(profiles.size() == 2);
    CHECK(profiles[0].signature == profiles[1].signature);
    CHECK(profiles[0].poincare == profiles[1].poincare);
  }
  {
    // A (4,2)-point crossed from b2 = 0 would drive a Betti number negative.
    auto spec = spec_with_interior({level(Rational(0), {point_24()})}, 1,
                                   poly({1}));
    CHECK_THROWS_AS(propagate(spec), Error);
  }
}

TEST_CASE("b+ constancy and the taxonomy guard") {
  {
    const auto report = bplus_constancy_check(
        spec_with_interior({level(Rational(0), {point_24(), surface_22()}),
                            level(Rational(0), {point_42()})},
                           1, poly({1, 0, 1})),
        true);
    CHECK(report.constant);
    for (long long change : report.sigma_b2_change) CHECK(change == 0);
  }
  {
    const auto report =
        bplus_constancy_check(spec_with_interior({}, 1, poly({1, 0, 1})), true);
    CHECK(report.constant);
    CHECK(report.sigma_b2_change.empty());
  }
  {
    auto spec = spec_with_interior(
        {level(Rational(0), {{"bad", 4, 2, 0, 1, poly({1, 0, 1, 0, 1})}})}, 1,
        poly({1, 0, 1}));
    CHECK_THROWS_AS(bplus_constancy_check(spec, true), Error);
    // The same spec is admitted in exploratory mode.
    CHECK_NOTHROW(bplus_constancy_check(spec, false));
  }
}

TEST_CASE("sigma + b2 conservation over all legal interior multisets") {
  const std::vector<CriticalStratumData> kinds = {point_24(), point_42(),
                                                  surface_22()};
  // All multisets of size 1..4 over the three legal types.
  for (std::size_t size = 1; size <= 4; ++size) {
    std::vector<std::size_t> pick(size, 0);
    while (true) {
      std::vector<CriticalStratumData> strata;
      for (std::size_t i : pick) strata.push_back(kinds[i]);
      const auto l = level(Rational(1), strata);
      CHECK(signature_jump(l) +
                poincare_jump(l).coefficient(2).numerator().get_si() == 0);
      std::size_t i = 0;
      while (i < size && pick[i] == kinds.size() - 1) pick[i++] = 0;
      if (i == size) break;
      ++pick[i];
    }
  }
}

TEST_CASE("fiber signature is multiplicative") {
  CHECK(fiber_signature(1, 0) == 0);
  CHECK(fiber_signature(1, 1) == 1);
  CHECK(fiber_signature(0, 1) == 0);
  CHECK(fiber_signature(-2, 3) == -6);
}

TEST_CASE("theorem51_defect on the documented instances") {
  {
    const auto cert = theorem51_defect(Vec{Rational(1)}, Rational(1));
    CHECK(cert.defect2 == poly({-1, -2, -1}));
    CHECK(cert.discriminant == Rational(0));
  }
  {
    const auto cert = theorem51_defect(Vec{Rational(0), Rational(0)}, Rational(1));
    CHECK(cert.defect2.is_zero());
    CHECK(cert.discriminant == Rational(0));
  }
  {
    const auto cert = theorem51_defect(Vec{Rational(1), Rational(1)}, Rational(2));
    CHECK(cert.defect2 == poly({-8}));
    CHECK(cert.discriminant == Rational(0));
  }
  CHECK_THROWS_AS(theorem51_defect(Vec{}, Rational(1)), Error);
  CHECK_THROWS_AS(theorem51_defect(Vec{Rational(1)}, Rational(0)), Error);
}

TEST_CASE("theorem51 certificate is never positive, discriminant never positive") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    Vec lambda(1 + rng() % 6);
    for (auto& l : lambda) l = Rational(Integer(num(rng)), Integer(den(rng)));
    const Rational r(Integer(1 + rng() % 9), Integer(den(rng)));
    const auto cert = theorem51_defect(lambda, r);
    CHECK(cert.discriminant.sign() <= 0);
    const auto verdict =
        polycert::sign_on_interval(cert.defect2, polycert::Interval::whole_line());
    const bool ok = verdict.kind == polycert::SignKind::NonPositive ||
                    verdict.kind == polycert::SignKind::NegativeThroughout ||
                    verdict.kind == polycert::SignKind::IdenticallyZero;
    CHECK(ok);
  }
}

TEST_CASE("division exactness on random legal strata") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    CriticalStratumData s;
    s.label = "r";
    s.dimension = 2 * (rng() % 3);
    const std::size_t normal = (6 - s.dimension) / 2;
    const std::size_t f = 1 + rng() % (normal - 1 ? normal - 1 : 1);
    s.two_f = 2 * f;
    s.two_b = 6 - s.dimension - s.two_f;
    s.signature = static_cast<long long>(rng() % 5) - 2;
    Vec p(s.dimension + 1);
    for (auto& x : p) x = Rational(static_cast<long>(rng() % 3));
    p[0] = Rational(1);
    s.poincare = Polynomial(p);
    CHECK_NOTHROW(poincare_jump({Rational(0), {s}}));
  }
}
