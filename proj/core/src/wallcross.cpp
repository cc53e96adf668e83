// Copyright 2026 The dhlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dhlab/wallcross.hpp"

#include <set>
#include <utility>

namespace dhlab::wallcross {

namespace {

void validate_stratum(const CriticalStratumData& stratum,
                      std::size_t ambient_dimension) {
  if (stratum.dimension % 2 != 0 || stratum.two_f % 2 != 0 ||
      stratum.two_b % 2 != 0)
    throw Error(ErrorCode::IllegalStratum,
                "stratum '" + stratum.label + "': dimensions must be even");
  if (stratum.dimension + stratum.two_f + stratum.two_b != ambient_dimension)
    throw Error(ErrorCode::IllegalStratum,
                "stratum '" + stratum.label +
                    "': dimension + 2f + 2b must equal the ambient dimension");
  if (stratum.poincare(Rational(1)).sign() <= 0)
    throw Error(ErrorCode::IllegalStratum,
                "stratum '" + stratum.label + "': P(1) must be positive");
  for (long k = 0; k <= stratum.poincare.degree(); ++k) {
    const Rational c = stratum.poincare.coefficient(k);
    if (!c.is_integer() || c.sign() < 0)
      throw Error(ErrorCode::IllegalStratum,
                  "stratum '" + stratum.label +
                      "': Poincare coefficients must be non-negative integers");
    if (static_cast<std::size_t>(k) > stratum.dimension && c.sign() != 0)
      throw Error(ErrorCode::IllegalStratum,
                  "stratum '" + stratum.label +
                      "': Poincare degree exceeds the stratum dimension");
  }
}

long long t2_coefficient(const Polynomial& p) {
  const Rational c = p.coefficient(2);
  if (!c.is_integer())
    throw Error(ErrorCode::InternalInconsistency, "non-integer b2");
  return c.numerator().get_si();
}

}  // namespace

void validate_spec(const MomentProfileSpec& spec, bool strict_taxonomy) {
  if (spec.critical_levels.size() < 2)
    throw Error(ErrorCode::ParseError,
                "need at least the minimum and maximum critical levels");
  for (std::size_t i = 0; i + 1 < spec.critical_levels.size(); ++i)
    if (!(spec.critical_levels[i].value < spec.critical_levels[i + 1].value))
      throw Error(ErrorCode::ParseError,
                  "critical values must be strictly increasing");
  const bool six = spec.ambient_dimension == 6;
  for (std::size_t li = 0; li < spec.critical_levels.size(); ++li) {
    const auto& level = spec.critical_levels[li];
    if (level.strata.empty())
      throw Error(ErrorCode::ParseError, "critical level without strata");
    std::set<std::string> labels;
    const bool extremal = li == 0 || li + 1 == spec.critical_levels.size();
    for (const auto& stratum : level.strata) {
      if (!labels.insert(stratum.label).second)
        throw Error(ErrorCode::ParseError,
                    "duplicate stratum label '" + stratum.label + "'");
      validate_stratum(stratum, spec.ambient_dimension);
      if (!strict_taxonomy || !six) continue;
      if (extremal) {
        if (stratum.two_f != 0 && stratum.two_b != 0)
          throw Error(ErrorCode::IllegalStratum,
                      "extremal stratum '" + stratum.label +
                          "' must have a one-sided Hessian");
      } else {
        // Interior taxonomy forced by dimension counting in a six-manifold:
        // (2,4)/(4,2) points or (2,2) surfaces, nothing else.
        const bool point_ok =
            stratum.dimension == 0 &&
            ((stratum.two_f == 2 && stratum.two_b == 4) ||
             (stratum.two_f == 4 && stratum.two_b == 2));
        const bool surface_ok = stratum.dimension == 2 && stratum.two_f == 2 &&
                                stratum.two_b == 2;
        if (!point_ok && !surface_ok)
          throw Error(ErrorCode::IllegalStratum,
                      "interior stratum '" + stratum.label +
                          "' violates the six-manifold taxonomy");
      }
    }
  }
}

long long signature_jump(const CriticalLevelData& level) {
  long long jump = 0;
  for (const auto& stratum : level.strata) {
    if (stratum.half_rank() % 2 == 0) continue;
    const long long sign = (stratum.two_b / 2) % 2 == 0 ? +1 : -1;
    jump += sign * stratum.signature;
  }
  return jump;
}

Polynomial poincare_jump(const CriticalLevelData& level) {
  const Polynomial den(Vec{Rational(1), Rational(0), Rational(-1)});  // 1 - t^2
  Polynomial total;
  for (const auto& stratum : level.strata) {
    const Polynomial numer =
        stratum.poincare *
        (Polynomial::monomial(Rational(1), stratum.two_b) -
         Polynomial::monomial(Rational(1), stratum.two_f));
    const auto [quot, rem] = numer.divmod(den);
    if (!rem.is_zero())
      throw Error(ErrorCode::InternalDivisionInexact,
                  "stratum '" + stratum.label +
                      "': jump numerator not divisible by 1 - t^2");
    total = total + quot;
  }
  return total;
}

namespace {

QuotientProfile finish_profile(QuotientProfile profile) {
  for (long k = 0; k <= profile.poincare.degree(); ++k) {
    const Rational c = profile.poincare.coefficient(k);
    if (!c.is_integer() || c.sign() < 0)
      throw Error(ErrorCode::NegativeBetti,
                  "propagated Betti number is negative or fractional at t^" +
                      std::to_string(k));
  }
  profile.b2 = t2_coefficient(profile.poincare);
  profile.b_plus = Rational(Integer(static_cast<long>(profile.signature + profile.b2)), Integer(2));
  profile.b_plus_valid = profile.b_plus.is_integer() && profile.b_plus.sign() >= 0;
  if (!profile.b_plus_valid)
    throw Error(ErrorCode::NonIntegralBPlus,
                "(signature + b2)/2 is not a non-negative integer");
  profile.palindromic = true;
  for (long k = 0; k <= 4; ++k)
    if (profile.poincare.coefficient(k) !=
        profile.poincare.coefficient(4 - k))
      profile.palindromic = false;
  if (profile.poincare.degree() > 4) profile.palindromic = false;
  return profile;
}

}  // namespace

std::vector<QuotientProfile> propagate(const MomentProfileSpec& spec) {
  validate_spec(spec, /*strict_taxonomy=*/false);
  const auto& levels = spec.critical_levels;
  std::vector<QuotientProfile> profiles;
  QuotientProfile current = spec.initial;
  current.interval = Interval::open(levels[0].value, levels[1].value);
  profiles.push_back(finish_profile(current));
  for (std::size_t li = 1; li + 1 < levels.size(); ++li) {
    current.signature += signature_jump(levels[li]);
    current.poincare = current.poincare + poincare_jump(levels[li]);
    current.interval = Interval::open(levels[li].value, levels[li + 1].value);
    profiles.push_back(finish_profile(current));
  }
  return profiles;
}

ConstancyReport bplus_constancy_check(const MomentProfileSpec& spec,
                                      bool strict_taxonomy) {
  validate_spec(spec, strict_taxonomy);
  ConstancyReport report;
  report.profiles = propagate(spec);
  report.constant = true;
  for (const auto& profile : report.profiles)
    if (!profile.b_plus_valid || profile.b_plus != report.profiles[0].b_plus)
      report.constant = false;
  for (std::size_t li = 1; li + 1 < spec.critical_levels.size(); ++li)
    report.sigma_b2_change.push_back(
        signature_jump(spec.critical_levels[li]) +
        t2_coefficient(poincare_jump(spec.critical_levels[li])));
  return report;
}

long long fiber_signature(long long sigma_base, long long sigma_fiber) {
  return sigma_base * sigma_fiber;
}

DefectCertificate theorem51_defect(const Vec& lambda, const Rational& r) {
  if (lambda.empty())
    throw Error(ErrorCode::EmptyLambda, "lambda must be non-empty");
  if (r.sign() <= 0)
    throw Error(ErrorCode::NotPositive, "r must be positive");
  Rational sum_sq(0);
  for (const auto& l : lambda) sum_sq += l * l;
  const Rational tail_sq = sum_sq - lambda[0] * lambda[0];
  const Rational s = lambda[0] * lambda[0] - tail_sq;

  DefectCertificate cert;
  cert.defect2 = Polynomial(Vec{-(sum_sq * r * r),
                                Rational(-2) * s * lambda[0] * r,
                                -(s * s)});
  cert.discriminant = Rational(-4) * s * s * tail_sq * r * r;
  if (!s.is_zero() &&
      polycert::quadratic_discriminant(cert.defect2) != cert.discriminant)
    throw Error(ErrorCode::InternalInconsistency,
                "defect discriminant disagrees with the closed form");
  return cert;
}

}  // namespace dhlab::wallcross
