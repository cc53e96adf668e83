// Copyright 2026 The dhlab Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dhlab/errors.hpp"
#include "dhlab/rational.hpp"

namespace dhlab::polycert {

/// Dense univariate polynomial over the rationals. Canonical form: the
/// zero polynomial has an empty coefficient list; otherwise the leading
/// coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Vec coefficients);  // index = degree; trimmed

  static Polynomial constant(const Rational& c);
  /// c * t^k
  static Polynomial monomial(const Rational& c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is reported as -1.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const Vec& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
  }
  Rational leading_coefficient() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
  }

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  Polynomial scaled(const Rational& c) const;
  Polynomial derivative() const;
  Rational operator()(const Rational& t) const;  // Horner evaluation
  /// p(a*t + b)
  Polynomial compose_affine(const Rational& a, const Rational& b) const;

  /// Quotient and remainder of exact division by d (nonzero).
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;

  std::string to_string() const;  // human-readable, for reports

 private:
  Vec coeffs_;
};

/// Open interval, possibly unbounded on either side.
struct Interval {
  std::optional<Rational> lower;  // nullopt = -infinity
  std::optional<Rational> upper;  // nullopt = +infinity

  static Interval whole_line() { return {std::nullopt, std::nullopt}; }
  static Interval open(const Rational& lo, const Rational& hi);

  bool contains(const Rational& t) const;
};

enum class SignKind {
  PositiveThroughout,
  NegativeThroughout,
  IdenticallyZero,
  NonNegative,
  NonPositive,
  Mixed,
};

const char* sign_kind_name(SignKind kind);

struct SignVerdict {
  SignKind kind = SignKind::IdenticallyZero;
  /// Sample points with their exact values: strict witnesses of both signs
  /// for Mixed, a zero witness (when a rational root exists) for the weak
  /// verdicts.
  std::vector<std::pair<Rational, Rational>> witnesses;
};

/// h = f'' f - (f')^2; h > 0 where ln f is strictly convex.
Polynomial logconcavity_defect(const Polynomial& f);

/// b^2 - 4ac for a degree-2 polynomial.
Rational quadratic_discriminant(const Polynomial& p);

/// Exact sign analysis of p on the open interval range, via Sturm-sequence
/// root counting and isolation.
SignVerdict sign_on_interval(const Polynomial& p, const Interval& range);

/// Number of distinct real roots of p in the open interval (Sturm count).
std::size_t count_roots(const Polynomial& p, const Interval& range);

}  // namespace dhlab::polycert
