// Copyright 2026 The dhlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dhlab/polynomial.hpp"

#include <algorithm>
#include <utility>

namespace dhlab::polycert {

Polynomial::Polynomial(Vec coefficients) : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(Vec{c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t k) {
  Vec v(k + 1, Rational(0));
  v[k] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const {
  Vec v = coeffs_;
  for (auto& c : v) c = -c;
  return Polynomial(std::move(v));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Vec v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  Vec v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Vec v = coeffs_;
  for (auto& x : v) x *= c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  Vec v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    v[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return Polynomial(std::move(v));
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial Polynomial::compose_affine(const Rational& a, const Rational& b) const {
  const Polynomial inner(Vec{b, a});
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * inner + Polynomial::constant(*it);
  return acc;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw std::domain_error("Polynomial: division by zero");
  Vec rem = coeffs_;
  const long dd = d.degree();
  if (degree() < dd) return {Polynomial(), *this};
  Vec quot(coeffs_.size() - dd, Rational(0));
  const Rational lead = d.leading_coefficient();
  for (long k = degree(); k >= dd; --k) {
    const Rational f = rem[k] / lead;
    if (f.is_zero()) continue;
    quot[k - dd] = f;
    for (long j = 0; j <= dd; ++j) rem[k - dd + j] -= f * d.coeffs_[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (long k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    if (!out.empty()) out += c.sign() > 0 ? " + " : " - ";
    else if (c.sign() < 0) out += "-";
    const Rational a = c.abs();
    const bool unit = a == Rational(1) && k > 0;
    if (!unit) out += a.to_string();
    if (k > 0) {
      if (!unit) out += "*";
      out += "t";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

Interval Interval::open(const Rational& lo, const Rational& hi) {
  if (!(lo < hi))
    throw Error(ErrorCode::ParseError, "interval requires lower < upper");
  return Interval{lo, hi};
}

bool Interval::contains(const Rational& t) const {
  if (lower && !(*lower < t)) return false;
  if (upper && !(t < *upper)) return false;
  return true;
}

const char* sign_kind_name(SignKind kind) {
  switch (kind) {
    case SignKind::PositiveThroughout: return "PositiveThroughout";
    case SignKind::NegativeThroughout: return "NegativeThroughout";
    case SignKind::IdenticallyZero: return "IdenticallyZero";
    case SignKind::NonNegative: return "NonNegative";
    case SignKind::NonPositive: return "NonPositive";
    case SignKind::Mixed: return "Mixed";
  }
  return "?";
}

Polynomial logconcavity_defect(const Polynomial& f) {
  const Polynomial df = f.derivative();
  return df.derivative() * f - df * df;
}

Rational quadratic_discriminant(const Polynomial& p) {
  if (p.degree() != 2)
    throw Error(ErrorCode::NotQuadratic, "discriminant needs degree exactly 2");
  const Rational a = p.coefficient(2), b = p.coefficient(1), c = p.coefficient(0);
  return b * b - Rational(4) * a * c;
}

namespace {

// Divide out the rational content, keeping the sign; bounds coefficient
// growth in Sturm remainder chains.
Polynomial primitive_part(const Polynomial& p) {
  if (p.is_zero()) return p;
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& c : p.coefficients()) {
    num_gcd = gcd(num_gcd, c.numerator());
    den_lcm = lcm(den_lcm, c.denominator());
  }
  return p.scaled(Rational(den_lcm, num_gcd));
}

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  std::vector<Polynomial> seq;
  seq.push_back(primitive_part(p));
  Polynomial d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(primitive_part(d));
  while (true) {
    const Polynomial rem = seq[seq.size() - 2].divmod(seq.back()).second;
    if (rem.is_zero()) break;
    seq.push_back(primitive_part(-rem));
  }
  return seq;
}

int variations_at(const std::vector<Polynomial>& seq, const Rational& x) {
  int changes = 0, prev = 0;
  for (const auto& s : seq) {
    const int sign = s(x).sign();
    if (sign == 0) continue;
    if (prev != 0 && sign != prev) ++changes;
    prev = sign;
  }
  return changes;
}

// Sturm count of distinct roots in the half-open interval (a, b].
std::size_t roots_in_halfopen(const std::vector<Polynomial>& seq,
                              const Rational& a, const Rational& b) {
  return static_cast<std::size_t>(variations_at(seq, a) - variations_at(seq, b));
}

// 1 + max |a_i| / |a_n|; every real root lies strictly inside (-B, B).
Rational cauchy_bound(const Polynomial& p) {
  const Rational lead = p.leading_coefficient().abs();
  Rational m(0);
  for (long k = 0; k < p.degree(); ++k) {
    const Rational v = p.coefficient(k).abs() / lead;
    if (v > m) m = v;
  }
  return m + Rational(1);
}

// Squarefree part p / gcd(p, p'); same root set, simple roots.
Polynomial squarefree_part(const Polynomial& p) {
  Polynomial a = primitive_part(p), b = primitive_part(p.derivative());
  while (!b.is_zero()) {
    Polynomial r = primitive_part(a.divmod(b).second);
    a = std::move(b);
    b = std::move(r);
  }
  return primitive_part(p.divmod(a).first);
}

std::vector<Integer> small_divisors(const Integer& n) {
  std::vector<Integer> out;
  const Integer a = abs(n);
  for (Integer d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      out.push_back(d);
      out.push_back(a / d);
    }
  }
  return out;
}

// Rational roots of a primitive integer polynomial, found by divisor
// enumeration. Skipped (empty result) when the end coefficients are too
// large to enumerate; callers use the result only to sharpen witnesses.
std::vector<Rational> rational_roots(Polynomial& q) {
  std::vector<Rational> roots;
  while (q.degree() >= 1 && q.coefficient(0).is_zero()) {
    roots.push_back(Rational(0));
    q = q.divmod(Polynomial::monomial(Rational(1), 1)).first;
  }
  if (q.degree() < 1) return roots;
  const Integer limit = 1000000;
  if (abs(q.coefficient(0).numerator()) > limit ||
      abs(q.leading_coefficient().numerator()) > limit)
    return roots;
  for (const Integer& u : small_divisors(q.coefficient(0).numerator())) {
    for (const Integer& v : small_divisors(q.leading_coefficient().numerator())) {
      for (int sign : {+1, -1}) {
        const Rational r(sign > 0 ? u : Integer(-u), v);
        while (q.degree() >= 1 && q(r).is_zero()) {
          roots.push_back(r);
          q = q.divmod(Polynomial(Vec{-r, Rational(1)})).first;
        }
      }
    }
  }
  return roots;
}

struct RootBracket {
  Rational lo, hi;  // lo == hi pins a rational root exactly
  bool exact() const { return lo == hi; }
};

// A point x in (a, a + delta) with no root of q in (a, x] and q(x) != 0;
// halves toward a until the root-free margin is hit.
Rational point_right_of(const std::vector<Polynomial>& seq, const Polynomial& q,
                        const Rational& a, const Rational& limit) {
  Rational step = (limit - a) / Rational(2);
  while (true) {
    const Rational x = a + step;
    if (!q(x).is_zero() && roots_in_halfopen(seq, a, x) == 0) return x;
    step /= Rational(2);
  }
}

// A point x < b with exactly `expect` roots of q in (x, b] and q(x) != 0.
Rational point_left_of(const std::vector<Polynomial>& seq, const Polynomial& q,
                       const Rational& b, const Rational& limit,
                       std::size_t expect) {
  Rational step = (b - limit) / Rational(2);
  while (true) {
    const Rational x = b - step;
    if (!q(x).is_zero() && roots_in_halfopen(seq, x, b) == expect) return x;
    step /= Rational(2);
  }
}

// Isolates `count` simple roots of q lying in (a, b), q(a) != 0, q(b) != 0.
void isolate(const std::vector<Polynomial>& seq, const Polynomial& q,
             const Rational& a, const Rational& b, std::size_t count,
             std::vector<RootBracket>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back({a, b});
    return;
  }
  const Rational mid = (a + b) / Rational(2);
  if (q(mid).is_zero()) {
    // A rational root the divisor search missed; pin it and recurse on
    // both sides from root-free shoulders.
    const std::size_t left = roots_in_halfopen(seq, a, mid) - 1;
    if (left > 0) {
      const Rational x = point_left_of(seq, q, mid, a, 1);
      isolate(seq, q, a, x, left, out);
    }
    out.push_back({mid, mid});
    const std::size_t right = count - left - 1;
    if (right > 0) {
      const Rational x = point_right_of(seq, q, mid, b);
      isolate(seq, q, x, b, right, out);
    }
    return;
  }
  const std::size_t left = roots_in_halfopen(seq, a, mid);
  isolate(seq, q, a, mid, left, out);
  isolate(seq, q, mid, b, count - left, out);
}

}  // namespace

std::size_t count_roots(const Polynomial& p, const Interval& range) {
  if (p.degree() < 1) return 0;
  const Polynomial q = squarefree_part(p);
  if (q.degree() < 1) return 0;
  const auto seq = sturm_sequence(q);
  const Rational bound = cauchy_bound(q);
  const Rational lo = range.lower
                          ? *range.lower
                          : std::min(-bound, (range.upper ? *range.upper
                                                          : Rational(0)) -
                                                 Rational(1));
  const Rational hi =
      range.upper ? *range.upper : std::max(bound, lo + Rational(1));
  if (!(lo < hi)) return 0;
  std::size_t n = roots_in_halfopen(seq, lo, hi);
  if (range.upper && n > 0 && q(hi).is_zero()) --n;  // open at the top
  return n;
}

SignVerdict sign_on_interval(const Polynomial& p, const Interval& range) {
  if (range.lower && range.upper && !(*range.lower < *range.upper))
    throw Error(ErrorCode::ParseError, "interval requires lower < upper");
  if (p.is_zero()) return {SignKind::IdenticallyZero, {}};

  // Working window: all roots lie strictly inside the Cauchy bound, so the
  // sign pattern on the window determines it on any unbounded tail.
  const Rational bound = cauchy_bound(p);
  const Rational lo =
      range.lower ? *range.lower
                  : std::min(-bound, (range.upper ? *range.upper : Rational(0)) -
                                         Rational(1));
  const Rational hi =
      range.upper ? *range.upper : std::max(bound, lo + Rational(1));

  if (p.degree() == 0) {
    const Rational v = p.coefficient(0);
    return {v.sign() > 0 ? SignKind::PositiveThroughout
                         : SignKind::NegativeThroughout,
            {{(lo + hi) / Rational(2), v}}};
  }

  Polynomial q = squarefree_part(p);
  // Strip endpoint roots (they are outside the open interval).
  for (const Rational& end : {lo, hi})
    while (q.degree() >= 1 && q(end).is_zero())
      q = q.divmod(Polynomial(Vec{-end, Rational(1)})).first;

  // Cheaply found rational roots sharpen the weak-verdict witnesses below;
  // isolation itself runs on q and does not depend on them.
  std::vector<Rational> zero_points;
  {
    Polynomial scratch = q;
    for (const Rational& r : rational_roots(scratch))
      if (lo < r && r < hi) zero_points.push_back(r);
  }

  std::vector<RootBracket> brackets;
  const auto seq = sturm_sequence(q);
  if (q.degree() >= 1) {
    const std::size_t n = roots_in_halfopen(seq, lo, hi);
    isolate(seq, q, lo, hi, n, brackets);
  }
  std::sort(brackets.begin(), brackets.end(),
            [](const RootBracket& a, const RootBracket& b) { return a.lo < b.lo; });

  if (brackets.empty()) {
    const Rational s = (lo + hi) / Rational(2);
    const Rational v = p(s);
    return {v.sign() > 0 ? SignKind::PositiveThroughout
                         : SignKind::NegativeThroughout,
            {{s, v}}};
  }

  // One sample point per root-free gap; signs there cover the interval.
  std::vector<Rational> samples;
  samples.push_back(point_right_of(seq, q, lo, brackets.front().lo > lo
                                                   ? brackets.front().lo
                                                   : brackets.front().hi));
  for (std::size_t i = 0; i + 1 < brackets.size(); ++i) {
    const Rational &a = brackets[i].hi, &b = brackets[i + 1].lo;
    if (a < b && !q(a).is_zero() && !brackets[i].exact())
      samples.push_back(a);
    else
      samples.push_back(point_right_of(
          seq, q, a, b > a ? b : brackets[i + 1].hi));
  }
  samples.push_back(point_left_of(seq, q, hi, brackets.back().lo, 0));

  std::optional<std::pair<Rational, Rational>> pos, neg;
  for (const auto& s : samples) {
    const Rational v = p(s);
    if (v.sign() > 0 && !pos) pos = {s, v};
    if (v.sign() < 0 && !neg) neg = {s, v};
  }

  SignVerdict verdict;
  if (pos && neg) {
    verdict.kind = SignKind::Mixed;
    verdict.witnesses = {*pos, *neg};
    return verdict;
  }
  verdict.kind = pos ? SignKind::NonNegative : SignKind::NonPositive;
  for (const auto& br : brackets)
    if (br.exact()) zero_points.push_back(br.lo);
  std::sort(zero_points.begin(), zero_points.end());
  zero_points.erase(std::unique(zero_points.begin(), zero_points.end()),
                    zero_points.end());
  for (const auto& r : zero_points) verdict.witnesses.push_back({r, Rational(0)});
  if (pos) verdict.witnesses.push_back(*pos);
  if (neg) verdict.witnesses.push_back(*neg);
  return verdict;
}

}  // namespace dhlab::polycert
