// Copyright 2026 The dhlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dhlab/lefschetz.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace dhlab::lefschetz {

namespace {

// One nonzero kernel vector of the rows x cols matrix, or nullopt when the
// kernel is trivial. Plain Gauss-Jordan with first-nonzero pivoting.
std::optional<Vec> kernel_vector(std::vector<Vec> m, std::size_t cols) {
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pr = row;
    while (pr < m.size() && m[pr][col].is_zero()) ++pr;
    if (pr == m.size()) continue;
    std::swap(m[row], m[pr]);
    const Rational inv = Rational(1) / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      const Rational f = m[r][col];
      for (std::size_t cc = 0; cc < cols; ++cc) m[r][cc] -= f * m[row][cc];
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (pivot_col.size() == cols) return std::nullopt;

  // First free column, with pivot variables back-substituted.
  std::size_t free_col = 0;
  while (free_col < cols &&
         std::find(pivot_col.begin(), pivot_col.end(), free_col) !=
             pivot_col.end())
    ++free_col;
  Vec kernel(cols, Rational(0));
  kernel[free_col] = Rational(1);
  for (std::size_t r = 0; r < pivot_col.size(); ++r)
    kernel[pivot_col[r]] = -m[r][free_col];
  return kernel;
}

void validate_ring(const FourManifoldRing& ring) {
  if (ring.form.dimension() != ring.b2)
    throw Error(ErrorCode::DimensionMismatch,
                "intersection form dimension must equal b2");
  if (ring.cup_12_3.size() != ring.b1)
    throw Error(ErrorCode::DimensionMismatch, "cup tensor must be b1 x b2 x b1");
  for (const auto& slab : ring.cup_12_3) {
    if (slab.size() != ring.b2)
      throw Error(ErrorCode::DimensionMismatch, "cup tensor must be b1 x b2 x b1");
    for (const auto& fiber : slab)
      if (fiber.size() != ring.b1)
        throw Error(ErrorCode::DimensionMismatch,
                    "cup tensor must be b1 x b2 x b1");
  }
  if (ring.pairing_13.size() != ring.b1)
    throw Error(ErrorCode::DimensionMismatch, "pairing must be b1 x b1");
  for (const auto& prow : ring.pairing_13)
    if (prow.size() != ring.b1)
      throw Error(ErrorCode::DimensionMismatch, "pairing must be b1 x b1");
  if (ring.b1 > 0 && kernel_vector(ring.pairing_13, ring.b1))
    throw Error(ErrorCode::NotPositive,
                "H1 x H3 duality pairing is singular");
  if (exactlin::inertia(ring.form).b_zero != 0)
    throw Error(ErrorCode::NotPositive, "intersection form is degenerate");
  if (ring.volume_normalization.is_zero())
    throw Error(ErrorCode::NotPositive, "volume normalization must be nonzero");
}

void validate_data(const SixManifoldLefschetzData& data) {
  validate_ring(data.ring);
  if (data.omega0.size() != data.ring.b2 || data.beta2.size() != data.ring.b2)
    throw Error(ErrorCode::DimensionMismatch,
                "omega0 and beta2 must live in H2 of the base");
  if (data.epsilon.sign() <= 0)
    throw Error(ErrorCode::NotPositive, "epsilon must be positive");
  if (exactlin::evaluate(data.ring.form, data.omega0, data.omega0).sign() <= 0)
    throw Error(ErrorCode::NotPositive, "Q(omega0, omega0) must be positive");
}

// Matrix of L_[w]: H1 -> H3 from the cup tensor.
std::vector<Vec> lefschetz_matrix(const FourManifoldRing& ring, const Vec& w) {
  std::vector<Vec> m(ring.b1, Vec(ring.b1, Rational(0)));
  for (std::size_t k = 0; k < ring.b1; ++k)
    for (std::size_t i = 0; i < ring.b1; ++i)
      for (std::size_t j = 0; j < ring.b2; ++j)
        m[k][i] += ring.cup_12_3[i][j][k] * w[j];
  return m;
}

}  // namespace

bool check_hl_four(const FourManifoldRing& ring, const Vec& omega) {
  validate_ring(ring);
  if (omega.size() != ring.b2)
    throw Error(ErrorCode::DimensionMismatch, "omega must live in H2");
  // k = 2 is the volume pairing; k = 1 is the H1 -> H3 rank test; k = 0 is
  // the identity.
  if (exactlin::evaluate(ring.form, omega, omega).is_zero()) return false;
  if (ring.b1 == 0) return true;
  return !kernel_vector(lefschetz_matrix(ring, omega), ring.b1).has_value();
}

InjectivityResult check_map1(const SixManifoldLefschetzData& data) {
  validate_data(data);
  if (data.ring.b1 == 0) return {true, {}};
  const Rational e = data.epsilon;
  Vec w(data.ring.b2);
  for (std::size_t j = 0; j < data.ring.b2; ++j)
    w[j] = Rational(2) * e * data.omega0[j] + e * e * data.beta2[j];
  const auto kernel = kernel_vector(lefschetz_matrix(data.ring, w), data.ring.b1);
  if (kernel) return {false, *kernel};
  return {true, {}};
}

bool neq1_condition(const SixManifoldLefschetzData& data) {
  const Rational lhs =
      exactlin::evaluate(data.ring.form, data.omega0, data.omega0);
  const Rational rhs =
      -(data.epsilon * data.epsilon * data.beta4 * data.ring.volume_normalization) +
      data.epsilon * exactlin::evaluate(data.ring.form, data.omega0, data.beta2);
  return lhs != rhs;
}

InjectivityResult check_map2(const SixManifoldLefschetzData& data) {
  validate_data(data);
  const std::size_t b2 = data.ring.b2;
  const Rational e = data.epsilon;

  // (phi, k) -> (H4 component, H2 components) of L_[omega](pi* phi + k eta).
  std::vector<Vec> m(1 + b2, Vec(b2 + 1, Rational(0)));
  for (std::size_t j = 0; j < b2; ++j)
    for (std::size_t i = 0; i < b2; ++i)
      m[0][j] += Rational(data.ring.form.at(j, i)) * data.omega0[i];
  m[0][b2] = -(e * data.beta4 * data.ring.volume_normalization);
  for (std::size_t i = 0; i < b2; ++i) {
    m[1 + i][i] = e;
    m[1 + i][b2] = data.omega0[i] - e * data.beta2[i];
  }

  const auto kernel = kernel_vector(m, b2 + 1);
  if (kernel.has_value() == neq1_condition(data))
    throw Error(ErrorCode::InternalInconsistency,
                "map-two kernel computation disagrees with the scalar route");
  if (kernel) return {false, *kernel};
  return {true, {}};
}

Rational find_hl_epsilon(const FourManifoldRing& ring, const Vec& omega0,
                         const Vec& beta2, const Rational& beta4,
                         unsigned bound,
                         const std::optional<Rational>& extra_qcc) {
  if (bound == 0)
    throw Error(ErrorCode::ParseError, "epsilon search bound must be positive");
  const Rational qww = [&] {
    validate_ring(ring);
    return exactlin::evaluate(ring.form, omega0, omega0);
  }();
  std::string diagnostics;
  for (unsigned m = 1; m <= bound; ++m) {
    SixManifoldLefschetzData data{ring, omega0, beta2, beta4,
                                  Rational(Integer(1), Integer(m))};
    if (!check_map1(data).injective) {
      diagnostics = "map one singular at epsilon = " + data.epsilon.to_string();
      continue;
    }
    if (!neq1_condition(data)) {
      diagnostics = "scalar condition fails at epsilon = " + data.epsilon.to_string();
      continue;
    }
    if (extra_qcc &&
        !(qww > data.epsilon * data.epsilon * *extra_qcc)) {
      diagnostics = "density margin fails at epsilon = " + data.epsilon.to_string();
      continue;
    }
    return data.epsilon;
  }
  throw Error(ErrorCode::NoEpsilonFound,
              diagnostics.empty() ? "no admissible epsilon" : diagnostics);
}

HLVerdict check_hl_six(const SixManifoldLefschetzData& data) {
  HLVerdict verdict;
  const InjectivityResult map1 = check_map1(data);
  const InjectivityResult map2 = check_map2(data);
  verdict.map1_injective = map1.injective;
  verdict.map2_injective = map2.injective;
  verdict.det_nonzero = map1.injective;
  verdict.neq1_holds = neq1_condition(data);
  verdict.overall = map1.injective && map2.injective;
  if (!map1.injective) verdict.witnesses.push_back(map1.witness);
  if (!map2.injective) verdict.witnesses.push_back(map2.witness);
  return verdict;
}

}  // namespace dhlab::lefschetz
