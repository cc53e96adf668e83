// Copyright 2026 The dhlab Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dhlab/exactlin.hpp"

namespace dhlab::lefschetz {

using exactlin::SymmetricForm;

/// Declared cohomology-ring data of a closed oriented 4-manifold, in fixed
/// bases: the H1 x H2 -> H3 cup tensor, the H1 x H3 -> H4 duality pairing,
/// and the intersection form on H2. H4 is identified with the rationals
/// via the chosen volume generator. Associativity and duality
/// compatibility of the supplied tensors are the caller's responsibility.
struct FourManifoldRing {
  std::size_t b1 = 0;
  std::size_t b2 = 1;
  // cup[i][j][k]: coefficient of the k-th H3 basis vector in e1_i cup e2_j.
  std::vector<std::vector<Vec>> cup_12_3;
  std::vector<Vec> pairing_13;
  SymmetricForm form;
  Rational volume_normalization = Rational(1);
};

struct SixManifoldLefschetzData {
  FourManifoldRing ring;
  Vec omega0;
  Vec beta2;
  Rational beta4;  // coefficient against the H4 generator
  Rational epsilon;
};

struct InjectivityResult {
  bool injective = false;
  Vec witness;  // kernel vector when not injective (H1 coords for map one;
                // H2 coords followed by the eta coefficient for map two)
};

struct HLVerdict {
  bool map1_injective = false;
  bool map2_injective = false;
  bool det_nonzero = false;  // the map-one determinant condition
  bool neq1_holds = false;   // the scalar epsilon condition
  bool overall = false;
  std::vector<Vec> witnesses;
};

/// Hard Lefschetz for the 4-manifold ring itself: L_[omega]: H1 -> H3 has
/// full rank and Q(omega, omega) != 0.
bool check_hl_four(const FourManifoldRing& ring, const Vec& omega);

/// Injectivity of L^2: H1(M) -> H5(M), which reduces to invertibility of
/// L_[2 eps omega0 + eps^2 beta2]: H1(N) -> H3(N).
InjectivityResult check_map1(const SixManifoldLefschetzData& data);

/// Injectivity of L: H2(M) -> H4(M) on pi*H2(N) + R[eta]. Computed twice:
/// as an exact kernel computation of the assembled linear map and as the
/// scalar exclusion [omega0]^2 != -eps^2 beta4 + eps Q(omega0, beta2); the
/// two routes must agree.
InjectivityResult check_map2(const SixManifoldLefschetzData& data);

/// Truth of the scalar condition above, on its own.
bool neq1_condition(const SixManifoldLefschetzData& data);

/// Largest epsilon = 1/m, m <= bound, passing check_map1, the scalar
/// condition, and (when given) the density margin
/// Q(omega0,omega0) > eps^2 * extra_qcc.
Rational find_hl_epsilon(const FourManifoldRing& ring, const Vec& omega0,
                         const Vec& beta2, const Rational& beta4,
                         unsigned bound,
                         const std::optional<Rational>& extra_qcc = std::nullopt);

HLVerdict check_hl_six(const SixManifoldLefschetzData& data);

}  // namespace dhlab::lefschetz
