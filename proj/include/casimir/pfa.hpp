/*
 * Copyright 2026 The casimir-engine Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <span>

#include "casimir/lifshitz.hpp"

namespace casimir {

/// Sphere of radius R above a plane, closest separation L.
struct SphereGeometry {
  double R;
  double L;

  /// Throws ValidationError unless R > 0 and L > 0.
  void validate() const;
  /// x = L / R.
  double aspect() const { return L / R; }
  /// The proximity approximation is only trusted for L/R < 0.01.
  bool pfa_valid() const { return aspect() < 0.01; }
};

/// Plane-sphere force from the plane-plane free energy, F = 2 pi R (F/A)(L).
/// Negative for attraction. config.L is replaced by geom.L.
double pfa_force(const SphereGeometry& geom, const CavityConfig& config);

/// Force gradient G = 2 pi R |P(L)|, positive when the attraction grows as L shrinks.
double pfa_gradient(const SphereGeometry& geom, const CavityConfig& config);

/// Both PFA quantities from a single engine pass.
struct PfaResult {
  double force = 0.0;     // N
  double gradient = 0.0;  // N/m
  bool converged = true;
};
PfaResult pfa_evaluate(const SphereGeometry& geom, const CavityConfig& config);

/// rho_G = G / G_PFA for one aspect ratio x = L/R.
struct RhoSample {
  double x;
  double rho;
};

inline double rho_G(double gradient, double pfa_gradient_value) {
  return gradient / pfa_gradient_value;
}

/// Slope beta of rho = 1 + beta x from a least-squares fit with the
/// intercept pinned to 1, over the lowest-x half of the samples (at least 3).
/// Samples must have distinct x > 0 in ascending order.
double slope_at_origin(std::span<const RhoSample> samples);

/// Experimental constraint |beta_G| < 0.4 on the slope at the origin.
inline constexpr double kBetaExperimentalBound = 0.4;
/// Plane-sphere slopes from multipolar scattering calculations at T = 0:
/// perfect mirrors, and gold described by the plasma model.
inline constexpr double kBetaPerfect = -0.48;
inline constexpr double kBetaGold = -0.21;

bool beta_within_experimental_bound(double beta);

}  // namespace casimir
