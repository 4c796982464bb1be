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

#include <vector>

#include "casimir/materials.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/reflection.hpp"

namespace casimir {

struct NumericTolerances {
  double rel_tol = 1e-9;
  long max_matsubara = 1'000'000;
  int quad_points = 40;

  /// Throws ValidationError unless 0 < rel_tol < 1e-2, max_matsubara >= 1
  /// and quad_points >= 1.
  void validate() const;
  bool operator==(const NumericTolerances&) const = default;
};

/// Two parallel semi-infinite mirrors at separation L (m) and temperature T (K).
/// T = 0 selects the zero-temperature frequency integral.
struct CavityConfig {
  double L = 1e-6;
  double T = 0.0;
  Material mirror1 = Material::perfect();
  Material mirror2 = Material::perfect();
  NumericTolerances tol{};

  void validate() const;
};

/// Free energy per area and pressure. Both are negative for attraction.
struct EngineResult {
  double free_energy_per_area = 0.0;  // J/m^2
  double pressure = 0.0;              // Pa
  long matsubara_terms_used = 0;
  bool converged = true;
};

/// Per-frequency transverse integrals, \int d^2k/(4 pi^2) sum_p ln d and its
/// contribution to the pressure, -\partial_L of the same integral.
struct SpectralDensity {
  double energy = 0.0;    // 1/m^2
  double pressure = 0.0;  // 1/m^3
};

/// One node of the transverse quadrature at fixed xi. weight already contains
/// the d^2k/(4 pi^2) measure, so sum_j weight_j f(k_j) ~ \int d^2k/(4 pi^2) f(k).
struct TransverseNode {
  double k;
  double kappa;
  double weight;
};

/// xi_m = 2 pi m k_B T / hbar.
double matsubara_xi(double temperature_K, long m);

/// ln(1 - r1 r2 e^{-2 kappa L}) for one mode of the cavity.
double log_round_trip(const ModePoint& mode, const CavityConfig& config);

/// Quadrature nodes for the kappa-integral over (xi/c, infinity) at
/// separation L. The integration variable is x = 2 (kappa - xi/c) L, which
/// makes the e^{-2 kappa L} tail explicit; see graded_exponential_rule.
std::vector<TransverseNode> transverse_rule(double L, double xi, int quad_points, int refinement);

/// Evaluates the Lifshitz formula for one cavity. Immutable and shareable
/// across threads; results do not depend on how calls are interleaved.
///
/// Evanescent and propagating sectors need no separate treatment: after the
/// Wick rotation both live in the kappa-integral over (xi/c, infinity).
class LifshitzEngine {
 public:
  explicit LifshitzEngine(CavityConfig config);

  const CavityConfig& config() const { return config_; }

  /// Transverse integral at one frequency on a fixed refinement level.
  SpectralDensity spectral_density(double xi, int refinement) const;

  /// Transverse integral refined until two successive levels agree to rel_tol.
  SpectralDensity spectral_density(double xi, bool* converged = nullptr) const;

  /// k_B T sum'_m over Matsubara frequencies, truncated once three
  /// consecutive terms fall below rel_tol times the partial sum.
  EngineResult finite_temperature() const;

  /// (hbar / 2 pi) \int_0^infty d xi, adaptive in both integration variables.
  EngineResult zero_temperature() const;

  /// finite_temperature() for T > 0, zero_temperature() for T = 0.
  EngineResult evaluate() const;

  static constexpr int kMaxRefinement = 6;

 private:
  const QuadratureRule& rule(int refinement) const;

  CavityConfig config_;
  std::vector<QuadratureRule> rules_;
};

EngineResult free_energy_finite_T(const CavityConfig& config);
EngineResult free_energy_zero_T(const CavityConfig& config);
EngineResult evaluate(const CavityConfig& config);

/// Pressure -d(F/A)/dL from the analytically differentiated integrand.
double pressure(const CavityConfig& config);

/// Ideal-mirror zero-temperature energy per area, -hbar c pi^2 / (720 L^3).
double ideal_energy_per_area(double L);
/// Ideal-mirror zero-temperature pressure, -pi^2 hbar c / (240 L^4).
double ideal_pressure(double L);

struct ReductionFactors {
  double eta_F = 0.0;
  double eta_E = 0.0;
  bool converged = true;
};

/// P / P_ideal and (F/A) / (E_ideal/A) at the configured L and T.
ReductionFactors reduction_factors(const CavityConfig& config);
double eta_F(const CavityConfig& config);
double eta_E(const CavityConfig& config);

/// P_plasma / P_Drude at (L, T) for gold.
double thermal_ratio(double L, double temperature_K, const NumericTolerances& tol = {});
/// Same ratio for arbitrary materials: P(lossless, lossless) / P(lossy, lossy).
double thermal_ratio(double L, double temperature_K, const Material& lossless,
                     const Material& lossy, const NumericTolerances& tol = {});

}  // namespace casimir
