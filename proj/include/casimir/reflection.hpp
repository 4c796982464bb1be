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

#include "casimir/materials.hpp"

namespace casimir {

enum class Polarization { TE, TM };

inline constexpr Polarization kPolarizations[] = {Polarization::TE, Polarization::TM};

/// One field mode after the Wick rotation: imaginary frequency xi (rad/s),
/// transverse wavevector magnitude k (rad/m) and polarization. Real-frequency
/// propagating and evanescent waves both map onto k >= 0, xi >= 0 here.
struct ModePoint {
  double xi = 0.0;
  double k = 0.0;
  Polarization p = Polarization::TE;
};

/// Longitudinal decay constant kappa = sqrt(k^2 + xi^2/c^2).
double kappa(const ModePoint& mode);

/// Reflection amplitude of a perfect mirror: -1 (TE), +1 (TM).
double perfect_amplitude(Polarization p);

/// Fresnel amplitude of a semi-infinite bulk mirror at imaginary frequency.
/// xi = 0 returns the per-model static limits (Drude with gamma > 0 has no
/// TE reflection there, the plasma model keeps a finite one).
double fresnel(const ModePoint& mode, const Material& material);

/// Fresnel amplitudes for one material at one imaginary frequency. Evaluates
/// eps(i xi) once; the engine calls operator() for many kappa values.
class FresnelAtFrequency {
 public:
  FresnelAtFrequency(const Material& material, double xi);

  /// Amplitude for the mode with longitudinal constant kappa >= xi/c.
  double operator()(double kappa, Polarization p) const;

  double xi() const { return xi_; }

 private:
  enum class Regime { Perfect, Dielectric, StaticPlasma, StaticConductor, StaticDielectric };
  Regime regime_;
  double xi_;
  double eps_ = 1.0;
  double xi_over_c_sq_ = 0.0;
  double plasma_k_sq_ = 0.0;  // (omega_P/c)^2 for the static plasma limit
};

}  // namespace casimir
