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

#include <numbers>

namespace casimir {

/// CODATA-2018 exact/recommended values, SI units throughout.
namespace constants {
inline constexpr double hbar = 1.054571817e-34;  // J s
inline constexpr double c = 299792458.0;         // m/s
inline constexpr double k_B = 1.380649e-23;      // J/K
inline constexpr double pi = std::numbers::pi;
}  // namespace constants

/// Thermal wavelength lambda_T = hbar c / (k_B T), without the 2 pi factor.
/// Throws DomainError for T <= 0.
double thermal_wavelength(double temperature_K);

/// Plasma wavelength lambda_P = 2 pi c / omega_P.
double plasma_wavelength(double omega_P);

/// Inverse of plasma_wavelength: omega = 2 pi c / lambda.
double omega_from_lambda(double lambda_m);

}  // namespace casimir
