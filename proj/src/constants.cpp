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

#include "casimir/constants.hpp"

#include <string>

#include "casimir/errors.hpp"

namespace casimir {

double thermal_wavelength(double temperature_K) {
  if (!(temperature_K > 0.0)) {
    throw DomainError("thermal_wavelength: temperature must be positive, got " +
                      std::to_string(temperature_K));
  }
  return constants::hbar * constants::c / (constants::k_B * temperature_K);
}

double plasma_wavelength(double omega_P) {
  if (!(omega_P > 0.0)) {
    throw DomainError("plasma_wavelength: omega_P must be positive");
  }
  return 2.0 * constants::pi * constants::c / omega_P;
}

double omega_from_lambda(double lambda_m) {
  if (!(lambda_m > 0.0)) {
    throw DomainError("omega_from_lambda: wavelength must be positive");
  }
  return 2.0 * constants::pi * constants::c / lambda_m;
}

}  // namespace casimir
