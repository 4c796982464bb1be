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

#include "casimir/pfa.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

void SphereGeometry::validate() const {
  if (!(R > 0.0) || !std::isfinite(R)) {
    throw ValidationError("sphere radius R must be positive");
  }
  if (!(L > 0.0) || !std::isfinite(L)) {
    throw ValidationError("sphere separation L must be positive");
  }
}

PfaResult pfa_evaluate(const SphereGeometry& geom, const CavityConfig& config) {
  geom.validate();
  CavityConfig at_L = config;
  at_L.L = geom.L;
  const EngineResult r = evaluate(at_L);
  const double circumference = 2.0 * constants::pi * geom.R;
  return {circumference * r.free_energy_per_area, circumference * -r.pressure, r.converged};
}

double pfa_force(const SphereGeometry& geom, const CavityConfig& config) {
  return pfa_evaluate(geom, config).force;
}

double pfa_gradient(const SphereGeometry& geom, const CavityConfig& config) {
  return pfa_evaluate(geom, config).gradient;
}

double slope_at_origin(std::span<const RhoSample> samples) {
  if (samples.size() < 3) {
    throw ValidationError("slope_at_origin needs at least 3 samples, got " +
                          std::to_string(samples.size()));
  }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!(samples[i].x > 0.0) || !std::isfinite(samples[i].rho)) {
      throw ValidationError("slope_at_origin: sample " + std::to_string(i) +
                            " needs x > 0 and finite rho");
    }
    if (i > 0 && !(samples[i].x > samples[i - 1].x)) {
      throw ValidationError("slope_at_origin: x must be strictly ascending");
    }
  }
  const std::size_t used = std::max<std::size_t>(3, (samples.size() + 1) / 2);
  CompensatedSum xy;
  CompensatedSum xx;
  for (std::size_t i = 0; i < used; ++i) {
    xy.add(samples[i].x * (samples[i].rho - 1.0));
    xx.add(samples[i].x * samples[i].x);
  }
  return xy.value() / xx.value();
}

bool beta_within_experimental_bound(double beta) {
  return std::abs(beta) < kBetaExperimentalBound;
}

}  // namespace casimir
