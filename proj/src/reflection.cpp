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

#include "casimir/reflection.hpp"

#include <algorithm>
#include <cmath>
#include <variant>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {

double kappa(const ModePoint& mode) {
  return std::hypot(mode.k, mode.xi / constants::c);
}

double perfect_amplitude(Polarization p) { return p == Polarization::TE ? -1.0 : 1.0; }

double fresnel(const ModePoint& mode, const Material& material) {
  return FresnelAtFrequency(material, mode.xi)(kappa(mode), mode.p);
}

FresnelAtFrequency::FresnelAtFrequency(const Material& material, double xi) : xi_(xi) {
  if (xi < 0.0 || !std::isfinite(xi)) {
    throw DomainError("fresnel: xi must be finite and non-negative");
  }
  xi_over_c_sq_ = (xi / constants::c) * (xi / constants::c);
  if (material.kind() == Material::Kind::Perfect) {
    regime_ = Regime::Perfect;
    return;
  }
  if (xi > 0.0) {
    regime_ = Regime::Dielectric;
    eps_ = material.epsilon(xi);
    return;
  }
  // Static limits, xi = 0.
  const auto& model = material.model();
  if (const auto* p = std::get_if<PlasmaModel>(&model)) {
    regime_ = Regime::StaticPlasma;
    plasma_k_sq_ = (p->omega_P / constants::c) * (p->omega_P / constants::c);
  } else if (const auto* d = std::get_if<DrudeModel>(&model)) {
    if (d->gamma == 0.0) {
      regime_ = Regime::StaticPlasma;
      plasma_k_sq_ = (d->omega_P / constants::c) * (d->omega_P / constants::c);
    } else {
      regime_ = Regime::StaticConductor;
    }
  } else {
    regime_ = Regime::StaticDielectric;
    eps_ = material.static_epsilon();
  }
}

double FresnelAtFrequency::operator()(double kappa, Polarization p) const {
  switch (regime_) {
    case Regime::Perfect:
      return perfect_amplitude(p);
    case Regime::StaticConductor:
      return p == Polarization::TE ? 0.0 : 1.0;
    case Regime::StaticPlasma: {
      if (p == Polarization::TM) return 1.0;
      // (k - s)/(k + s) with s = sqrt(k^2 + omega_P^2/c^2), written without cancellation.
      const double s = std::sqrt(kappa * kappa + plasma_k_sq_);
      return -plasma_k_sq_ / ((kappa + s) * (kappa + s));
    }
    case Regime::StaticDielectric:
      return p == Polarization::TE ? 0.0 : (eps_ - 1.0) / (eps_ + 1.0);
    case Regime::Dielectric:
      break;
  }
  const double eps = eps_;
  const double excess = (eps - 1.0) * xi_over_c_sq_;  // kappa_t^2 - kappa^2
  const double kappa_t = std::sqrt(kappa * kappa + excess);
  if (p == Polarization::TE) {
    return -excess / ((kappa + kappa_t) * (kappa + kappa_t));
  }
  if (eps < 2.0) {
    // (eps kappa - kappa_t)/(eps kappa + kappa_t) = (eps-1)(eps kappa^2 + k^2)/(eps kappa + kappa_t)^2
    const double k_sq = std::max(kappa * kappa - xi_over_c_sq_, 0.0);
    const double den = eps * kappa + kappa_t;
    return (eps - 1.0) * (eps * kappa * kappa + k_sq) / (den * den);
  }
  const double q = kappa_t / (eps * kappa);
  return (1.0 - q) / (1.0 + q);
}

}  // namespace casimir
