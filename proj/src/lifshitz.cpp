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

#include "casimir/lifshitz.hpp"

#include <cmath>
#include <string>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {

namespace {

using constants::c;
using constants::hbar;
using constants::k_B;
using constants::pi;

struct LogDenominator {
  double log_d;
  double dlog_d_dL;
};

// ln d and d(ln d)/dL for d = 1 - r e^{-2 kappa L}.
LogDenominator log_denominator(double r, double kappa, double L) {
  const double two_kl = 2.0 * kappa * L;
  const double x = r * std::exp(-two_kl);
  if (x == 0.0) return {0.0, 0.0};
  const double d = (1.0 - r) - r * std::expm1(-two_kl);
  const double log_d = std::abs(x) < 0.5 ? std::log1p(-x) : std::log(d);
  return {log_d, 2.0 * kappa * x / d};
}

bool agree(const SpectralDensity& a, const SpectralDensity& b, double rel_tol) {
  return std::abs(a.energy - b.energy) <= rel_tol * std::abs(b.energy) &&
         std::abs(a.pressure - b.pressure) <= rel_tol * std::abs(b.pressure);
}

}  // namespace

void NumericTolerances::validate() const {
  if (!(rel_tol > 0.0 && rel_tol < 1e-2)) {
    throw ValidationError("rel_tol must lie in (0, 1e-2)");
  }
  if (max_matsubara < 1) {
    throw ValidationError("max_matsubara must be >= 1");
  }
  if (quad_points < 1) {
    throw ValidationError("quad_points must be >= 1");
  }
}

void CavityConfig::validate() const {
  if (!(L > 0.0) || !std::isfinite(L)) {
    throw ValidationError("separation L must be positive, got " + std::to_string(L));
  }
  if (!(T >= 0.0) || !std::isfinite(T)) {
    throw ValidationError("temperature T must be non-negative, got " + std::to_string(T));
  }
  tol.validate();
}

double matsubara_xi(double temperature_K, long m) {
  if (!(temperature_K > 0.0)) {
    throw DomainError("matsubara_xi: temperature must be positive");
  }
  if (m < 0) {
    throw DomainError("matsubara_xi: index must be non-negative");
  }
  return 2.0 * pi * static_cast<double>(m) * k_B * temperature_K / hbar;
}

double log_round_trip(const ModePoint& mode, const CavityConfig& config) {
  const double kap = kappa(mode);
  const double r = fresnel(mode, config.mirror1) * fresnel(mode, config.mirror2);
  if (kap == 0.0 && r == 1.0) {
    throw DomainError("log_round_trip: d vanishes at xi = k = 0 for unit round-trip amplitude");
  }
  return log_denominator(r, kap, config.L).log_d;
}

std::vector<TransverseNode> transverse_rule(double L, double xi, int quad_points,
                                            int refinement) {
  const QuadratureRule x_rule = graded_exponential_rule(quad_points, refinement);
  const double xi_c = xi / c;
  std::vector<TransverseNode> nodes;
  nodes.reserve(x_rule.nodes.size());
  for (std::size_t j = 0; j < x_rule.nodes.size(); ++j) {
    const double q = x_rule.nodes[j] / (2.0 * L);  // kappa - xi/c
    const double kap = xi_c + q;
    // k dk = kappa dkappa, dkappa = dx / 2L, and d^2k/(4 pi^2) = k dk / (2 pi).
    nodes.push_back({std::sqrt(q * (q + 2.0 * xi_c)), kap,
                     x_rule.weights[j] * kap / (4.0 * pi * L)});
  }
  return nodes;
}

LifshitzEngine::LifshitzEngine(CavityConfig config) : config_(std::move(config)) {
  config_.validate();
  for (int level = 0; level <= 2; ++level) {
    rules_.push_back(graded_exponential_rule(config_.tol.quad_points, level));
  }
}

const QuadratureRule& LifshitzEngine::rule(int refinement) const {
  return rules_.at(static_cast<std::size_t>(refinement));
}

SpectralDensity LifshitzEngine::spectral_density(double xi, int refinement) const {
  QuadratureRule local;
  const QuadratureRule* x_rule = nullptr;
  if (refinement < static_cast<int>(rules_.size())) {
    x_rule = &rule(refinement);
  } else {
    local = graded_exponential_rule(config_.tol.quad_points, refinement);
    x_rule = &local;
  }

  const double L = config_.L;
  const double xi_c = xi / c;
  const FresnelAtFrequency r1(config_.mirror1, xi);
  const FresnelAtFrequency r2(config_.mirror2, xi);

  CompensatedSum energy;
  CompensatedSum force;
  for (std::size_t j = 0; j < x_rule->nodes.size(); ++j) {
    const double kap = xi_c + x_rule->nodes[j] / (2.0 * L);
    const double w = x_rule->weights[j] * kap / (4.0 * pi * L);
    for (Polarization p : kPolarizations) {
      const LogDenominator ld = log_denominator(r1(kap, p) * r2(kap, p), kap, L);
      energy.add(w * ld.log_d);
      force.add(-w * ld.dlog_d_dL);
    }
  }
  return {energy.value(), force.value()};
}

SpectralDensity LifshitzEngine::spectral_density(double xi, bool* converged) const {
  SpectralDensity prev = spectral_density(xi, 0);
  for (int level = 1; level <= kMaxRefinement; ++level) {
    const SpectralDensity cur = spectral_density(xi, level);
    if (agree(prev, cur, config_.tol.rel_tol)) {
      if (converged) *converged = true;
      return cur;
    }
    prev = cur;
  }
  if (converged) *converged = false;
  return prev;
}

EngineResult LifshitzEngine::finite_temperature() const {
  const double T = config_.T;
  if (!(T > 0.0)) {
    throw DomainError("finite_temperature: T must be positive");
  }
  const double rel_tol = config_.tol.rel_tol;
  const double kT = k_B * T;

  EngineResult result;
  result.converged = false;
  CompensatedSum energy;
  CompensatedSum force;
  int quiet_terms = 0;
  bool all_converged = true;
  for (long m = 0; m < config_.tol.max_matsubara; ++m) {
    bool ok = true;
    const SpectralDensity s = spectral_density(matsubara_xi(T, m), &ok);
    all_converged = all_converged && ok;
    const double weight = m == 0 ? 0.5 * kT : kT;
    const double de = weight * s.energy;
    const double dp = weight * s.pressure;
    energy.add(de);
    force.add(dp);
    result.matsubara_terms_used = m + 1;

    const bool quiet = std::abs(de) <= rel_tol * std::abs(energy.value()) &&
                       std::abs(dp) <= rel_tol * std::abs(force.value());
    quiet_terms = quiet ? quiet_terms + 1 : 0;
    if (quiet_terms >= 3) {
      result.converged = all_converged;
      break;
    }
  }
  result.free_energy_per_area = energy.value();
  result.pressure = force.value();
  return result;
}

EngineResult LifshitzEngine::zero_temperature() const {
  const double L = config_.L;
  // xi = c t / (2L), so (hbar / 2 pi) d xi = hbar c / (4 pi L) dt.
  const double scale = hbar * c / (4.0 * pi * L);
  bool inner_ok = true;
  auto outer = [&](int level) {
    const QuadratureRule t_rule = graded_exponential_rule(config_.tol.quad_points, level);
    CompensatedSum energy;
    CompensatedSum force;
    for (std::size_t j = 0; j < t_rule.nodes.size(); ++j) {
      bool ok = true;
      const SpectralDensity s = spectral_density(c * t_rule.nodes[j] / (2.0 * L), &ok);
      inner_ok = inner_ok && ok;
      energy.add(t_rule.weights[j] * s.energy);
      force.add(t_rule.weights[j] * s.pressure);
    }
    return SpectralDensity{scale * energy.value(), scale * force.value()};
  };

  EngineResult result;
  result.converged = false;
  SpectralDensity prev = outer(0);
  for (int level = 1; level <= kMaxRefinement; ++level) {
    const SpectralDensity cur = outer(level);
    const bool done = agree(prev, cur, config_.tol.rel_tol);
    prev = cur;
    if (done) {
      result.converged = true;
      break;
    }
  }
  result.converged = result.converged && inner_ok;
  result.free_energy_per_area = prev.energy;
  result.pressure = prev.pressure;
  return result;
}

EngineResult LifshitzEngine::evaluate() const {
  return config_.T > 0.0 ? finite_temperature() : zero_temperature();
}

EngineResult free_energy_finite_T(const CavityConfig& config) {
  return LifshitzEngine(config).finite_temperature();
}

EngineResult free_energy_zero_T(const CavityConfig& config) {
  return LifshitzEngine(config).zero_temperature();
}

EngineResult evaluate(const CavityConfig& config) { return LifshitzEngine(config).evaluate(); }

double pressure(const CavityConfig& config) { return evaluate(config).pressure; }

double ideal_energy_per_area(double L) {
  if (!(L > 0.0)) throw DomainError("ideal_energy_per_area: L must be positive");
  return -hbar * c * pi * pi / (720.0 * L * L * L);
}

double ideal_pressure(double L) {
  if (!(L > 0.0)) throw DomainError("ideal_pressure: L must be positive");
  return -pi * pi * hbar * c / (240.0 * L * L * L * L);
}

ReductionFactors reduction_factors(const CavityConfig& config) {
  const EngineResult r = evaluate(config);
  return {r.pressure / ideal_pressure(config.L),
          r.free_energy_per_area / ideal_energy_per_area(config.L), r.converged};
}

double eta_F(const CavityConfig& config) { return reduction_factors(config).eta_F; }

double eta_E(const CavityConfig& config) { return reduction_factors(config).eta_E; }

double thermal_ratio(double L, double temperature_K, const NumericTolerances& tol) {
  return thermal_ratio(L, temperature_K, Material::gold_plasma(), Material::gold_drude(), tol);
}

double thermal_ratio(double L, double temperature_K, const Material& lossless,
                     const Material& lossy, const NumericTolerances& tol) {
  if (!(L > 0.0) || !(temperature_K > 0.0)) {
    throw DomainError("thermal_ratio: L and T must be positive");
  }
  const double p_lossless = pressure({L, temperature_K, lossless, lossless, tol});
  const double p_lossy = pressure({L, temperature_K, lossy, lossy, tol});
  return p_lossless / p_lossy;
}

}  // namespace casimir
