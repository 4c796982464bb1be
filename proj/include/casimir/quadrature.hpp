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

#include <cmath>
#include <vector>

namespace casimir {

/// Neumaier-compensated accumulator. Order-dependent by nature, so callers
/// that need reproducible results must add terms in a fixed order.
class CompensatedSum {
 public:
  void add(double term) {
    const double t = sum_ + term;
    if (std::abs(sum_) >= std::abs(term)) {
      comp_ += (sum_ - t) + term;
    } else {
      comp_ += (term - t) + sum_;
    }
    sum_ = t;
  }
  CompensatedSum& operator+=(double term) {
    add(term);
    return *this;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1] (Newton iteration on P_n).
QuadratureRule gauss_legendre(int n);

/// Composite Gauss-Legendre rule for \int_0^{x_max} f(x) dx on panels that are
/// geometrically graded towards 0 ([0, 2^-16], [2^-16, 2^-15], ..., [32, 64]),
/// each panel split into 2^refinement equal sub-panels. Suited to integrands
/// with an e^{-x} tail and a weak (x log x type) singularity at the origin.
QuadratureRule graded_exponential_rule(int points_per_panel, int refinement);

/// Upper end of graded_exponential_rule; e^{-64} is below double resolution
/// relative to the bulk of any e^{-x}-damped integrand.
inline constexpr double kGradedRuleUpper = 64.0;

}  // namespace casimir
