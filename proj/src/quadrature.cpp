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

#include "casimir/quadrature.hpp"

#include <numbers>
#include <stdexcept>

namespace casimir {

QuadratureRule gauss_legendre(int n) {
  if (n < 1) {
    throw std::invalid_argument("gauss_legendre: n must be >= 1");
  }
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    // Re-evaluate the derivative at the converged root.
    double p0 = 1.0;
    double p1 = 0.0;
    for (int j = 0; j < n; ++j) {
      const double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
    }
    dp = n * (z * p0 - p1) / (z * z - 1.0);
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

QuadratureRule graded_exponential_rule(int points_per_panel, int refinement) {
  if (refinement < 0) {
    throw std::invalid_argument("graded_exponential_rule: negative refinement");
  }
  const QuadratureRule gl = gauss_legendre(points_per_panel);

  std::vector<double> edges{0.0};
  for (int e = -16; e <= 6; ++e) edges.push_back(std::ldexp(1.0, e));

  const int split = 1 << refinement;
  QuadratureRule rule;
  rule.nodes.reserve(static_cast<std::size_t>(edges.size() - 1) * split * points_per_panel);
  rule.weights.reserve(rule.nodes.capacity());
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const double width = (edges[p + 1] - edges[p]) / split;
    for (int s = 0; s < split; ++s) {
      const double a = edges[p] + s * width;
      const double half = 0.5 * width;
      const double mid = a + half;
      for (int i = 0; i < points_per_panel; ++i) {
        rule.nodes.push_back(mid + half * gl.nodes[i]);
        rule.weights.push_back(half * gl.weights[i]);
      }
    }
  }
  return rule;
}

}  // namespace casimir
