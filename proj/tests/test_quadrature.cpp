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

#include <doctest.h>

#include <cmath>

#include "casimir/quadrature.hpp"
#include "oracles.hpp"

using namespace casimir;
using casimir::testing::rel;

TEST_CASE("Gauss-Legendre integrates polynomials of degree 2n-1 exactly") {
  for (int n : {1, 2, 5, 12, 40}) {
    const QuadratureRule r = gauss_legendre(n);
    for (int deg = 0; deg <= 2 * n - 1; ++deg) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += r.weights[i] * std::pow(r.nodes[i], deg);
      const double exact = deg % 2 ? 0.0 : 2.0 / (deg + 1);
      CHECK(std::abs(s - exact) < 1e-13);
    }
  }
}

TEST_CASE("graded rule handles e^{-x} tails and x ln x at the origin") {
  for (int level : {0, 1}) {
    const QuadratureRule r = graded_exponential_rule(40, level);
    double a = 0.0;
    double b = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
      const double x = r.nodes[i];
      CHECK(x > 0.0);
      CHECK(x < kGradedRuleUpper);
      a += r.weights[i] * x * x * std::exp(-x);
      b += r.weights[i] * x * std::log(-std::expm1(-x));
    }
    CHECK(rel(a, 2.0) < 1e-14);
    CHECK(rel(b, -casimir::testing::zeta3()) < 1e-13);
  }
}

TEST_CASE("compensated sum recovers small terms lost by naive addition") {
  CompensatedSum s;
  s.add(1.0);
  for (int i = 0; i < 1000; ++i) s.add(1e-17);
  s.add(-1.0);
  CHECK(rel(s.value(), 1e-14) < 1e-12);
}
