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
#include <vector>

#include "casimir/errors.hpp"
#include "casimir/pfa.hpp"
#include "oracles.hpp"

using namespace casimir;
using casimir::testing::rel;

namespace {

const Material kVacuum = Material::tabulated(OpticalTable({{1e10, 0.0}, {1e18, 0.0}}));

std::vector<RhoSample> samples(double lo, double hi, int n, double beta, double quad) {
  std::vector<RhoSample> out;
  for (int i = 0; i < n; ++i) {
    const double x = lo + (hi - lo) * i / (n - 1);
    out.push_back({x, 1.0 + beta * x + quad * x * x});
  }
  return out;
}

}  // namespace

TEST_CASE("PFA force and gradient for perfect mirrors") {
  const SphereGeometry geom{100e-6, 1e-6};
  const CavityConfig cfg{123.0, 0.0};  // L is taken from the geometry
  CHECK(rel(pfa_force(geom, cfg), -2.72297705030974499e-13) < 1e-9);
  CHECK(rel(pfa_gradient(geom, cfg), 8.16893115092923497e-7) < 1e-9);
  CHECK(rel(pfa_gradient({100e-6, 0.5e-6}, cfg) / pfa_gradient(geom, cfg), 16.0) < 1e-9);
  CHECK(pfa_force({100e-6, 1e-6}, {1e-6, 0.0, kVacuum, kVacuum}) == 0.0);
}

TEST_CASE("PFA is linear in R") {
  const Material gold = Material::gold_drude();
  const CavityConfig cfg{1e-6, 300.0, gold, gold};
  const PfaResult a = pfa_evaluate({50e-6, 1e-6}, cfg);
  const PfaResult b = pfa_evaluate({100e-6, 1e-6}, cfg);
  CHECK(b.force == 2.0 * a.force);
  CHECK(b.gradient == 2.0 * a.gradient);
}

TEST_CASE("gradient is the L-derivative of the force") {
  const Material gold = Material::gold_plasma();
  for (double T : {0.0, 300.0}) {
    const CavityConfig cfg{1e-6, T, gold, gold};
    const double R = 100e-6;
    const double L = 1e-6;
    const double h = 1e-4 * L;
    // Force is negative (attractive); its magnitude shrinks with L at rate G.
    const double fd = (pfa_force({R, L + h}, cfg) - pfa_force({R, L - h}, cfg)) / (2.0 * h);
    CHECK(rel(pfa_gradient({R, L}, cfg), fd) < 1e-6);
  }
}

TEST_CASE("geometry validation") {
  CHECK_THROWS_AS(pfa_force({0.0, 1e-6}, {}), ValidationError);
  CHECK_THROWS_AS(pfa_force({1e-4, -1e-6}, {}), ValidationError);
  CHECK(SphereGeometry{100e-6, 0.5e-6}.pfa_valid());
  CHECK_FALSE(SphereGeometry{100e-6, 2e-6}.pfa_valid());
}

TEST_CASE("rho_G of PFA against itself is 1") {
  const PfaResult r = pfa_evaluate({100e-6, 1e-6}, {1e-6, 0.0});
  CHECK(rho_G(r.gradient, pfa_gradient({100e-6, 1e-6}, {1e-6, 0.0})) == 1.0);
}

TEST_CASE("slope at origin") {
  SUBCASE("exact line") {
    const auto s = samples(0.001, 0.01, 10, kBetaPerfect, 0.0);
    CHECK(std::abs(slope_at_origin(s) - (-0.48)) < 1e-12);
  }
  SUBCASE("quadratic contamination") {
    const auto s = samples(0.001, 0.01, 10, kBetaGold, 0.05);
    // Fit over the lowest 5 points: beta_hat = beta + 0.05 sum x^3 / sum x^2.
    double x2 = 0.0;
    double x3 = 0.0;
    for (int i = 0; i < 5; ++i) {
      x2 += s[i].x * s[i].x;
      x3 += s[i].x * s[i].x * s[i].x;
    }
    const double beta = slope_at_origin(s);
    CHECK(std::abs(beta - (-0.21 + 0.05 * x3 / x2)) < 1e-12);
    CHECK(std::abs(beta - (-0.21)) < 1e-3);
  }
  SUBCASE("flat data") {
    CHECK(slope_at_origin(samples(0.001, 0.01, 6, 0.0, 0.0)) == 0.0);
  }
  SUBCASE("scaling x by s scales beta by 1/s") {
    const auto s = samples(0.002, 0.02, 9, -0.3, 0.7);
    auto scaled = s;
    for (auto& r : scaled) r.x *= 4.0;
    CHECK(rel(slope_at_origin(scaled), slope_at_origin(s) / 4.0) < 1e-12);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(slope_at_origin(samples(0.001, 0.01, 2, -0.4, 0.0)), ValidationError);
    std::vector<RhoSample> unsorted{{0.003, 1.0}, {0.001, 1.0}, {0.002, 1.0}};
    CHECK_THROWS_AS(slope_at_origin(unsorted), ValidationError);
    std::vector<RhoSample> zero_x{{0.0, 1.0}, {0.001, 1.0}, {0.002, 1.0}};
    CHECK_THROWS_AS(slope_at_origin(zero_x), ValidationError);
  }
}

TEST_CASE("experimental bound on beta") {
  CHECK(beta_within_experimental_bound(kBetaGold));
  CHECK_FALSE(beta_within_experimental_bound(kBetaPerfect));
  CHECK(beta_within_experimental_bound(0.0));
  CHECK_FALSE(beta_within_experimental_bound(0.4));
  CHECK(kBetaPerfect / kBetaGold > 2.0);
}
