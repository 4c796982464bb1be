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

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace casimir {

/// Sampled imaginary part of the dielectric function on the real frequency axis.
/// Abscissae are strictly increasing and positive, ordinates non-negative.
class OpticalTable {
 public:
  struct Row {
    double omega;     // rad/s
    double eps_imag;  // dimensionless
    bool operator==(const Row&) const = default;
  };

  /// Throws ValidationError on fewer than 2 rows, unsorted or non-positive
  /// omega, negative or non-finite eps_imag.
  explicit OpticalTable(std::vector<Row> rows);

  const std::vector<Row>& rows() const { return rows_; }
  bool operator==(const OpticalTable&) const = default;

 private:
  std::vector<Row> rows_;
};

/// Reads the `omega_rad_s,eps_imag` CSV format.
OpticalTable parse_optical_table(std::istream& in);
OpticalTable load_optical_table(const std::string& path);

double epsilon_plasma(double xi, double omega_P);

/// eps_hat(i xi) + omega_P^2 / (xi (xi + gamma)); eps_hat is 1 without a table.
double epsilon_drude(double xi, double omega_P, double gamma,
                     const OpticalTable* interband = nullptr);

/// 1 + (2/pi) \int omega eps''(omega) / (omega^2 + xi^2) d omega, trapezoid over
/// the table, zero outside the tabulated range.
double epsilon_tabulated(const OpticalTable& table, double xi);

struct PerfectModel {
  bool operator==(const PerfectModel&) const = default;
};
struct PlasmaModel {
  double omega_P;
  bool operator==(const PlasmaModel&) const = default;
};
struct DrudeModel {
  double omega_P;
  double gamma;
  std::optional<OpticalTable> interband;
  bool operator==(const DrudeModel&) const = default;
};
struct TabulatedModel {
  OpticalTable table;
  bool operator==(const TabulatedModel&) const = default;
};

/// Dielectric response of a mirror along the imaginary frequency axis.
/// Immutable after construction.
class Material {
 public:
  using Model = std::variant<PerfectModel, PlasmaModel, DrudeModel, TabulatedModel>;
  enum class Kind { Perfect, Plasma, Drude, Tabulated };

  static Material perfect();
  static Material plasma(double omega_P);
  static Material drude(double omega_P, double gamma,
                        std::optional<OpticalTable> interband = std::nullopt);
  static Material tabulated(OpticalTable table);

  /// Gold with lambda_P = 136 nm.
  static Material gold_plasma();
  /// Gold with lambda_P = 136 nm and gamma = 0.004 omega_P.
  static Material gold_drude();

  Kind kind() const;
  const Model& model() const { return model_; }

  /// eps(i xi) for xi > 0. Perfect mirrors return +infinity.
  double epsilon(double xi) const;

  /// lim_{xi -> 0} eps(i xi) for a tabulated dielectric (finite for an
  /// insulator table). Throws for other kinds.
  double static_epsilon() const;

  bool operator==(const Material&) const = default;

 private:
  explicit Material(Model m) : model_(std::move(m)) {}
  Model model_;
};

inline constexpr double kGoldPlasmaWavelength = 136e-9;  // m
inline constexpr double kGoldGammaRatio = 0.004;

}  // namespace casimir
