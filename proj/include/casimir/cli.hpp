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
#include <string_view>
#include <vector>

#include "casimir/errors.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/materials.hpp"

namespace casimir::cli {

enum class Command { Energy, Pressure, Eta, PfaForce, PfaGradient, ThermalRatio, Sweep };

std::optional<Command> parse_command(std::string_view name);
std::string_view command_name(Command command);

/// Invalid configuration document. The message names the offending field(s).
class ConfigError : public ValidationError {
 public:
  explicit ConfigError(const std::string& what) : ValidationError(what) {}
};

/// Mirror description as written in the config, with defaults materialized.
struct MaterialSpec {
  std::string model;  // perfect | plasma | drude | tabulated
  double lambda_p_nm = 136.0;
  double gamma_ratio = 0.004;
  std::string csv;            // tabulated
  std::string interband_csv;  // drude, optional
};

Material build_material(const MaterialSpec& spec);

struct SeparationRange {
  double min_m;
  double max_m;
  int points;
};

struct RunConfig {
  Command command = Command::Energy;
  std::optional<double> L_m;
  std::optional<SeparationRange> L_range;
  std::optional<double> R_m;
  double T_K = 0.0;
  std::optional<MaterialSpec> mirror1;
  std::optional<MaterialSpec> mirror2;
  NumericTolerances tol{};
  int threads = 1;
  std::optional<std::string> output;
  /// Human-readable remarks produced while resolving (e.g. model reductions).
  std::vector<std::string> notes;

  /// Requested separations, ascending; log-spaced for a range.
  std::vector<double> separations() const;
};

/// Parses and validates a JSON config document for `command`.
RunConfig parse_config(std::string_view json_text, Command command);

/// Fully-resolved config as JSON; feeding it back to parse_config yields the
/// same RunConfig.
std::string resolved_config_json(const RunConfig& config);

struct SweepRow {
  double L_m = 0.0;
  double free_energy_per_area = 0.0;
  double pressure = 0.0;
  double eta_F = 0.0;
  double eta_E = 0.0;
  long matsubara_terms = 0;
  bool converged = true;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // ascending L
};

inline constexpr std::string_view kSweepHeader =
    "L_m,free_energy_per_area_J_m2,pressure_Pa,eta_F,eta_E,matsubara_terms,converged";

/// Plane-plane results at every requested separation. Points are spread over
/// config.threads workers; row order and values do not depend on the count.
SweepResult compute_sweep(const RunConfig& config);

std::string format_sweep_csv(const SweepResult& result);

/// Executes the command, writing CSV to `out` and the resolved config to `err`.
/// Returns 0 on success, 2 when any point failed to converge.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace casimir::cli
