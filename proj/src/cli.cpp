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

#include "casimir/cli.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "casimir/constants.hpp"
#include "casimir/pfa.hpp"

namespace casimir::cli {

namespace {

using nlohmann::json;

constexpr std::array<std::pair<Command, std::string_view>, 7> kCommands{{
    {Command::Energy, "energy"},
    {Command::Pressure, "pressure"},
    {Command::Eta, "eta"},
    {Command::PfaForce, "pfa-force"},
    {Command::PfaGradient, "pfa-gradient"},
    {Command::ThermalRatio, "thermal-ratio"},
    {Command::Sweep, "sweep"},
}};

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

void reject_unknown_keys(const json& obj, std::initializer_list<std::string_view> allowed,
                         const std::string& where) {
  std::vector<std::string> unknown;
  for (const auto& [key, _] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) unknown.push_back(key);
  }
  if (!unknown.empty()) {
    throw ConfigError("unknown key(s) in " + where + ": " + join(unknown));
  }
}

const json& require(const json& obj, const std::string& key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw ConfigError("missing required field '" + key + "' in " + where);
  }
  return *it;
}

double as_number(const json& value, const std::string& field) {
  if (!value.is_number()) throw ConfigError("field '" + field + "' must be a number");
  const double v = value.get<double>();
  if (!std::isfinite(v)) throw ConfigError("field '" + field + "' must be finite");
  return v;
}

long as_integer(const json& value, const std::string& field) {
  if (!value.is_number_integer()) throw ConfigError("field '" + field + "' must be an integer");
  return value.get<long>();
}

std::string as_string(const json& value, const std::string& field) {
  if (!value.is_string()) throw ConfigError("field '" + field + "' must be a string");
  return value.get<std::string>();
}

double positive(double v, const std::string& field) {
  if (!(v > 0.0)) throw ConfigError("field '" + field + "' must be positive");
  return v;
}

MaterialSpec parse_material(const json& obj, const std::string& where,
                            std::vector<std::string>& notes) {
  if (!obj.is_object()) throw ConfigError("'" + where + "' must be an object");
  MaterialSpec spec;
  spec.model = as_string(require(obj, "model", where), where + ".model");
  if (spec.model == "perfect") {
    reject_unknown_keys(obj, {"model"}, where);
  } else if (spec.model == "plasma") {
    reject_unknown_keys(obj, {"model", "lambda_p_nm"}, where);
    if (obj.contains("lambda_p_nm")) {
      spec.lambda_p_nm = positive(as_number(obj["lambda_p_nm"], "lambda_p_nm"), "lambda_p_nm");
    }
  } else if (spec.model == "drude") {
    reject_unknown_keys(obj, {"model", "lambda_p_nm", "gamma_ratio", "interband_csv"}, where);
    if (obj.contains("lambda_p_nm")) {
      spec.lambda_p_nm = positive(as_number(obj["lambda_p_nm"], "lambda_p_nm"), "lambda_p_nm");
    }
    if (obj.contains("gamma_ratio")) {
      spec.gamma_ratio = as_number(obj["gamma_ratio"], "gamma_ratio");
      if (spec.gamma_ratio < 0.0) throw ConfigError("field 'gamma_ratio' must be non-negative");
    }
    if (obj.contains("interband_csv")) {
      spec.interband_csv = as_string(obj["interband_csv"], "interband_csv");
    }
    if (spec.gamma_ratio == 0.0) {
      notes.push_back(where + ": drude with gamma_ratio 0 reduces to the plasma model");
    }
  } else if (spec.model == "tabulated") {
    reject_unknown_keys(obj, {"model", "csv"}, where);
    spec.csv = as_string(require(obj, "csv", where), "csv");
  } else {
    throw ConfigError(where + ".model: unknown model '" + spec.model +
                      "' (expected perfect, plasma, drude or tabulated)");
  }
  return spec;
}

json material_json(const MaterialSpec& spec) {
  json j;
  j["model"] = spec.model;
  if (spec.model == "plasma" || spec.model == "drude") j["lambda_p_nm"] = spec.lambda_p_nm;
  if (spec.model == "drude") {
    j["gamma_ratio"] = spec.gamma_ratio;
    if (!spec.interband_csv.empty()) j["interband_csv"] = spec.interband_csv;
  }
  if (spec.model == "tabulated") j["csv"] = spec.csv;
  return j;
}

bool needs_mirrors(Command c) { return c != Command::ThermalRatio; }
bool needs_radius(Command c) { return c == Command::PfaForce || c == Command::PfaGradient; }

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

const char* fmt(bool b) { return b ? "true" : "false"; }

CavityConfig cavity_for(const RunConfig& config, double L) {
  return {L, config.T_K, build_material(*config.mirror1), build_material(*config.mirror2),
          config.tol};
}

// Runs body(i) for i in [0, n) on up to `threads` workers.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body) {
  const auto workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n && !failed; i = next++) {
        try {
          body(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& [cmd, text] : kCommands) {
    if (text == name) return cmd;
  }
  return std::nullopt;
}

std::string_view command_name(Command command) {
  for (const auto& [cmd, text] : kCommands) {
    if (cmd == command) return text;
  }
  return "?";
}

Material build_material(const MaterialSpec& spec) {
  if (spec.model == "perfect") return Material::perfect();
  if (spec.model == "tabulated") return Material::tabulated(load_optical_table(spec.csv));
  const double omega_P = omega_from_lambda(spec.lambda_p_nm * 1e-9);
  if (spec.model == "plasma") return Material::plasma(omega_P);
  if (spec.model == "drude") {
    if (spec.gamma_ratio == 0.0 && spec.interband_csv.empty()) return Material::plasma(omega_P);
    std::optional<OpticalTable> interband;
    if (!spec.interband_csv.empty()) interband = load_optical_table(spec.interband_csv);
    return Material::drude(omega_P, spec.gamma_ratio * omega_P, std::move(interband));
  }
  throw ConfigError("unknown material model '" + spec.model + "'");
}

std::vector<double> RunConfig::separations() const {
  if (L_m) return {*L_m};
  const SeparationRange& r = *L_range;
  std::vector<double> out(static_cast<std::size_t>(r.points));
  const double lo = std::log(r.min_m);
  const double step = (std::log(r.max_m) - lo) / (r.points - 1);
  for (int i = 0; i < r.points; ++i) out[i] = std::exp(lo + i * step);
  out.front() = r.min_m;
  out.back() = r.max_m;
  return out;
}

RunConfig parse_config(std::string_view json_text, Command command) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  reject_unknown_keys(doc,
                      {"L_m", "L_range", "R_m", "T_K", "mirror1", "mirror2", "tolerances",
                       "threads", "output"},
                      "config");

  RunConfig cfg;
  cfg.command = command;

  if (doc.contains("L_m") == doc.contains("L_range")) {
    throw ConfigError("exactly one of 'L_m' or 'L_range' is required");
  }
  if (doc.contains("L_m")) {
    cfg.L_m = as_number(doc["L_m"], "L_m");
    if (!(*cfg.L_m > 0.0)) throw ConfigError("field 'L_m' must be positive");
  } else {
    const json& range = doc["L_range"];
    if (!range.is_object()) throw ConfigError("'L_range' must be an object");
    reject_unknown_keys(range, {"min_m", "max_m", "points"}, "L_range");
    SeparationRange r{};
    r.min_m = positive(as_number(require(range, "min_m", "L_range"), "min_m"), "min_m");
    r.max_m = positive(as_number(require(range, "max_m", "L_range"), "max_m"), "max_m");
    const long points = as_integer(require(range, "points", "L_range"), "points");
    if (!(r.min_m < r.max_m)) throw ConfigError("L_range: 'min_m' must be below 'max_m'");
    if (points < 2 || points > 100000) throw ConfigError("L_range: 'points' must be in [2, 100000]");
    r.points = static_cast<int>(points);
    cfg.L_range = r;
  }
  if (command == Command::Sweep && !cfg.L_range) {
    throw ConfigError("command 'sweep' requires 'L_range'");
  }

  cfg.T_K = as_number(require(doc, "T_K", "config"), "T_K");
  if (cfg.T_K < 0.0) throw ConfigError("field 'T_K' must be non-negative");
  if (command == Command::ThermalRatio && !(cfg.T_K > 0.0)) {
    throw ConfigError("command 'thermal-ratio' requires 'T_K' > 0");
  }

  if (doc.contains("R_m")) {
    cfg.R_m = positive(as_number(doc["R_m"], "R_m"), "R_m");
  } else if (needs_radius(command)) {
    throw ConfigError("missing required field 'R_m' for command '" +
                      std::string(command_name(command)) + "'");
  }

  for (const char* key : {"mirror1", "mirror2"}) {
    std::optional<MaterialSpec>& slot = std::string_view(key) == "mirror1" ? cfg.mirror1 : cfg.mirror2;
    if (doc.contains(key)) {
      slot = parse_material(doc[key], key, cfg.notes);
    } else if (needs_mirrors(command)) {
      throw ConfigError(std::string("missing required field '") + key + "'");
    }
  }

  if (doc.contains("tolerances")) {
    const json& t = doc["tolerances"];
    if (!t.is_object()) throw ConfigError("'tolerances' must be an object");
    reject_unknown_keys(t, {"rel_tol", "max_matsubara", "quad_points"}, "tolerances");
    if (t.contains("rel_tol")) cfg.tol.rel_tol = as_number(t["rel_tol"], "rel_tol");
    if (t.contains("max_matsubara")) cfg.tol.max_matsubara = as_integer(t["max_matsubara"], "max_matsubara");
    if (t.contains("quad_points")) {
      const long q = as_integer(t["quad_points"], "quad_points");
      if (q < 1 || q > 1000) throw ConfigError("field 'quad_points' must be in [1, 1000]");
      cfg.tol.quad_points = static_cast<int>(q);
    }
    try {
      cfg.tol.validate();
    } catch (const ValidationError& e) {
      throw ConfigError(std::string("tolerances: ") + e.what());
    }
  }

  if (doc.contains("threads")) {
    const long n = as_integer(doc["threads"], "threads");
    if (n < 1 || n > 1024) throw ConfigError("field 'threads' must be in [1, 1024]");
    cfg.threads = static_cast<int>(n);
  }
  if (doc.contains("output")) cfg.output = as_string(doc["output"], "output");
  return cfg;
}

std::string resolved_config_json(const RunConfig& config) {
  json j;
  if (config.L_m) j["L_m"] = *config.L_m;
  if (config.L_range) {
    j["L_range"] = {{"min_m", config.L_range->min_m},
                    {"max_m", config.L_range->max_m},
                    {"points", config.L_range->points}};
  }
  if (config.R_m) j["R_m"] = *config.R_m;
  j["T_K"] = config.T_K;
  if (config.mirror1) j["mirror1"] = material_json(*config.mirror1);
  if (config.mirror2) j["mirror2"] = material_json(*config.mirror2);
  j["tolerances"] = {{"rel_tol", config.tol.rel_tol},
                     {"max_matsubara", config.tol.max_matsubara},
                     {"quad_points", config.tol.quad_points}};
  j["threads"] = config.threads;
  if (config.output) j["output"] = *config.output;
  return j.dump(2);
}

SweepResult compute_sweep(const RunConfig& config) {
  const std::vector<double> Ls = config.separations();
  SweepResult result;
  result.rows.resize(Ls.size());
  parallel_for(Ls.size(), config.threads, [&](std::size_t i) {
    const double L = Ls[i];
    const EngineResult r = evaluate(cavity_for(config, L));
    result.rows[i] = {L,
                      r.free_energy_per_area,
                      r.pressure,
                      r.pressure / ideal_pressure(L),
                      r.free_energy_per_area / ideal_energy_per_area(L),
                      r.matsubara_terms_used,
                      r.converged};
  });
  return result;
}

std::string format_sweep_csv(const SweepResult& result) {
  std::string out(kSweepHeader);
  out += '\n';
  for (const SweepRow& row : result.rows) {
    out += fmt(row.L_m) + ',' + fmt(row.free_energy_per_area) + ',' + fmt(row.pressure) + ',' +
           fmt(row.eta_F) + ',' + fmt(row.eta_E) + ',' + std::to_string(row.matsubara_terms) +
           ',' + fmt(row.converged) + '\n';
  }
  return out;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  for (const std::string& note : config.notes) err << "# note: " << note << '\n';
  err << resolved_config_json(config) << '\n';

  const std::vector<double> Ls = config.separations();
  bool all_converged = true;
  std::string csv;

  switch (config.command) {
    case Command::Energy:
    case Command::Pressure:
    case Command::Eta:
    case Command::Sweep: {
      const SweepResult sweep = compute_sweep(config);
      for (const SweepRow& row : sweep.rows) all_converged = all_converged && row.converged;
      csv = format_sweep_csv(sweep);
      break;
    }
    case Command::PfaForce:
    case Command::PfaGradient: {
      const bool force = config.command == Command::PfaForce;
      std::vector<PfaResult> rows(Ls.size());
      parallel_for(Ls.size(), config.threads, [&](std::size_t i) {
        rows[i] = pfa_evaluate({*config.R_m, Ls[i]}, cavity_for(config, Ls[i]));
      });
      csv = force ? "L_m,R_m,force_N,pfa_valid,converged\n"
                  : "L_m,R_m,gradient_N_m,pfa_valid,converged\n";
      for (std::size_t i = 0; i < Ls.size(); ++i) {
        const SphereGeometry geom{*config.R_m, Ls[i]};
        all_converged = all_converged && rows[i].converged;
        csv += fmt(Ls[i]) + ',' + fmt(*config.R_m) + ',' +
               fmt(force ? rows[i].force : rows[i].gradient) + ',' + fmt(geom.pfa_valid()) +
               ',' + fmt(rows[i].converged) + '\n';
      }
      break;
    }
    case Command::ThermalRatio: {
      std::vector<std::array<EngineResult, 2>> rows(Ls.size());
      parallel_for(Ls.size(), config.threads, [&](std::size_t i) {
        const Material plasma = Material::gold_plasma();
        const Material drude = Material::gold_drude();
        rows[i] = {evaluate({Ls[i], config.T_K, plasma, plasma, config.tol}),
                   evaluate({Ls[i], config.T_K, drude, drude, config.tol})};
      });
      csv = "L_m,T_K,pressure_plasma_Pa,pressure_drude_Pa,ratio,converged\n";
      for (std::size_t i = 0; i < Ls.size(); ++i) {
        const bool ok = rows[i][0].converged && rows[i][1].converged;
        all_converged = all_converged && ok;
        csv += fmt(Ls[i]) + ',' + fmt(config.T_K) + ',' + fmt(rows[i][0].pressure) + ',' +
               fmt(rows[i][1].pressure) + ',' + fmt(rows[i][0].pressure / rows[i][1].pressure) +
               ',' + fmt(ok) + '\n';
      }
      break;
    }
  }
  out << csv;
  out.flush();
  return all_converged ? 0 : 2;
}

}  // namespace casimir::cli
