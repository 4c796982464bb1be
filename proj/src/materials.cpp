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

#include "casimir/materials.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

namespace {

void require_positive_xi(double xi, const char* who) {
  if (!(xi > 0.0)) {
    throw DomainError(std::string(who) + ": xi must be positive");
  }
}

// Trapezoid on the table grid; xi = 0 is allowed here (static limit).
double dispersion_integral(const OpticalTable& table, double xi) {
  const auto& rows = table.rows();
  const double xi2 = xi * xi;
  auto integrand = [xi2](const OpticalTable::Row& r) {
    return r.omega * r.eps_imag / (r.omega * r.omega + xi2);
  };
  CompensatedSum sum;
  double prev = integrand(rows.front());
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double cur = integrand(rows[i]);
    sum += 0.5 * (rows[i].omega - rows[i - 1].omega) * (prev + cur);
    prev = cur;
  }
  return 1.0 + (2.0 / constants::pi) * sum.value();
}

}  // namespace

OpticalTable::OpticalTable(std::vector<Row> rows) : rows_(std::move(rows)) {
  if (rows_.size() < 2) {
    throw ValidationError("optical table needs at least 2 rows, got " +
                          std::to_string(rows_.size()));
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Row& r = rows_[i];
    if (!std::isfinite(r.omega) || !(r.omega > 0.0)) {
      throw ValidationError("optical table row " + std::to_string(i) +
                            ": omega must be positive and finite");
    }
    if (!std::isfinite(r.eps_imag) || r.eps_imag < 0.0) {
      throw ValidationError("optical table row " + std::to_string(i) +
                            ": eps_imag must be non-negative and finite");
    }
    if (i > 0 && !(r.omega > rows_[i - 1].omega)) {
      throw ValidationError("optical table row " + std::to_string(i) +
                            ": omega must be strictly increasing");
    }
  }
}

OpticalTable parse_optical_table(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ValidationError("optical table: empty input");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "omega_rad_s,eps_imag") {
    throw ValidationError("optical table: expected header 'omega_rad_s,eps_imag', got '" +
                          line + "'");
  }
  std::vector<OpticalTable::Row> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw ValidationError("optical table line " + std::to_string(lineno) +
                            ": expected two comma-separated values");
    }
    try {
      std::size_t used = 0;
      const std::string a = line.substr(0, comma);
      const std::string b = line.substr(comma + 1);
      const double omega = std::stod(a, &used);
      if (used != a.size()) throw std::invalid_argument(a);
      const double eps = std::stod(b, &used);
      if (used != b.size()) throw std::invalid_argument(b);
      rows.push_back({omega, eps});
    } catch (const std::logic_error&) {
      throw ValidationError("optical table line " + std::to_string(lineno) +
                            ": cannot parse '" + line + "'");
    }
  }
  return OpticalTable(std::move(rows));
}

OpticalTable load_optical_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot open optical table '" + path + "'");
  }
  return parse_optical_table(in);
}

double epsilon_plasma(double xi, double omega_P) {
  require_positive_xi(xi, "epsilon_plasma");
  return 1.0 + omega_P * omega_P / (xi * xi);
}

double epsilon_drude(double xi, double omega_P, double gamma, const OpticalTable* interband) {
  require_positive_xi(xi, "epsilon_drude");
  if (gamma < 0.0) {
    throw DomainError("epsilon_drude: gamma must be non-negative");
  }
  const double eps_hat = interband ? dispersion_integral(*interband, xi) : 1.0;
  return eps_hat + omega_P * omega_P / (xi * (xi + gamma));
}

double epsilon_tabulated(const OpticalTable& table, double xi) {
  require_positive_xi(xi, "epsilon_tabulated");
  return dispersion_integral(table, xi);
}

Material Material::perfect() { return Material(PerfectModel{}); }

Material Material::plasma(double omega_P) {
  if (!(omega_P > 0.0) || !std::isfinite(omega_P)) {
    throw ValidationError("plasma material: omega_P must be positive");
  }
  return Material(PlasmaModel{omega_P});
}

Material Material::drude(double omega_P, double gamma, std::optional<OpticalTable> interband) {
  if (!(omega_P > 0.0) || !std::isfinite(omega_P)) {
    throw ValidationError("drude material: omega_P must be positive");
  }
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw ValidationError("drude material: gamma must be non-negative");
  }
  return Material(DrudeModel{omega_P, gamma, std::move(interband)});
}

Material Material::tabulated(OpticalTable table) {
  return Material(TabulatedModel{std::move(table)});
}

Material Material::gold_plasma() { return plasma(omega_from_lambda(kGoldPlasmaWavelength)); }

Material Material::gold_drude() {
  const double wp = omega_from_lambda(kGoldPlasmaWavelength);
  return drude(wp, kGoldGammaRatio * wp);
}

Material::Kind Material::kind() const {
  return static_cast<Kind>(model_.index());
}

double Material::epsilon(double xi) const {
  require_positive_xi(xi, "Material::epsilon");
  struct Visitor {
    double xi;
    double operator()(const PerfectModel&) const { return std::numeric_limits<double>::infinity(); }
    double operator()(const PlasmaModel& m) const { return epsilon_plasma(xi, m.omega_P); }
    double operator()(const DrudeModel& m) const {
      return epsilon_drude(xi, m.omega_P, m.gamma, m.interband ? &*m.interband : nullptr);
    }
    double operator()(const TabulatedModel& m) const { return epsilon_tabulated(m.table, xi); }
  };
  return std::visit(Visitor{xi}, model_);
}

double Material::static_epsilon() const {
  const auto* tab = std::get_if<TabulatedModel>(&model_);
  if (!tab) {
    throw DomainError("static_epsilon is only finite for tabulated dielectrics");
  }
  return dispersion_integral(tab->table, 0.0);
}

}  // namespace casimir
