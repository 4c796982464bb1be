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

#include "casimir/nonspecular.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <set>
#include <string>
#include <tuple>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

namespace {

void check_sizes(const ModeOperator& R1, const ModeOperator& R2, const ModeBasis& basis) {
  if (R1.size() != basis.size() || R2.size() != basis.size()) {
    throw ValidationError("mode operator size does not match basis size " +
                          std::to_string(basis.size()));
  }
}

Eigen::VectorXd propagation_diagonal(const ModeBasis& basis, double xi, double L) {
  Eigen::VectorXd e(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    e(static_cast<Eigen::Index>(i)) = std::exp(-basis.kappa(i, xi) * L);
  }
  return e;
}

// D = 1 - R1 E R2 E, with optional symmetric weight folding of R1 and R2.
Eigen::MatrixXd round_trip_denominator(const ModeOperator& R1, const ModeOperator& R2,
                                       double L, double xi, const ModeBasis& basis,
                                       bool fold_weights) {
  const Eigen::VectorXd e = propagation_diagonal(basis, xi, L);
  Eigen::MatrixXd a = R1.to_dense();
  Eigen::MatrixXd b = R2.to_dense();
  if (fold_weights) {
    Eigen::VectorXd sw(static_cast<Eigen::Index>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      sw(static_cast<Eigen::Index>(i)) = std::sqrt(basis[i].weight);
    }
    a = sw.asDiagonal() * a * sw.asDiagonal();
    b = sw.asDiagonal() * b * sw.asDiagonal();
  }
  const Eigen::MatrixXd round_trip = a * e.asDiagonal() * b * e.asDiagonal();
  return Eigen::MatrixXd::Identity(round_trip.rows(), round_trip.cols()) - round_trip;
}

double log_det_lu(const Eigen::MatrixXd& d) {
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(d);
  const Eigen::MatrixXd& packed = lu.matrixLU();
  double sign = lu.permutationP().determinant();
  CompensatedSum log_abs;
  for (Eigen::Index i = 0; i < packed.rows(); ++i) {
    const double pivot = packed(i, i);
    if (pivot == 0.0 || !std::isfinite(pivot)) {
      throw UnstableRoundTrip("unstable round trip: LU factorization of D broke down at pivot " +
                              std::to_string(i));
    }
    if (pivot < 0.0) sign = -sign;
    log_abs.add(std::log(std::abs(pivot)));
  }
  if (sign <= 0.0) {
    throw UnstableRoundTrip("unstable round trip: det D <= 0 (|r| > 1 or basis too coarse)");
  }
  return log_abs.value();
}

// Both reflections diagonal: D is diagonal with D_jj = 1 - r1_j r2_j e_j^2.
double diagonal_log_terms(const ModeOperator& R1, const ModeOperator& R2, double L, double xi,
                          const ModeBasis& basis, bool weighted) {
  const Eigen::VectorXd r1 = R1.diagonal_entries();
  const Eigen::VectorXd r2 = R2.diagonal_entries();
  CompensatedSum total;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto i = static_cast<Eigen::Index>(j);
    const double x = r1(i) * r2(i) * std::exp(-2.0 * basis.kappa(j, xi) * L);
    if (!(x < 1.0)) {
      throw UnstableRoundTrip("unstable round trip: diagonal entry of D is non-positive at mode " +
                              std::to_string(j));
    }
    const double log_d = std::abs(x) < 0.5 ? std::log1p(-x) : std::log(1.0 - x);
    total.add(weighted ? basis[j].weight * log_d : log_d);
  }
  return total.value();
}

}  // namespace

ModeBasis::ModeBasis(std::vector<BasisMode> modes) : modes_(std::move(modes)) {
  if (modes_.empty()) {
    throw ValidationError("mode basis must contain at least one mode");
  }
  std::set<std::tuple<double, double, int>> seen;
  for (std::size_t i = 0; i < modes_.size(); ++i) {
    const BasisMode& m = modes_[i];
    if (!(m.weight > 0.0) || !std::isfinite(m.weight)) {
      throw ValidationError("mode basis: weight of mode " + std::to_string(i) +
                            " must be positive");
    }
    if (!std::isfinite(m.kx) || !std::isfinite(m.ky)) {
      throw ValidationError("mode basis: non-finite wavevector at mode " + std::to_string(i));
    }
    if (!seen.emplace(m.kx, m.ky, static_cast<int>(m.p)).second) {
      throw ValidationError("mode basis: duplicate mode at index " + std::to_string(i));
    }
  }
}

double ModeBasis::k(std::size_t i) const { return std::hypot(modes_[i].kx, modes_[i].ky); }

double ModeBasis::kappa(std::size_t i, double xi) const {
  return std::hypot(k(i), xi / constants::c);
}

ModeBasis ModeBasis::permuted(const std::vector<std::size_t>& perm) const {
  std::vector<BasisMode> out;
  out.reserve(perm.size());
  for (std::size_t i : perm) out.push_back(modes_.at(i));
  return ModeBasis(std::move(out));
}

ModeOperator::ModeOperator(Eigen::VectorXd diag, Eigen::MatrixXd dense, bool is_diagonal,
                           double xi, OperatorRole role)
    : diag_(std::move(diag)),
      dense_(std::move(dense)),
      is_diagonal_(is_diagonal),
      xi_(xi),
      role_(role) {}

ModeOperator ModeOperator::diagonal(Eigen::VectorXd diag, double xi, OperatorRole role) {
  return ModeOperator(std::move(diag), Eigen::MatrixXd(), true, xi, role);
}

ModeOperator ModeOperator::dense(Eigen::MatrixXd matrix, double xi, OperatorRole role) {
  if (matrix.rows() != matrix.cols()) {
    throw ValidationError("mode operator must be square");
  }
  return ModeOperator(Eigen::VectorXd(), std::move(matrix), false, xi, role);
}

std::size_t ModeOperator::size() const {
  return static_cast<std::size_t>(is_diagonal_ ? diag_.size() : dense_.rows());
}

Eigen::VectorXd ModeOperator::diagonal_entries() const {
  return is_diagonal_ ? diag_ : Eigen::VectorXd(dense_.diagonal());
}

Eigen::MatrixXd ModeOperator::to_dense() const {
  return is_diagonal_ ? Eigen::MatrixXd(diag_.asDiagonal()) : dense_;
}

ModeOperator ModeOperator::scaled(double s) const {
  return ModeOperator(diag_ * s, dense_ * s, is_diagonal_, xi_, role_);
}

ModeOperator ModeOperator::permuted(const std::vector<std::size_t>& perm) const {
  const auto n = static_cast<Eigen::Index>(perm.size());
  if (perm.size() != size()) {
    throw ValidationError("permutation size does not match operator size");
  }
  if (is_diagonal_) {
    Eigen::VectorXd d(n);
    for (Eigen::Index i = 0; i < n; ++i) d(i) = diag_(static_cast<Eigen::Index>(perm[i]));
    return diagonal(std::move(d), xi_, role_);
  }
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      m(i, j) = dense_(static_cast<Eigen::Index>(perm[i]), static_cast<Eigen::Index>(perm[j]));
    }
  }
  return dense(std::move(m), xi_, role_);
}

ModeOperator propagation_operator(const ModeBasis& basis, double xi, double L) {
  return ModeOperator::diagonal(propagation_diagonal(basis, xi, L), xi, OperatorRole::Propagation);
}

ModeOperator fresnel_reflection_operator(const ModeBasis& basis, double xi,
                                         const Material& material, OperatorRole role) {
  const FresnelAtFrequency r(material, xi);
  Eigen::VectorXd d(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    d(static_cast<Eigen::Index>(i)) = r(basis.kappa(i, xi), basis[i].p);
  }
  return ModeOperator::diagonal(std::move(d), xi, role);
}

ModeOperator random_contraction(std::size_t n, double norm, double xi, OperatorRole role,
                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const auto size = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd m(size, size);
  for (Eigen::Index j = 0; j < size; ++j) {
    for (Eigen::Index i = 0; i < size; ++i) m(i, j) = gauss(rng);
  }
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  m *= norm / svd.singularValues()(0);
  return ModeOperator::dense(std::move(m), xi, role);
}

double trace_ln_D(const ModeOperator& R1, const ModeOperator& R2, double L, double xi,
                  const ModeBasis& basis) {
  check_sizes(R1, R2, basis);
  if (R1.is_diagonal() && R2.is_diagonal()) {
    return diagonal_log_terms(R1, R2, L, xi, basis, false);
  }
  return log_det_lu(round_trip_denominator(R1, R2, L, xi, basis, false));
}

double trace_ln_D_eigen(const ModeOperator& R1, const ModeOperator& R2, double L, double xi,
                        const ModeBasis& basis) {
  check_sizes(R1, R2, basis);
  if (basis.size() > 64) {
    throw ValidationError("trace_ln_D_eigen is limited to N <= 64");
  }
  const Eigen::MatrixXd d = round_trip_denominator(R1, R2, L, xi, basis, false);
  const Eigen::EigenSolver<Eigen::MatrixXd> solver(d, false);
  std::complex<double> sum = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    sum += std::log(solver.eigenvalues()(i));
  }
  // Complex pairs cancel in the imaginary part; a residual odd number of
  // negative real eigenvalues leaves +-pi.
  if (std::abs(sum.imag()) > 1e-6) {
    throw UnstableRoundTrip("unstable round trip: det D <= 0 (eigenvalue route)");
  }
  return sum.real();
}

double weighted_trace_ln_D(const ModeOperator& R1, const ModeOperator& R2, double L, double xi,
                           const ModeBasis& basis) {
  check_sizes(R1, R2, basis);
  if (R1.is_diagonal() && R2.is_diagonal()) {
    return diagonal_log_terms(R1, R2, L, xi, basis, true);
  }
  return log_det_lu(round_trip_denominator(R1, R2, L, xi, basis, true));
}

NonspecularResult free_energy_nonspecular(const OperatorBuilder& R1_builder,
                                          const OperatorBuilder& R2_builder, double L,
                                          double temperature_K, const BasisBuilder& basis,
                                          const NumericTolerances& tol) {
  tol.validate();
  if (!(L > 0.0)) throw DomainError("free_energy_nonspecular: L must be positive");
  if (!(temperature_K > 0.0)) {
    throw DomainError("free_energy_nonspecular: temperature must be positive");
  }
  const double kT = constants::k_B * temperature_K;

  NonspecularResult result;
  result.converged = false;
  CompensatedSum energy;
  int quiet_terms = 0;
  for (long m = 0; m < tol.max_matsubara; ++m) {
    const double xi = matsubara_xi(temperature_K, m);
    const ModeBasis b = basis(xi);
    const double term = (m == 0 ? 0.5 * kT : kT) *
                        weighted_trace_ln_D(R1_builder(xi, b), R2_builder(xi, b), L, xi, b);
    energy.add(term);
    result.matsubara_terms_used = m + 1;
    quiet_terms = std::abs(term) <= tol.rel_tol * std::abs(energy.value()) ? quiet_terms + 1 : 0;
    if (quiet_terms >= 3) {
      result.converged = true;
      break;
    }
  }
  result.free_energy = energy.value();
  return result;
}

NonspecularResult free_energy_nonspecular(const OperatorBuilder& R1_builder,
                                          const OperatorBuilder& R2_builder, double L,
                                          double temperature_K, const ModeBasis& basis,
                                          const NumericTolerances& tol) {
  return free_energy_nonspecular(
      R1_builder, R2_builder, L, temperature_K, [&basis](double) { return basis; }, tol);
}

ModeBasis specular_basis(double L, double xi, int quad_points, int refinement) {
  const std::vector<TransverseNode> nodes = transverse_rule(L, xi, quad_points, refinement);
  std::vector<BasisMode> modes;
  modes.reserve(2 * nodes.size());
  for (const TransverseNode& n : nodes) {
    for (Polarization p : kPolarizations) modes.push_back({n.k, 0.0, p, n.weight});
  }
  return ModeBasis(std::move(modes));
}

OperatorBuilder fresnel_builder(Material material, OperatorRole role) {
  return [material = std::move(material), role](double xi, const ModeBasis& basis) {
    return fresnel_reflection_operator(basis, xi, material, role);
  };
}

}  // namespace casimir
