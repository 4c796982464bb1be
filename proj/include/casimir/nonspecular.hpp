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

#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "casimir/lifshitz.hpp"
#include "casimir/materials.hpp"
#include "casimir/reflection.hpp"

namespace casimir {

/// One plane-wave mode of a discretized basis at fixed frequency.
struct BasisMode {
  double kx;      // rad/m
  double ky;      // rad/m
  Polarization p;
  double weight;  // quadrature weight of the d^2k/(4 pi^2) measure
};

/// Ordered, finite set of modes. Weights positive, modes distinct, N >= 1.
class ModeBasis {
 public:
  explicit ModeBasis(std::vector<BasisMode> modes);

  std::size_t size() const { return modes_.size(); }
  const BasisMode& operator[](std::size_t i) const { return modes_[i]; }
  const std::vector<BasisMode>& modes() const { return modes_; }

  double k(std::size_t i) const;
  /// kappa_i = sqrt(k_i^2 + xi^2/c^2).
  double kappa(std::size_t i, double xi) const;

  /// Basis with modes reordered so that new[i] = old[perm[i]].
  ModeBasis permuted(const std::vector<std::size_t>& perm) const;

 private:
  std::vector<BasisMode> modes_;
};

enum class OperatorRole { Reflection1, Reflection2, Propagation };

/// Real N x N operator on a ModeBasis at one imaginary frequency. Operators
/// built from specular amplitudes are stored as their diagonal; everything
/// else as a dense matrix.
class ModeOperator {
 public:
  static ModeOperator diagonal(Eigen::VectorXd diag, double xi, OperatorRole role);
  static ModeOperator dense(Eigen::MatrixXd matrix, double xi, OperatorRole role);

  std::size_t size() const;
  bool is_diagonal() const { return is_diagonal_; }
  double xi() const { return xi_; }
  OperatorRole role() const { return role_; }

  /// Diagonal entries; for a dense operator, the diagonal of the matrix.
  Eigen::VectorXd diagonal_entries() const;
  Eigen::MatrixXd to_dense() const;

  /// s * this, same storage and role.
  ModeOperator scaled(double s) const;
  /// P A P^T with (P A P^T)[i][j] = A[perm[i]][perm[j]].
  ModeOperator permuted(const std::vector<std::size_t>& perm) const;

 private:
  ModeOperator(Eigen::VectorXd diag, Eigen::MatrixXd dense, bool is_diagonal, double xi,
               OperatorRole role);

  Eigen::VectorXd diag_;
  Eigen::MatrixXd dense_;
  bool is_diagonal_;
  double xi_;
  OperatorRole role_;
};

/// Diagonal e^{-kappa_j L}.
ModeOperator propagation_operator(const ModeBasis& basis, double xi, double L);

/// Diagonal specular Fresnel reflection r(i xi, k_j, p_j).
ModeOperator fresnel_reflection_operator(const ModeBasis& basis, double xi,
                                         const Material& material, OperatorRole role);

/// Dense random matrix with spectral norm equal to `norm` (synthetic test builder).
ModeOperator random_contraction(std::size_t n, double norm, double xi, OperatorRole role,
                                std::uint64_t seed);

/// ln det(1 - R1 e^{-KL} R2 e^{-KL}) of the operators exactly as given, from a
/// partially pivoted LU factorization of D. Throws UnstableRoundTrip when
/// det D <= 0 or the factorization breaks down.
double trace_ln_D(const ModeOperator& R1, const ModeOperator& R2, double L, double xi,
                  const ModeBasis& basis);

/// Same quantity from the eigenvalues of D (N <= 64). Cross-check only.
double trace_ln_D_eigen(const ModeOperator& R1, const ModeOperator& R2, double L, double xi,
                        const ModeBasis& basis);

/// Discretized Tr ln D including the basis weights.
///  - both reflections diagonal: sum_j w_j ln D_jj (weights outside the algebra);
///  - otherwise: ln det(1 - R1' e^{-KL} R2' e^{-KL}) with R' = W^{1/2} R W^{1/2}.
double weighted_trace_ln_D(const ModeOperator& R1, const ModeOperator& R2, double L, double xi,
                           const ModeBasis& basis);

using BasisBuilder = std::function<ModeBasis(double xi)>;
using OperatorBuilder = std::function<ModeOperator(double xi, const ModeBasis& basis)>;

struct NonspecularResult {
  double free_energy = 0.0;  // J, or J/m^2 when weights carry d^2k/(4 pi^2)
  long matsubara_terms_used = 0;
  bool converged = true;
};

/// k_B T sum'_m weighted_trace_ln_D(xi_m), with the Matsubara truncation rule
/// of the specular engine.
NonspecularResult free_energy_nonspecular(const OperatorBuilder& R1_builder,
                                          const OperatorBuilder& R2_builder, double L,
                                          double temperature_K, const BasisBuilder& basis,
                                          const NumericTolerances& tol);

NonspecularResult free_energy_nonspecular(const OperatorBuilder& R1_builder,
                                          const OperatorBuilder& R2_builder, double L,
                                          double temperature_K, const ModeBasis& basis,
                                          const NumericTolerances& tol);

/// Both polarizations on the transverse nodes the specular engine uses at
/// (L, xi, refinement).
ModeBasis specular_basis(double L, double xi, int quad_points, int refinement);

/// Builder returning the diagonal Fresnel operator of `material`.
OperatorBuilder fresnel_builder(Material material, OperatorRole role);

}  // namespace casimir
