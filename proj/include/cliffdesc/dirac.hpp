// Copyright 2026 The cliffdesc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "cliffdesc/gamma_set.hpp"

namespace cliffdesc {

/// Covariant momentum components p_mu under the (+, -, ..., -) metric,
/// together with the mass.
struct Momentum {
  std::vector<double> components;
  double mass = 0.0;

  int dim() const { return static_cast<int>(components.size()); }
};

/// p_mu p^mu = p_0^2 - sum_j p_j^2.
double minkowski_square(const Momentum& p);

/// (|p| + m)^2, the natural magnitude against which residuals are measured.
double momentum_scale(const Momentum& p);

using Spinor = Eigen::VectorXcd;

/// Momentum-space Dirac operator D(p) = g^mu p_mu - m 1.
struct DiracOperator {
  Eigen::MatrixXcd matrix;
  Momentum momentum;
  std::string set_label;
};

DiracOperator dirac_operator(const GammaSet& s, const Momentum& p);

/// Max-norm of (g p - m)(g p + m) - (p.p - m^2) 1; algebraically zero.
double dispersion_residual(const GammaSet& s, const Momentum& p);

/// |det D(p)| and its closed form |p.p - m^2|^(N/2).
std::pair<double, double> determinant_identity(const GammaSet& s,
                                               const Momentum& p);

/// Orthonormal kernel basis of D(p) by singular-value decomposition,
/// relative threshold 1e-8. Each vector's first sizable component is made
/// real-positive so the basis is deterministic. On-shell solutions span
/// N/2 directions; off-shell momenta yield an empty basis.
std::vector<Spinor> plane_wave_solutions(const GammaSet& s, const Momentum& p,
                                         double threshold = 1e-8);

/// Diagonal blocks of D(p) for a block-structured even set under the
/// descent condition p_{d-1} = 0; the off-diagonal blocks vanish
/// identically. Each block equals the Dirac operator of the corresponding
/// odd child at the truncated momentum.
struct ReducedOperator {
  Eigen::MatrixXcd plus;
  Eigen::MatrixXcd minus;
};

ReducedOperator reduced_operator(const GammaSet& s, const Momentum& p);

/// For a block-structured even set with truncated momentum q of dimension
/// d-1: the minus child's operator at q equals the plus child's operator at
/// q with its last component negated, exactly (the children differ only by
/// the sign of their last generator).
Report reflection_equivalence_check(const GammaSet& s_even,
                                    const Momentum& q_truncated);

/// psi+ g^0, the row covector pairing spinors into a real Lagrangian.
Eigen::RowVectorXcd dirac_adjoint(const GammaSet& s, const Spinor& psi);

/// Compares the plane-wave Lagrangian density of a block-structured even
/// set under p_{d-1} = 0 against the sum of its two block Lagrangians;
/// passes within 1e-10 relative.
Report lagrangian_split_check(const GammaSet& s, const Spinor& psi,
                              const Momentum& p);

}  // namespace cliffdesc
