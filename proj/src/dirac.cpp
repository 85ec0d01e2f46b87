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

#include "cliffdesc/dirac.hpp"

#include <cmath>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "cliffdesc/descent.hpp"
#include "cliffdesc/errors.hpp"

namespace cliffdesc {

double minkowski_square(const Momentum& p) {
  double s = 0.0;
  for (int mu = 0; mu < p.dim(); ++mu) {
    const double c = p.components[static_cast<std::size_t>(mu)];
    s += (mu == 0 ? 1.0 : -1.0) * c * c;
  }
  return s;
}

double momentum_scale(const Momentum& p) {
  double norm2 = 0.0;
  for (double c : p.components) norm2 += c * c;
  const double r = std::sqrt(norm2) + p.mass;
  return r * r;
}

DiracOperator dirac_operator(const GammaSet& s, const Momentum& p) {
  require_well_formed(s);
  if (p.dim() != s.dim) {
    throw DimensionError("dirac_operator: momentum has " +
                         std::to_string(p.dim()) + " components for a " +
                         std::to_string(s.dim) + "-dimensional set");
  }
  const Eigen::Index n = s.order();
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(n, n);
  for (int mu = 0; mu < s.dim; ++mu) {
    d += p.components[static_cast<std::size_t>(mu)] *
         to_complex(s.matrices[static_cast<std::size_t>(mu)]);
  }
  d -= p.mass * Eigen::MatrixXcd::Identity(n, n);
  return {std::move(d), p, s.label};
}

double dispersion_residual(const GammaSet& s, const Momentum& p) {
  const Eigen::Index n = s.order();
  const Eigen::MatrixXcd d = dirac_operator(s, p).matrix;
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  const Eigen::MatrixXcd residual =
      d * (d + 2.0 * p.mass * id) -
      (minkowski_square(p) - p.mass * p.mass) * id;
  return residual.cwiseAbs().maxCoeff();
}

std::pair<double, double> determinant_identity(const GammaSet& s,
                                               const Momentum& p) {
  const Eigen::MatrixXcd d = dirac_operator(s, p).matrix;
  const double lhs = std::abs(d.determinant());
  const double rhs = std::pow(std::abs(minkowski_square(p) - p.mass * p.mass),
                              s.order() / 2.0);
  return {lhs, rhs};
}

namespace {

void fix_spinor_phase(Spinor& v, double threshold) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double m = std::abs(v(i));
    if (m > threshold) {
      v *= std::conj(v(i)) / m;
      return;
    }
  }
}

}  // namespace

std::vector<Spinor> plane_wave_solutions(const GammaSet& s, const Momentum& p,
                                         double threshold) {
  const double scale = momentum_scale(p);
  if (scale == 0.0) {
    throw UsageError(
        "plane_wave_solutions: momentum and mass are both zero");
  }
  if (std::abs(minkowski_square(p) - p.mass * p.mass) > threshold * scale) {
    return {};  // off-shell: no plane-wave solutions
  }
  const Eigen::MatrixXcd d = dirac_operator(s, p).matrix;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(d, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = threshold * sv(0);
  std::vector<Spinor> basis;
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    if (sv(k) <= cutoff) {
      Spinor v = svd.matrixV().col(k);
      fix_spinor_phase(v, threshold);
      basis.push_back(std::move(v));
    }
  }
  return basis;
}

ReducedOperator reduced_operator(const GammaSet& s, const Momentum& p) {
  if (p.dim() != s.dim) {
    throw DimensionError("reduced_operator: momentum length mismatch");
  }
  if (p.components.back() != 0.0) {
    throw UsageError(
        "reduced_operator: descent condition violated, last momentum "
        "component is not zero");
  }
  if (!is_block_structured(s)) {
    throw StructureError("reduced_operator: set lacks the block form");
  }
  const Eigen::Index h = s.order() / 2;
  const Eigen::MatrixXcd d = dirac_operator(s, p).matrix;
  if (d.topRightCorner(h, h).cwiseAbs().maxCoeff() != 0.0 ||
      d.bottomLeftCorner(h, h).cwiseAbs().maxCoeff() != 0.0) {
    throw NumericError(
        "reduced_operator: off-diagonal blocks did not vanish identically");
  }
  return {d.topLeftCorner(h, h), d.bottomRightCorner(h, h)};
}

Report reflection_equivalence_check(const GammaSet& s_even,
                                    const Momentum& q_truncated) {
  if (q_truncated.dim() != s_even.dim - 1) {
    throw DimensionError(
        "reflection_equivalence_check: momentum must have one component "
        "fewer than the set dimension");
  }
  const auto [plus, minus] = split_even(s_even);
  Momentum reflected = q_truncated;
  reflected.components.back() = -reflected.components.back();
  const Eigen::MatrixXcd d_minus = dirac_operator(minus, q_truncated).matrix;
  const Eigen::MatrixXcd d_plus = dirac_operator(plus, reflected).matrix;

  Report r{"reflection-equivalence", true, ""};
  for (Eigen::Index i = 0; i < d_minus.rows(); ++i) {
    for (Eigen::Index j = 0; j < d_minus.cols(); ++j) {
      if (!(d_minus(i, j) == d_plus(i, j))) {
        r.pass = false;
        r.detail = "operators differ at entry (" + std::to_string(i) + "," +
                   std::to_string(j) + ")";
        return r;
      }
    }
  }
  return r;
}

Eigen::RowVectorXcd dirac_adjoint(const GammaSet& s, const Spinor& psi) {
  require_well_formed(s);
  if (psi.size() != s.order()) {
    throw DimensionError("dirac_adjoint: spinor length " +
                         std::to_string(psi.size()) +
                         " differs from the matrix order " +
                         std::to_string(s.order()));
  }
  return psi.adjoint() * to_complex(s.matrices[0]);
}

Report lagrangian_split_check(const GammaSet& s, const Spinor& psi,
                              const Momentum& p) {
  if (p.dim() != s.dim) {
    throw DimensionError("lagrangian_split_check: momentum length mismatch");
  }
  if (p.components.back() != 0.0) {
    throw UsageError(
        "lagrangian_split_check: descent condition violated, last momentum "
        "component is not zero");
  }
  const Eigen::Index n = s.order();
  if (psi.size() != n) {
    throw DimensionError("lagrangian_split_check: spinor length mismatch");
  }
  const Eigen::Index h = n / 2;

  const std::complex<double> full =
      (dirac_adjoint(s, psi) * (dirac_operator(s, p).matrix * psi)).value();

  const auto [plus, minus] = split_even(s);
  Momentum q = p;
  q.components.pop_back();
  const Spinor psi_plus = psi.head(h);
  const Spinor psi_minus = psi.tail(h);
  const std::complex<double> part_plus =
      (dirac_adjoint(plus, psi_plus) *
       (dirac_operator(plus, q).matrix * psi_plus))
          .value();
  const std::complex<double> part_minus =
      (dirac_adjoint(minus, psi_minus) *
       (dirac_operator(minus, q).matrix * psi_minus))
          .value();

  const double deviation = std::abs(full - (part_plus + part_minus));
  const double magnitude = std::max(
      {1.0, std::abs(full), std::abs(part_plus) + std::abs(part_minus)});
  Report r{"lagrangian-split", true, ""};
  if (deviation > 1e-10 * magnitude) {
    r.pass = false;
    r.detail = "density differs from the block sum by " +
               std::to_string(deviation);
  }
  return r;
}

}  // namespace cliffdesc
