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

#include "cliffdesc/descent.hpp"

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cliffdesc/clifford.hpp"
#include "cliffdesc/errors.hpp"

namespace cliffdesc {

namespace {

bool block_is_zero(const ExactMatrix& m, Eigen::Index r0, Eigen::Index c0,
                   Eigen::Index h) {
  for (Eigen::Index i = 0; i < h; ++i) {
    for (Eigen::Index j = 0; j < h; ++j) {
      if (!m(r0 + i, c0 + j).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

bool is_block_structured(const GammaSet& s) {
  require_well_formed(s);
  if (s.dim % 2 != 0) return false;
  const Eigen::Index h = s.order() / 2;
  for (int mu = 0; mu < s.dim - 1; ++mu) {
    if (!block_is_zero(s.matrices[mu], 0, h, h) ||
        !block_is_zero(s.matrices[mu], h, 0, h)) {
      return false;
    }
  }
  return block_is_zero(s.matrices[s.dim - 1], 0, 0, h) &&
         block_is_zero(s.matrices[s.dim - 1], h, h, h);
}

std::pair<GammaSet, GammaSet> split_even(const GammaSet& s) {
  if (s.dim % 2 != 0) {
    throw ParityError("split_even: dimension must be even");
  }
  if (!is_block_structured(s)) {
    throw StructureError(
        "split_even: set lacks the exact block form; rotate it with "
        "diagonalize_kappa first");
  }
  const Eigen::Index h = s.order() / 2;
  GammaSet plus{s.dim - 1, {}, s.label + "+"};
  GammaSet minus{s.dim - 1, {}, s.label + "-"};
  for (int mu = 0; mu < s.dim - 1; ++mu) {
    plus.matrices.push_back(s.matrices[mu].topLeftCorner(h, h));
    minus.matrices.push_back(s.matrices[mu].bottomRightCorner(h, h));
  }
  return {std::move(plus), std::move(minus)};
}

GammaSet drop_last(const GammaSet& s) {
  if (s.dim % 2 == 0) {
    throw ParityError("drop_last: dimension must be odd");
  }
  require_well_formed(s);
  GammaSet out{s.dim - 1, s.matrices, s.label + "-drop"};
  out.matrices.pop_back();
  return out;
}

const char* branch_name(Branch b) {
  switch (b) {
    case Branch::kRoot: return "root";
    case Branch::kPlus: return "plus";
    case Branch::kMinus: return "minus";
    case Branch::kDrop: return "drop";
  }
  return "?";
}

namespace {

void grow(DescentNode* node, int steps) {
  if (steps == 0) return;
  if (node->set.dim % 2 == 0) {
    auto [plus, minus] = split_even(node->set);
    auto left = std::make_unique<DescentNode>();
    left->set = std::move(plus);
    left->branch = Branch::kPlus;
    auto right = std::make_unique<DescentNode>();
    right->set = std::move(minus);
    right->branch = Branch::kMinus;
    grow(left.get(), steps - 1);
    grow(right.get(), steps - 1);
    node->children.push_back(std::move(left));
    node->children.push_back(std::move(right));
  } else {
    auto child = std::make_unique<DescentNode>();
    child->set = drop_last(node->set);
    child->branch = Branch::kDrop;
    grow(child.get(), steps - 1);
    node->children.push_back(std::move(child));
  }
}

}  // namespace

std::unique_ptr<DescentNode> descend_chain(const GammaSet& s, int steps) {
  require_well_formed(s);
  if (steps < 0 || steps > s.dim - 2) {
    throw UsageError("descend_chain: steps " + std::to_string(steps) +
                     " outside [0, " + std::to_string(s.dim - 2) + "]");
  }
  auto root = std::make_unique<DescentNode>();
  root->set = s;
  root->branch = Branch::kRoot;
  grow(root.get(), steps);
  return root;
}

Report verify_block_relations(const GammaSet& s) {
  if (s.dim % 2 != 0) {
    throw ParityError("verify_block_relations: dimension must be even");
  }
  if (!is_block_structured(s)) {
    throw StructureError("verify_block_relations: set lacks the block form");
  }
  Report r{"block-relations", true, ""};
  const Eigen::Index h = s.order() / 2;
  const ExactMatrix b = s.matrices[s.dim - 1].topRightCorner(h, h);
  const ExactMatrix c = s.matrices[s.dim - 1].bottomLeftCorner(h, h);
  if (!exact_equal(ExactMatrix(b * adjoint(b)), exact_identity(h))) {
    r.pass = false;
    r.detail = "upper-right block of the last generator is not unitary";
    return r;
  }
  if (!exact_equal(c, ExactMatrix(-adjoint(b)))) {
    r.pass = false;
    r.detail =
        "lower-left block differs from minus the adjoint of the upper-right "
        "block";
    return r;
  }
  const ExactMatrix ch = chiral(s);
  if (!block_is_zero(ch, 0, 0, h) || !block_is_zero(ch, h, h, h) ||
      !exact_equal(ExactMatrix(ch.topRightCorner(h, h)), b) ||
      !exact_equal(ExactMatrix(ch.bottomLeftCorner(h, h)), adjoint(b))) {
    r.pass = false;
    r.detail =
        "chiral matrix does not have the [[0, B], [B+, 0]] block form of the "
        "last generator's upper-right block";
    return r;
  }
  return r;
}

namespace {

// Deterministic phase: rotate so the largest-magnitude component is
// real-positive.
void fix_phase(Eigen::VectorXcd& v) {
  Eigen::Index best = 0;
  double best_mag = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double m = std::abs(v(i));
    if (m > best_mag) {
      best_mag = m;
      best = i;
    }
  }
  if (best_mag > 0.0) v *= std::conj(v(best)) / best_mag;
}

}  // namespace

KappaDiagonalization diagonalize_kappa(const GammaSet& s) {
  if (s.dim % 2 != 0) {
    throw ParityError("diagonalize_kappa: dimension must be even");
  }
  const Eigen::Index n = s.order();
  const Eigen::Index h = n / 2;
  const Eigen::MatrixXcd kf = to_complex(kappa(s));
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);

  // Gram-Schmidt over the eigenprojector columns, plus eigenspace first.
  std::vector<Eigen::VectorXcd> basis;
  basis.reserve(static_cast<std::size_t>(n));
  for (const double sign : {1.0, -1.0}) {
    const Eigen::MatrixXcd proj = (id + sign * kf) / 2.0;
    const std::size_t begin = basis.size();
    for (Eigen::Index j = 0; j < n && basis.size() < begin + h; ++j) {
      Eigen::VectorXcd v = proj.col(j);
      for (const Eigen::VectorXcd& b : basis) v -= b.dot(v) * b;
      if (v.norm() <= 1e-10) continue;
      v /= v.norm();
      fix_phase(v);
      basis.push_back(std::move(v));
    }
    if (basis.size() != begin + h) {
      throw NumericError(
          "diagonalize_kappa: kappa eigenspace is not of dimension order/2");
    }
  }

  KappaDiagonalization out;
  out.u.resize(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    out.u.row(r) = basis[static_cast<std::size_t>(r)].adjoint();
  }

  out.floating.reserve(s.matrices.size());
  for (const ExactMatrix& g : s.matrices) {
    out.floating.push_back(out.u * to_complex(g) * out.u.adjoint());
  }

  // Snap to the dyadic lattice with denominator up to 2^20.
  const double scale = static_cast<double>(std::int64_t{1} << 20);
  GammaSet snapped{s.dim, {}, s.label + "-rotated"};
  bool on_lattice = true;
  for (const Eigen::MatrixXcd& m : out.floating) {
    ExactMatrix e(n, n);
    for (Eigen::Index i = 0; i < n && on_lattice; ++i) {
      for (Eigen::Index j = 0; j < n && on_lattice; ++j) {
        const double re = m(i, j).real();
        const double im = m(i, j).imag();
        const double re_q = std::nearbyint(re * scale);
        const double im_q = std::nearbyint(im * scale);
        if (std::abs(re - re_q / scale) > 1e-10 ||
            std::abs(im - im_q / scale) > 1e-10) {
          on_lattice = false;
          break;
        }
        e(i, j) = ExactScalar(static_cast<std::int64_t>(re_q),
                              static_cast<std::int64_t>(im_q), 20);
      }
    }
    if (!on_lattice) break;
    snapped.matrices.push_back(std::move(e));
  }
  // The snapped set must still satisfy the algebra; a lattice hit that broke
  // it would mean the rotation was not accurate enough to trust exactly.
  if (on_lattice && verify_clifford(snapped).pass) {
    out.exact = true;
    out.set = std::move(snapped);
  }
  return out;
}

std::pair<std::vector<Eigen::MatrixXcd>, std::vector<Eigen::MatrixXcd>>
split_even_float(const std::vector<Eigen::MatrixXcd>& matrices, double tol) {
  if (matrices.empty() || matrices.size() % 2 != 0) {
    throw ParityError("split_even_float: need an even number of matrices");
  }
  const Eigen::Index n = matrices[0].rows();
  const Eigen::Index h = n / 2;
  const int d = static_cast<int>(matrices.size());
  for (int mu = 0; mu < d - 1; ++mu) {
    const double off =
        std::max(matrices[mu].topRightCorner(h, h).cwiseAbs().maxCoeff(),
                 matrices[mu].bottomLeftCorner(h, h).cwiseAbs().maxCoeff());
    if (off > tol) {
      throw StructureError("split_even_float: generator " +
                           std::to_string(mu) +
                           " has off-diagonal mass above tolerance");
    }
  }
  const double diag =
      std::max(matrices[d - 1].topLeftCorner(h, h).cwiseAbs().maxCoeff(),
               matrices[d - 1].bottomRightCorner(h, h).cwiseAbs().maxCoeff());
  if (diag > tol) {
    throw StructureError(
        "split_even_float: last generator has diagonal mass above tolerance");
  }
  std::vector<Eigen::MatrixXcd> plus;
  std::vector<Eigen::MatrixXcd> minus;
  for (int mu = 0; mu < d - 1; ++mu) {
    plus.push_back(matrices[static_cast<std::size_t>(mu)].topLeftCorner(h, h));
    minus.push_back(
        matrices[static_cast<std::size_t>(mu)].bottomRightCorner(h, h));
  }
  return {std::move(plus), std::move(minus)};
}

}  // namespace cliffdesc
