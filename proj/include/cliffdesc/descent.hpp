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

#include <memory>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "cliffdesc/gamma_set.hpp"

namespace cliffdesc {

/// True when the even set has the exact descent block form: every generator
/// but the last block-diagonal in two order-N/2 blocks, the last generator
/// block-off-diagonal.
bool is_block_structured(const GammaSet& s);

/// Splits a block-structured even set into its two odd children: the
/// upper-left and lower-right block families of the first d-1 generators.
/// The children have opposite pseudoscalar classes. Throws StructureError
/// when the block form does not hold exactly (diagonalize_kappa brings a
/// generic set into that form first).
std::pair<GammaSet, GammaSet> split_even(const GammaSet& s);

/// Removes the last generator of an odd set, yielding an even set of the
/// same matrix order.
GammaSet drop_last(const GammaSet& s);

enum class Branch { kRoot, kPlus, kMinus, kDrop };

const char* branch_name(Branch b);

/// One node of the descent tree. Even nodes split into a plus and a minus
/// child; odd nodes drop their last generator into a single child.
struct DescentNode {
  GammaSet set;
  Branch branch = Branch::kRoot;
  std::vector<std::unique_ptr<DescentNode>> children;
};

std::unique_ptr<DescentNode> descend_chain(const GammaSet& s, int steps);

/// Checks the exact relations between the blocks of the last generator and
/// of the chiral matrix of a block-structured even set: with B the
/// upper-right block of the last generator, its lower-left block is -B+,
/// B is unitary, and the chiral matrix is [[0, B], [B+, 0]].
Report verify_block_relations(const GammaSet& s);

/// Result of rotating an even set so that kappa becomes diag(1, -1) blocks.
/// When every rotated entry lands on the quarter-phase dyadic lattice
/// (within 1e-10), the set is returned exactly and `exact` is true;
/// otherwise `floating` holds the rotated matrices.
struct KappaDiagonalization {
  Eigen::MatrixXcd u;
  bool exact = false;
  GammaSet set;
  std::vector<Eigen::MatrixXcd> floating;
};

/// Unitary change of basis built from the kappa eigenprojectors by
/// Gram-Schmidt over their columns (plus eigenspace first, phases fixed by
/// making the first sizable component of each vector real-positive), so the
/// output is deterministic.
KappaDiagonalization diagonalize_kappa(const GammaSet& s);

/// Floating counterpart of split_even for rotated sets that did not land on
/// the exact lattice: returns the two diagonal block families of the first
/// d-1 matrices after checking off-blocks vanish within tol.
std::pair<std::vector<Eigen::MatrixXcd>, std::vector<Eigen::MatrixXcd>>
split_even_float(const std::vector<Eigen::MatrixXcd>& matrices,
                 double tol = 1e-10);

}  // namespace cliffdesc
