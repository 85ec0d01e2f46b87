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
#include <vector>

#include "cliffdesc/gamma_set.hpp"

namespace cliffdesc {

/// Order-2 Kronecker factors appearing in the recursive construction. The
/// scalar phase of a matrix is folded into its first factor.
enum class FactorTag {
  kIdentity,       // 1
  kSigma1,         // [[0,1],[1,0]]
  kSigma3,         // [[1,0],[0,-1]]
  kISigma2,        // [[0,1],[-1,0]]
  kMinusISigma3,   // [[-i,0],[0,i]]
  kMinusISigma1,   // [[0,-i],[-i,0]]
  kPlusISigma1,    // [[0,i],[i,0]]
};

ExactMatrix factor_matrix(FactorTag tag);
std::string factor_name(FactorTag tag);

/// Kronecker product of the listed factors, left to right.
ExactMatrix materialize_recipe(const std::vector<FactorTag>& recipe);

/// A gamma set produced by the recursive Kronecker construction, together
/// with the per-matrix factor lists that reproduce it. Every entry of every
/// matrix is in {0, +/-1, +/-i} and every matrix is monomial.
struct AdaptedSet {
  GammaSet base;
  std::vector<std::vector<FactorTag>> recipe;
};

/// True when materializing each recipe row reproduces the stored matrix.
bool recipe_consistent(const AdaptedSet& s);

/// Two-dimensional seed: g^0 = sigma3, g^1 = i sigma2.
AdaptedSet adapted_base();

/// Even-to-even step, dimension 2l -> 2l+2 and order N -> 2N: existing
/// matrices are prefixed with an identity factor; the two new matrices are
/// -i sigma3 and i sigma2 tensored with the chiral matrix of the input.
AdaptedSet adapted_step_even(const AdaptedSet& s);

/// Even-to-odd completion, dimension 2l -> 2l+1 at the same order: appends
/// -i times the chiral matrix of the input.
AdaptedSet adapted_fill_odd(const AdaptedSet& s);

/// The inequivalent partner of an odd set: same matrices with the last one
/// negated. Involutive.
AdaptedSet conjugate_odd(const AdaptedSet& s);

/// The canonical set in dimension d: iterate adapted_step_even from the
/// seed, then adapted_fill_odd if d is odd. Deterministic, entries are pure
/// integers so the result is identical across platforms.
AdaptedSet adapted(int dim, int max_dim = 16);

/// Pass iff the chiral matrix equals the exchange matrix J_N. This identity
/// is specific to the adapted construction; it generally breaks under
/// similarity transformations.
Report verify_exchange_chiral(const AdaptedSet& s);

}  // namespace cliffdesc
