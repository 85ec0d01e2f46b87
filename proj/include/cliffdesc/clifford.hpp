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

#include <utility>
#include <vector>

#include "cliffdesc/gamma_set.hpp"
#include "cliffdesc/ordered_product.hpp"

namespace cliffdesc {

/// Canonical word for the chiral element in even dimension 2l:
/// i^(l-1) g^0 ... g^{2l-1}.
OrderedProduct chiral_word(int dim);

/// Canonical word for kappa = g^{d-1} * chiral in even dimension; normal
/// ordering collapses it to i^(l-1) g^0 ... g^{d-2}.
OrderedProduct kappa_word(int dim);

/// Chiral matrix of an even-dimensional set: a Hermitian involution that
/// anticommutes with every generator.
ExactMatrix chiral(const GammaSet& s);

/// Sign eps in g^0 ... g^{2l} = eps * i^l * 1 for an odd-dimensional set.
/// The sign is a similarity invariant and labels the equivalence class.
/// Throws StructureError if the full product is not such a multiple of the
/// identity.
int pseudoscalar_class(const GammaSet& s);

/// kappa = g^{d-1} * chiral: Hermitian involution commuting with g^mu for
/// mu < d-1 and anticommuting with g^{d-1}. Even dimension only.
ExactMatrix kappa(const GammaSet& s);

/// P(+/-) = (1 +/- kappa) / 2, the complementary projectors onto the kappa
/// eigenspaces. Even dimension only.
std::pair<ExactMatrix, ExactMatrix> kappa_projectors(const GammaSet& s);

/// All canonical basis words commuting with g^mu for every mu < preserved,
/// found by scanning the 2^dim index subsets combinatorially. Each surviving
/// word carries the phase that makes materialize() reproduce the named
/// element (the kappa word in the preserved = dim-1 case).
std::vector<OrderedProduct> commutant_basis(const GammaSet& s, int preserved);

struct LorentzGenerator {
  int mu = 0;
  int nu = 0;
  ExactMatrix matrix;
};

/// S^{mu nu} = (i/2) g^mu g^nu for all pairs mu < nu.
std::vector<LorentzGenerator> lorentz_generators(const GammaSet& s);

enum class Equivalence { kEquivalent, kInequivalent };

/// Two odd sets of equal dimension are equivalent exactly when their
/// pseudoscalar classes agree.
Equivalence classify_odd_pair(const GammaSet& a, const GammaSet& b);

}  // namespace cliffdesc
