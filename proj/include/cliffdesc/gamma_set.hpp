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

#include "cliffdesc/exact_matrix.hpp"

namespace cliffdesc {

/// Matrix order of a generator set in dimension d: 2^floor(d/2).
inline int gamma_order(int dim) { return 1 << (dim / 2); }

/// Diagonal Minkowski metric, signature (+, -, ..., -).
inline int metric_diag(int mu) { return mu == 0 ? 1 : -1; }

/// A candidate set of gamma matrices: dim generators of order 2^floor(dim/2).
/// Construction does not validate the algebra; the verify_* functions below
/// decide whether the set actually satisfies it.
struct GammaSet {
  int dim = 0;
  std::vector<ExactMatrix> matrices;
  std::string label;

  int order() const { return gamma_order(dim); }
};

/// Outcome of one verification. A failed check is a value, not an exception;
/// detail names the first witness of failure.
struct Report {
  std::string check;
  bool pass = true;
  std::string detail;
};

/// Throws StructureError unless the container shape is coherent: dim >= 2,
/// dim matrices, every matrix square of order 2^floor(dim/2).
void require_well_formed(const GammaSet& s);

/// Anticommutator relations: g^mu g^nu + g^nu g^mu = 2 eta^{mu nu} 1 for all
/// mu <= nu, exactly.
Report verify_clifford(const GammaSet& s);

/// Adjoint relations: (g^mu)+ = g^0 g^mu g^0 for all mu, plus unitarity
/// g^mu (g^mu)+ = 1, exactly.
Report verify_hermiticity(const GammaSet& s);

/// trace(g^mu) = 0 for all mu, exactly.
Report verify_traceless(const GammaSet& s);

}  // namespace cliffdesc
