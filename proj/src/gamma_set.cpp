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

#include "cliffdesc/gamma_set.hpp"

#include <string>

#include "cliffdesc/errors.hpp"

namespace cliffdesc {

void require_well_formed(const GammaSet& s) {
  if (s.dim < 2) {
    throw StructureError("gamma set: dim must be at least 2, got " +
                         std::to_string(s.dim));
  }
  if (static_cast<int>(s.matrices.size()) != s.dim) {
    throw StructureError("gamma set: expected " + std::to_string(s.dim) +
                         " matrices, got " +
                         std::to_string(s.matrices.size()));
  }
  const int n = s.order();
  for (int mu = 0; mu < s.dim; ++mu) {
    if (s.matrices[mu].rows() != n || s.matrices[mu].cols() != n) {
      throw StructureError("gamma set: matrix " + std::to_string(mu) +
                           " is not of order " + std::to_string(n));
    }
  }
}

Report verify_clifford(const GammaSet& s) {
  require_well_formed(s);
  Report r{"clifford", true, ""};
  const int n = s.order();
  for (int mu = 0; mu < s.dim; ++mu) {
    for (int nu = mu; nu < s.dim; ++nu) {
      ExactMatrix anti = s.matrices[mu] * s.matrices[nu] +
                         s.matrices[nu] * s.matrices[mu];
      ExactMatrix expected = exact_zero(n);
      if (mu == nu) {
        expected = ExactScalar(2 * metric_diag(mu)) * exact_identity(n);
      }
      if (!exact_equal(anti, expected)) {
        r.pass = false;
        r.detail = "anticommutator (" + std::to_string(mu) + "," +
                   std::to_string(nu) + ") differs from 2*eta*1";
        return r;
      }
    }
  }
  return r;
}

Report verify_hermiticity(const GammaSet& s) {
  require_well_formed(s);
  Report r{"hermiticity", true, ""};
  const ExactMatrix& g0 = s.matrices[0];
  const ExactMatrix id = exact_identity(s.order());
  for (int mu = 0; mu < s.dim; ++mu) {
    const ExactMatrix& g = s.matrices[mu];
    if (!exact_equal(adjoint(g), ExactMatrix(g0 * g * g0))) {
      r.pass = false;
      r.detail = "adjoint of matrix " + std::to_string(mu) +
                 " differs from g0 * g * g0";
      return r;
    }
    if (!exact_equal(ExactMatrix(g * adjoint(g)), id)) {
      r.pass = false;
      r.detail = "matrix " + std::to_string(mu) + " is not unitary";
      return r;
    }
  }
  return r;
}

Report verify_traceless(const GammaSet& s) {
  require_well_formed(s);
  Report r{"traceless", true, ""};
  for (int mu = 0; mu < s.dim; ++mu) {
    if (!trace(s.matrices[mu]).is_zero()) {
      r.pass = false;
      r.detail = "matrix " + std::to_string(mu) + " has trace " +
                 trace(s.matrices[mu]).str();
      return r;
    }
  }
  return r;
}

}  // namespace cliffdesc
