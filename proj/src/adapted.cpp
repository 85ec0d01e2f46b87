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

#include "cliffdesc/adapted.hpp"

#include <string>
#include <utility>
#include <vector>

#include "cliffdesc/clifford.hpp"
#include "cliffdesc/errors.hpp"

namespace cliffdesc {

ExactMatrix factor_matrix(FactorTag tag) {
  switch (tag) {
    case FactorTag::kIdentity:
      return exact_identity(2);
    case FactorTag::kSigma1:
      return pauli1();
    case FactorTag::kSigma3:
      return pauli3();
    case FactorTag::kISigma2:
      return ExactScalar(0, 1) * pauli2();
    case FactorTag::kMinusISigma3:
      return ExactScalar(0, -1) * pauli3();
    case FactorTag::kMinusISigma1:
      return ExactScalar(0, -1) * pauli1();
    case FactorTag::kPlusISigma1:
      return ExactScalar(0, 1) * pauli1();
  }
  throw UsageError("factor_matrix: unknown tag");
}

std::string factor_name(FactorTag tag) {
  switch (tag) {
    case FactorTag::kIdentity: return "1";
    case FactorTag::kSigma1: return "s1";
    case FactorTag::kSigma3: return "s3";
    case FactorTag::kISigma2: return "i*s2";
    case FactorTag::kMinusISigma3: return "-i*s3";
    case FactorTag::kMinusISigma1: return "-i*s1";
    case FactorTag::kPlusISigma1: return "i*s1";
  }
  throw UsageError("factor_name: unknown tag");
}

ExactMatrix materialize_recipe(const std::vector<FactorTag>& recipe) {
  if (recipe.empty()) {
    throw UsageError("materialize_recipe: empty factor list");
  }
  ExactMatrix out = factor_matrix(recipe[0]);
  for (std::size_t k = 1; k < recipe.size(); ++k) {
    out = kron(out, factor_matrix(recipe[k]));
  }
  return out;
}

bool recipe_consistent(const AdaptedSet& s) {
  if (s.recipe.size() != s.base.matrices.size()) return false;
  for (std::size_t k = 0; k < s.recipe.size(); ++k) {
    if (!exact_equal(materialize_recipe(s.recipe[k]), s.base.matrices[k])) {
      return false;
    }
  }
  return true;
}

AdaptedSet adapted_base() {
  AdaptedSet s;
  s.base.dim = 2;
  s.base.label = "adapted-2";
  s.base.matrices = {pauli3(), ExactScalar(0, 1) * pauli2()};
  s.recipe = {{FactorTag::kSigma3}, {FactorTag::kISigma2}};
  return s;
}

AdaptedSet adapted_step_even(const AdaptedSet& s) {
  if (s.base.dim % 2 != 0) {
    throw ParityError("adapted_step_even: input dimension must be even");
  }
  const int l = s.base.dim / 2;
  const ExactMatrix ch = chiral(s.base);

  AdaptedSet next;
  next.base.dim = s.base.dim + 2;
  next.base.label = "adapted-" + std::to_string(next.base.dim);

  const ExactMatrix id2 = exact_identity(2);
  for (int mu = 0; mu < s.base.dim; ++mu) {
    next.base.matrices.push_back(kron(id2, s.base.matrices[mu]));
    std::vector<FactorTag> row = {FactorTag::kIdentity};
    row.insert(row.end(), s.recipe[mu].begin(), s.recipe[mu].end());
    next.recipe.push_back(std::move(row));
  }
  // The chiral matrix of the input is the l-fold Kronecker power of sigma1,
  // so the new rows are a phase factor followed by l copies of sigma1.
  next.base.matrices.push_back(
      kron(ExactMatrix(factor_matrix(FactorTag::kMinusISigma3)), ch));
  next.base.matrices.push_back(
      kron(ExactMatrix(factor_matrix(FactorTag::kISigma2)), ch));
  std::vector<FactorTag> row_a = {FactorTag::kMinusISigma3};
  std::vector<FactorTag> row_b = {FactorTag::kISigma2};
  row_a.insert(row_a.end(), l, FactorTag::kSigma1);
  row_b.insert(row_b.end(), l, FactorTag::kSigma1);
  next.recipe.push_back(std::move(row_a));
  next.recipe.push_back(std::move(row_b));
  return next;
}

AdaptedSet adapted_fill_odd(const AdaptedSet& s) {
  if (s.base.dim % 2 != 0) {
    throw ParityError("adapted_fill_odd: input dimension must be even");
  }
  const int l = s.base.dim / 2;
  AdaptedSet next = s;
  next.base.dim = s.base.dim + 1;
  next.base.label = "adapted-" + std::to_string(next.base.dim);
  next.base.matrices.push_back(ExactScalar(0, -1) * chiral(s.base));
  std::vector<FactorTag> row = {FactorTag::kMinusISigma1};
  row.insert(row.end(), l - 1, FactorTag::kSigma1);
  next.recipe.push_back(std::move(row));
  return next;
}

AdaptedSet conjugate_odd(const AdaptedSet& s) {
  if (s.base.dim % 2 == 0) {
    throw ParityError("conjugate_odd: input dimension must be odd");
  }
  AdaptedSet next = s;
  next.base.matrices.back() = -next.base.matrices.back();
  std::vector<FactorTag>& row = next.recipe.back();
  switch (row[0]) {
    case FactorTag::kMinusISigma1: row[0] = FactorTag::kPlusISigma1; break;
    case FactorTag::kPlusISigma1: row[0] = FactorTag::kMinusISigma1; break;
    default:
      throw StructureError(
          "conjugate_odd: last recipe row does not start with a chiral "
          "phase factor");
  }
  if (next.base.label.rfind("-conjugate") != std::string::npos &&
      next.base.label.rfind("-conjugate") == next.base.label.size() - 10) {
    next.base.label.resize(next.base.label.size() - 10);
  } else {
    next.base.label += "-conjugate";
  }
  return next;
}

AdaptedSet adapted(int dim, int max_dim) {
  if (dim < 2 || dim > max_dim) {
    throw UsageError("adapted: dimension " + std::to_string(dim) +
                     " outside [2, " + std::to_string(max_dim) + "]");
  }
  AdaptedSet s = adapted_base();
  while (s.base.dim + 2 <= dim) s = adapted_step_even(s);
  if (s.base.dim < dim) s = adapted_fill_odd(s);
  return s;
}

Report verify_exchange_chiral(const AdaptedSet& s) {
  if (s.base.dim % 2 != 0) {
    throw ParityError("verify_exchange_chiral: dimension must be even");
  }
  Report r{"exchange-chiral", true, ""};
  if (!exact_equal(chiral(s.base), exchange_matrix(s.base.order()))) {
    r.pass = false;
    r.detail = "chiral matrix differs from the exchange matrix";
  }
  return r;
}

}  // namespace cliffdesc
