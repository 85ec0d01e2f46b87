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

#include <cstddef>
#include <vector>

#include "cliffdesc/exact_matrix.hpp"

namespace cliffdesc {

/// Finite multiplicative closure of a list of exact matrices. Element 0 is
/// the identity; words[k] spells element k as a product of generator
/// indices, so the same abstract element can be evaluated in any other
/// representation of the generators.
struct MatrixGroup {
  std::vector<ExactMatrix> elements;
  std::vector<std::vector<int>> words;
  std::vector<std::size_t> generator_positions;

  std::size_t size() const { return elements.size(); }
};

/// Breadth-first closure under multiplication, with exact equality as the
/// identity of elements. Throws ClosureBoundError past max_elements.
MatrixGroup group_closure(const std::vector<ExactMatrix>& generators,
                          std::size_t max_elements = 100000);

/// Pairs each family element with its partner on the block diagonal:
/// diag(a[k], b[k]). The closure of these direct sums carries both block
/// representations of one abstract group side by side.
std::vector<ExactMatrix> direct_sums(const std::vector<ExactMatrix>& a,
                                     const std::vector<ExactMatrix>& b);

/// Traces of the upper-left (order upper_order) and lower-right blocks of
/// every group element, in element order.
struct BlockCharacters {
  std::vector<ExactScalar> upper;
  std::vector<ExactScalar> lower;
};

BlockCharacters block_characters(const MatrixGroup& group,
                                 Eigen::Index upper_order);

/// Hermitian pairing sum_k conj(a[k]) * b[k]. Zero certifies inequivalence
/// of the two block representations; the self-pairing of an irreducible
/// block equals the group order.
ExactScalar character_inner(const std::vector<ExactScalar>& a,
                            const std::vector<ExactScalar>& b);

/// End-to-end pairing of two equally long generator families: closes the
/// group of direct sums diag(a[k], b[k]) and returns
/// sum_g conj(tr_upper(g)) * tr_lower(g).
ExactScalar character_orthogonality(const std::vector<ExactMatrix>& a,
                                    const std::vector<ExactMatrix>& b,
                                    std::size_t max_elements = 100000);

}  // namespace cliffdesc
