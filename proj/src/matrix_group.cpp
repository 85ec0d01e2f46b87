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

#include "cliffdesc/matrix_group.hpp"

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cliffdesc/errors.hpp"

namespace cliffdesc {

namespace {

/// Exact-equality membership index over hash buckets.
class ElementIndex {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  // Position of m among elements, or npos.
  std::size_t find(const std::vector<ExactMatrix>& elements,
                   const ExactMatrix& m) const {
    auto it = buckets_.find(hash_value(m));
    if (it == buckets_.end()) return npos;
    for (std::size_t pos : it->second) {
      if (exact_equal(elements[pos], m)) return pos;
    }
    return npos;
  }

  void insert(const ExactMatrix& m, std::size_t pos) {
    buckets_[hash_value(m)].push_back(pos);
  }

 private:
  std::unordered_map<std::size_t, std::vector<std::size_t>> buckets_;
};

}  // namespace

MatrixGroup group_closure(const std::vector<ExactMatrix>& generators,
                          std::size_t max_elements) {
  if (generators.empty()) {
    throw UsageError("group_closure: no generators");
  }
  const Eigen::Index n = generators[0].rows();
  for (const ExactMatrix& g : generators) {
    if (g.rows() != n || g.cols() != n) {
      throw DimensionError("group_closure: generators of mixed order");
    }
  }

  MatrixGroup group;
  ElementIndex index;
  group.elements.push_back(exact_identity(n));
  group.words.push_back({});
  index.insert(group.elements[0], 0);

  for (std::size_t k = 0; k < generators.size(); ++k) {
    std::size_t pos = index.find(group.elements, generators[k]);
    if (pos == ElementIndex::npos) {
      pos = group.elements.size();
      group.elements.push_back(generators[k]);
      group.words.push_back({static_cast<int>(k)});
      index.insert(generators[k], pos);
    }
    group.generator_positions.push_back(pos);
  }

  // Breadth-first: every element reached so far times every generator.
  for (std::size_t head = 0; head < group.elements.size(); ++head) {
    for (std::size_t k = 0; k < generators.size(); ++k) {
      ExactMatrix next = group.elements[head] * generators[k];
      if (index.find(group.elements, next) != ElementIndex::npos) continue;
      if (group.elements.size() >= max_elements) {
        throw ClosureBoundError(
            "group_closure: closure exceeds the configured bound of " +
            std::to_string(max_elements) + " elements");
      }
      std::vector<int> word = group.words[head];
      word.push_back(static_cast<int>(k));
      index.insert(next, group.elements.size());
      group.elements.push_back(std::move(next));
      group.words.push_back(std::move(word));
    }
  }
  return group;
}

std::vector<ExactMatrix> direct_sums(const std::vector<ExactMatrix>& a,
                                     const std::vector<ExactMatrix>& b) {
  if (a.size() != b.size()) {
    throw DimensionError("direct_sums: family sizes differ");
  }
  std::vector<ExactMatrix> out;
  out.reserve(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].rows() != a[k].cols() || b[k].rows() != b[k].cols()) {
      throw DimensionError("direct_sums: non-square family member");
    }
    const Eigen::Index na = a[k].rows();
    const Eigen::Index nb = b[k].rows();
    ExactMatrix m = exact_zero(na + nb);
    m.topLeftCorner(na, na) = a[k];
    m.bottomRightCorner(nb, nb) = b[k];
    out.push_back(std::move(m));
  }
  return out;
}

BlockCharacters block_characters(const MatrixGroup& group,
                                 Eigen::Index upper_order) {
  BlockCharacters chi;
  chi.upper.reserve(group.size());
  chi.lower.reserve(group.size());
  for (const ExactMatrix& g : group.elements) {
    if (upper_order <= 0 || upper_order >= g.rows()) {
      throw DimensionError("block_characters: upper block order " +
                           std::to_string(upper_order) +
                           " does not split order " + std::to_string(g.rows()));
    }
    const Eigen::Index rest = g.rows() - upper_order;
    chi.upper.push_back(
        trace(ExactMatrix(g.topLeftCorner(upper_order, upper_order))));
    chi.lower.push_back(
        trace(ExactMatrix(g.bottomRightCorner(rest, rest))));
  }
  return chi;
}

ExactScalar character_inner(const std::vector<ExactScalar>& a,
                            const std::vector<ExactScalar>& b) {
  if (a.size() != b.size()) {
    throw DimensionError("character_inner: lengths differ");
  }
  ExactScalar sum(0);
  for (std::size_t k = 0; k < a.size(); ++k) sum += a[k].conjugated() * b[k];
  return sum;
}

ExactScalar character_orthogonality(const std::vector<ExactMatrix>& a,
                                    const std::vector<ExactMatrix>& b,
                                    std::size_t max_elements) {
  if (a.empty() || a.size() != b.size()) {
    throw DimensionError("character_orthogonality: family sizes differ");
  }
  const MatrixGroup group = group_closure(direct_sums(a, b), max_elements);
  const BlockCharacters chi = block_characters(group, a[0].rows());
  return character_inner(chi.upper, chi.lower);
}

}  // namespace cliffdesc
