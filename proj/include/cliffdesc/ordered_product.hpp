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

/// Canonical form of a word in the generators: i^phase times the product of
/// the gammas with the listed strictly increasing indices. The empty index
/// list denotes a multiple of the identity.
struct OrderedProduct {
  std::vector<int> indices;
  int phase = 0;  // quarter turns, in {0, 1, 2, 3}

  friend bool operator==(const OrderedProduct& a, const OrderedProduct& b) {
    return a.indices == b.indices && a.phase == b.phase;
  }
  friend bool operator!=(const OrderedProduct& a, const OrderedProduct& b) {
    return !(a == b);
  }

  std::string str() const;
};

/// Brings an arbitrary generator word into canonical form, purely
/// combinatorially: each adjacent transposition of distinct generators
/// contributes a sign, each annihilated equal-index pair contributes the
/// metric sign. Never multiplies matrices.
OrderedProduct normal_order(int dim, const std::vector<int>& seq);

inline OrderedProduct normal_order(const GammaSet& s,
                                   const std::vector<int>& seq) {
  return normal_order(s.dim, seq);
}

/// Canonical form of the concatenation a then b.
OrderedProduct combine(int dim, const OrderedProduct& a,
                       const OrderedProduct& b);

/// i^phase times the actual matrix product of the listed generators.
ExactMatrix materialize(const GammaSet& s, const OrderedProduct& p);

}  // namespace cliffdesc
