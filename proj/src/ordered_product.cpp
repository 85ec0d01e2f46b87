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

#include "cliffdesc/ordered_product.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "cliffdesc/errors.hpp"

namespace cliffdesc {

std::string OrderedProduct::str() const {
  std::ostringstream os;
  switch (((phase % 4) + 4) % 4) {
    case 0: break;
    case 1: os << "i*"; break;
    case 2: os << "-"; break;
    default: os << "-i*"; break;
  }
  if (indices.empty()) {
    os << "1";
  } else {
    os << "g^{";
    for (std::size_t k = 0; k < indices.size(); ++k) {
      if (k) os << " ";
      os << indices[k];
    }
    os << "}";
  }
  return os.str();
}

OrderedProduct normal_order(int dim, const std::vector<int>& seq) {
  std::vector<int> acc;  // strictly increasing throughout
  int phase = 0;
  acc.reserve(seq.size());
  for (int x : seq) {
    if (x < 0 || x >= dim) {
      throw IndexError("normal_order: index " + std::to_string(x) +
                       " outside [0, " + std::to_string(dim) + ")");
    }
    auto it = std::lower_bound(acc.begin(), acc.end(), x);
    // Carry x leftward past every strictly larger generator; each adjacent
    // transposition of distinct generators flips the sign.
    std::size_t larger = static_cast<std::size_t>(acc.end() - it);
    if (it != acc.end() && *it == x) {
      larger -= 1;
      phase += 2 * static_cast<int>(larger);
      // Equal neighbors annihilate into the metric sign: +1 timelike,
      // -1 spacelike.
      if (x != 0) phase += 2;
      acc.erase(it);
    } else {
      phase += 2 * static_cast<int>(larger);
      acc.insert(it, x);
    }
  }
  return {std::move(acc), ((phase % 4) + 4) % 4};
}

OrderedProduct combine(int dim, const OrderedProduct& a,
                       const OrderedProduct& b) {
  std::vector<int> seq = a.indices;
  seq.insert(seq.end(), b.indices.begin(), b.indices.end());
  OrderedProduct r = normal_order(dim, seq);
  r.phase = (r.phase + a.phase + b.phase) % 4;
  return r;
}

ExactMatrix materialize(const GammaSet& s, const OrderedProduct& p) {
  require_well_formed(s);
  ExactMatrix out =
      ExactScalar::i_power(p.phase) * exact_identity(s.order());
  for (int idx : p.indices) {
    if (idx < 0 || idx >= s.dim) {
      throw IndexError("materialize: index " + std::to_string(idx) +
                       " outside [0, " + std::to_string(s.dim) + ")");
    }
    out = out * s.matrices[idx];
  }
  return out;
}

}  // namespace cliffdesc
