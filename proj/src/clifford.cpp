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

#include "cliffdesc/clifford.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "cliffdesc/errors.hpp"

namespace cliffdesc {

namespace {

void require_even(int dim, const char* who) {
  if (dim % 2 != 0) {
    throw ParityError(std::string(who) + ": dimension " + std::to_string(dim) +
                      " is not even");
  }
}

void require_odd(int dim, const char* who) {
  if (dim % 2 == 0) {
    throw ParityError(std::string(who) + ": dimension " + std::to_string(dim) +
                      " is not odd");
  }
}

}  // namespace

OrderedProduct chiral_word(int dim) {
  require_even(dim, "chiral_word");
  OrderedProduct p;
  p.indices.resize(dim);
  std::iota(p.indices.begin(), p.indices.end(), 0);
  p.phase = ((dim / 2 - 1) % 4 + 4) % 4;
  return p;
}

OrderedProduct kappa_word(int dim) {
  require_even(dim, "kappa_word");
  OrderedProduct last{{dim - 1}, 0};
  return combine(dim, last, chiral_word(dim));
}

ExactMatrix chiral(const GammaSet& s) {
  require_even(s.dim, "chiral");
  return materialize(s, chiral_word(s.dim));
}

int pseudoscalar_class(const GammaSet& s) {
  require_odd(s.dim, "pseudoscalar_class");
  OrderedProduct full;
  full.indices.resize(s.dim);
  std::iota(full.indices.begin(), full.indices.end(), 0);
  const ExactMatrix p = materialize(s, full);
  const int l = (s.dim - 1) / 2;
  const ExactMatrix unit =
      ExactScalar::i_power(l) * exact_identity(s.order());
  if (exact_equal(p, unit)) return 1;
  if (exact_equal(p, ExactMatrix(-unit))) return -1;
  throw StructureError(
      "pseudoscalar_class: full generator product is not +/- i^l times the "
      "identity; the input is not a valid odd gamma set");
}

ExactMatrix kappa(const GammaSet& s) {
  require_even(s.dim, "kappa");
  return materialize(s, kappa_word(s.dim));
}

std::pair<ExactMatrix, ExactMatrix> kappa_projectors(const GammaSet& s) {
  const ExactMatrix k = kappa(s);
  const ExactMatrix id = exact_identity(s.order());
  return {ExactScalar::half() * (id + k), ExactScalar::half() * (id - k)};
}

std::vector<OrderedProduct> commutant_basis(const GammaSet& s, int preserved) {
  require_well_formed(s);
  require_even(s.dim, "commutant_basis");
  if (preserved < 0 || preserved > s.dim) {
    throw IndexError("commutant_basis: preserved count " +
                     std::to_string(preserved) + " outside [0, " +
                     std::to_string(s.dim) + "]");
  }
  const OrderedProduct kappa_w = kappa_word(s.dim);
  std::vector<OrderedProduct> out;
  for (unsigned mask = 0; mask < (1u << s.dim); ++mask) {
    OrderedProduct word;
    for (int mu = 0; mu < s.dim; ++mu) {
      if (mask & (1u << mu)) word.indices.push_back(mu);
    }
    bool commutes_with_all = true;
    for (int mu = 0; mu < preserved && commutes_with_all; ++mu) {
      const OrderedProduct gen{{mu}, 0};
      commutes_with_all =
          combine(s.dim, word, gen) == combine(s.dim, gen, word);
    }
    if (!commutes_with_all) continue;
    // Surviving words are reported with their conventional phases so that
    // materialize() yields the named elements (1 and kappa).
    if (word.indices == kappa_w.indices) word.phase = kappa_w.phase;
    out.push_back(std::move(word));
  }
  std::sort(out.begin(), out.end(),
            [](const OrderedProduct& a, const OrderedProduct& b) {
              if (a.indices.size() != b.indices.size()) {
                return a.indices.size() < b.indices.size();
              }
              return a.indices < b.indices;
            });
  return out;
}

std::vector<LorentzGenerator> lorentz_generators(const GammaSet& s) {
  require_well_formed(s);
  const ExactScalar half_i(0, 1, 1);
  std::vector<LorentzGenerator> out;
  out.reserve(static_cast<std::size_t>(s.dim) * (s.dim - 1) / 2);
  for (int mu = 0; mu < s.dim; ++mu) {
    for (int nu = mu + 1; nu < s.dim; ++nu) {
      out.push_back(
          {mu, nu, half_i * (s.matrices[mu] * s.matrices[nu])});
    }
  }
  return out;
}

Equivalence classify_odd_pair(const GammaSet& a, const GammaSet& b) {
  if (a.dim != b.dim) {
    throw UsageError("classify_odd_pair: dimensions differ");
  }
  if (a.dim % 2 == 0) {
    throw UsageError("classify_odd_pair: inputs must be odd-dimensional");
  }
  return pseudoscalar_class(a) == pseudoscalar_class(b)
             ? Equivalence::kEquivalent
             : Equivalence::kInequivalent;
}

}  // namespace cliffdesc
