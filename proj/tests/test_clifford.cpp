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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "cliffdesc/adapted.hpp"
#include "cliffdesc/clifford.hpp"
#include "cliffdesc/errors.hpp"
#include "cliffdesc/exact_matrix.hpp"
#include "cliffdesc/gamma_set.hpp"
#include "cliffdesc/matrix_group.hpp"
#include "cliffdesc/ordered_product.hpp"

namespace {

using namespace cliffdesc;

// Left-to-right product of the selected generators, no reordering.
ExactMatrix raw_product(const GammaSet& s, const std::vector<int>& seq) {
  ExactMatrix out = exact_identity(s.order());
  for (int mu : seq) out = mat_mul(out, s.matrices[static_cast<std::size_t>(mu)]);
  return out;
}

GammaSet conjugated_set(const GammaSet& s, const ExactMatrix& u) {
  GammaSet out{s.dim, {}, s.label + "-conjugated"};
  const ExactMatrix ui = adjoint(u);
  for (const ExactMatrix& g : s.matrices) {
    out.matrices.push_back(mat_mul(mat_mul(u, g), ui));
  }
  return out;
}

ExactMatrix random_monomial(std::mt19937_64& rng, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_int_distribution<int> phase(0, 3);
  ExactMatrix m = exact_zero(n);
  for (int i = 0; i < n; ++i) {
    m(i, perm[static_cast<std::size_t>(i)]) = ExactScalar::i_power(phase(rng));
  }
  return m;
}

}  // namespace

TEST_CASE("normal ordering reproduces the raw matrix product") {
  std::mt19937_64 rng(31);
  for (int dim : {3, 4, 5}) {
    const GammaSet s = adapted(dim).base;
    std::uniform_int_distribution<int> idx(0, dim - 1);
    std::uniform_int_distribution<int> len(0, 7);
    for (int t = 0; t < 200; ++t) {
      std::vector<int> seq(static_cast<std::size_t>(len(rng)));
      for (int& v : seq) v = idx(rng);
      const OrderedProduct word = normal_order(s, seq);
      CHECK(exact_equal(materialize(s, word), raw_product(s, seq)));
      CHECK(std::is_sorted(word.indices.begin(), word.indices.end()));
      CHECK(std::adjacent_find(word.indices.begin(), word.indices.end()) ==
            word.indices.end());
    }
  }
}

TEST_CASE("normal ordering, pinned small cases") {
  OrderedProduct w = normal_order(4, {});
  CHECK(w.indices.empty());
  CHECK(w.phase == 0);

  // g0 g0 = +1, g1 g1 = -1.
  w = normal_order(4, {0, 0});
  CHECK(w.indices.empty());
  CHECK(w.phase == 0);
  w = normal_order(4, {1, 1});
  CHECK(w.indices.empty());
  CHECK(w.phase == 2);

  // One transposition costs a sign.
  w = normal_order(4, {1, 0});
  CHECK(w.indices == std::vector<int>{0, 1});
  CHECK(w.phase == 2);

  // g2 g0 g2 = -g0 g2 g2 = +g0.
  w = normal_order(4, {2, 0, 2});
  CHECK(w.indices == std::vector<int>{0});
  CHECK(w.phase == 0);

  CHECK_THROWS_AS(normal_order(4, {0, 4}), IndexError);
  CHECK_THROWS_AS(normal_order(4, {-1}), IndexError);
}

TEST_CASE("combine multiplies ordered words") {
  std::mt19937_64 rng(32);
  const GammaSet s = adapted(5).base;
  std::uniform_int_distribution<int> idx(0, 4);
  std::uniform_int_distribution<int> len(0, 5);
  for (int t = 0; t < 200; ++t) {
    std::vector<int> sa(static_cast<std::size_t>(len(rng)));
    std::vector<int> sb(static_cast<std::size_t>(len(rng)));
    for (int& v : sa) v = idx(rng);
    for (int& v : sb) v = idx(rng);
    const OrderedProduct a = normal_order(s, sa);
    const OrderedProduct b = normal_order(s, sb);
    const OrderedProduct ab = combine(s.dim, a, b);
    CHECK(exact_equal(materialize(s, ab),
                      mat_mul(materialize(s, a), materialize(s, b))));
  }
}

TEST_CASE("chiral matrix of the canonical sets is the exchange matrix") {
  CHECK(exact_equal(chiral(adapted(2).base), pauli1()));
  CHECK(exact_equal(chiral(adapted(4).base), exchange_matrix(4)));
  CHECK(exact_equal(chiral(adapted(6).base), exchange_matrix(8)));
  CHECK(exact_equal(chiral(adapted(8).base), exchange_matrix(16)));
}

TEST_CASE("chiral word and kappa word shapes") {
  for (int dim : {2, 4, 6, 8, 10}) {
    const OrderedProduct cw = chiral_word(dim);
    REQUIRE(static_cast<int>(cw.indices.size()) == dim);
    for (int mu = 0; mu < dim; ++mu) {
      CHECK(cw.indices[static_cast<std::size_t>(mu)] == mu);
    }
    CHECK(cw.phase == (dim / 2 - 1) % 4);

    const OrderedProduct kw = kappa_word(dim);
    REQUIRE(static_cast<int>(kw.indices.size()) == dim - 1);
    for (int mu = 0; mu + 1 < dim; ++mu) {
      CHECK(kw.indices[static_cast<std::size_t>(mu)] == mu);
    }
  }
}

TEST_CASE("chiral matrix properties and similarity covariance") {
  std::mt19937_64 rng(33);
  for (int dim : {2, 4, 6}) {
    const GammaSet s = adapted(dim).base;
    const ExactMatrix ch = chiral(s);
    const ExactMatrix id = exact_identity(s.order());
    CHECK(exact_equal(mat_mul(ch, ch), id));
    CHECK(exact_equal(adjoint(ch), ch));
    CHECK(trace(ch).is_zero());
    for (const ExactMatrix& g : s.matrices) CHECK(anticommute(ch, g));

    const ExactMatrix u = random_monomial(rng, s.order());
    const GammaSet t = conjugated_set(s, u);
    CHECK(verify_clifford(t).pass);
    CHECK(exact_equal(chiral(t), mat_mul(mat_mul(u, ch), adjoint(u))));
  }
}

TEST_CASE("pseudoscalar class distinguishes an odd set from its conjugate") {
  const AdaptedSet a3 = adapted(3);
  CHECK(pseudoscalar_class(a3.base) == -1);
  CHECK(pseudoscalar_class(conjugate_odd(a3).base) == 1);

  const AdaptedSet a5 = adapted(5);
  CHECK(pseudoscalar_class(a5.base) == 1);
  CHECK(pseudoscalar_class(conjugate_odd(a5).base) == -1);

  // Direct 2x2 reference at d=3: the ordered product of all three
  // generators must be (class) * i * identity.
  const ExactMatrix prod = raw_product(a3.base, {0, 1, 2});
  CHECK(exact_equal(prod,
                    ExactMatrix(ExactScalar(0, -1) *
                                exact_identity(a3.base.order()))));
}

TEST_CASE("pseudoscalar class is a similarity invariant") {
  std::mt19937_64 rng(34);
  for (int dim : {3, 5, 7}) {
    const GammaSet s = adapted(dim).base;
    const int cls = pseudoscalar_class(s);
    const ExactMatrix u = random_monomial(rng, s.order());
    CHECK(pseudoscalar_class(conjugated_set(s, u)) == cls);
  }
}

TEST_CASE("pseudoscalar class rejects even sets") {
  CHECK_THROWS_AS(pseudoscalar_class(adapted(4).base), ParityError);
}

TEST_CASE("kappa is the block sign matrix of the canonical sets") {
  ExactMatrix expected4(4, 4);
  expected4 << 1, 0, 0, 0,
      0, 1, 0, 0,
      0, 0, -1, 0,
      0, 0, 0, -1;
  CHECK(exact_equal(kappa(adapted(4).base), expected4));
  for (int dim : {4, 6, 8, 10}) {
    const GammaSet s = adapted(dim).base;
    CHECK(exact_equal(kappa(s),
                      kron(pauli3(), exact_identity(s.order() / 2))));
  }
}

TEST_CASE("kappa algebra") {
  for (int dim : {4, 6, 8}) {
    const GammaSet s = adapted(dim).base;
    const ExactMatrix k = kappa(s);
    const ExactMatrix id = exact_identity(s.order());
    CHECK(exact_equal(mat_mul(k, k), id));
    CHECK(exact_equal(adjoint(k), k));
    CHECK(trace(k).is_zero());
    for (int mu = 0; mu + 1 < dim; ++mu) {
      CHECK(commute(k, s.matrices[static_cast<std::size_t>(mu)]));
    }
    CHECK(anticommute(k, s.matrices.back()));
    // kappa = g^{d-1} chiral, equivalently chiral = -g^{d-1} kappa.
    CHECK(exact_equal(mat_mul(s.matrices.back(), chiral(s)), k));
    CHECK(exact_equal(
        ExactMatrix(-mat_mul(s.matrices.back(), k)), chiral(s)));
  }
}

TEST_CASE("kappa projectors decompose the identity") {
  for (int dim : {4, 6}) {
    const GammaSet s = adapted(dim).base;
    const auto [plus, minus] = kappa_projectors(s);
    const ExactMatrix id = exact_identity(s.order());
    const ExactMatrix k = kappa(s);
    CHECK(exact_equal(ExactMatrix(plus + minus), id));
    CHECK(exact_equal(mat_mul(plus, plus), plus));
    CHECK(exact_equal(mat_mul(minus, minus), minus));
    CHECK(exact_equal(mat_mul(plus, minus), exact_zero(s.order())));
    CHECK(exact_equal(mat_mul(k, plus), plus));
    CHECK(exact_equal(mat_mul(k, minus), ExactMatrix(-minus)));
  }
}

TEST_CASE("commutant of the first d-1 generators is {1, kappa}") {
  for (int dim : {4, 6, 8}) {
    const GammaSet s = adapted(dim).base;
    const auto basis = commutant_basis(s, dim - 1);
    REQUIRE(basis.size() == 2);
    CHECK(basis[0].indices.empty());
    CHECK(exact_equal(materialize(s, basis[0]), exact_identity(s.order())));
    CHECK(exact_equal(materialize(s, basis[1]), kappa(s)));

    const auto full = commutant_basis(s, dim);
    REQUIRE(full.size() == 1);
    CHECK(full[0].indices.empty());
  }
  CHECK_THROWS_AS(commutant_basis(adapted(3).base, 2), ParityError);
}

TEST_CASE("commutant scan agrees with brute-force matrix commutation") {
  const GammaSet s = adapted(4).base;
  for (int preserved : {3, 4}) {
    std::vector<std::vector<int>> commuting;
    for (int mask = 0; mask < 16; ++mask) {
      std::vector<int> word;
      for (int mu = 0; mu < 4; ++mu) {
        if (mask & (1 << mu)) word.push_back(mu);
      }
      const ExactMatrix m = raw_product(s, word);
      bool all = true;
      for (int mu = 0; mu < preserved; ++mu) {
        all = all && commute(m, s.matrices[static_cast<std::size_t>(mu)]);
      }
      if (all) commuting.push_back(word);
    }
    const auto basis = commutant_basis(s, preserved);
    REQUIRE(basis.size() == commuting.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      CHECK(basis[k].indices == commuting[k]);
    }
  }
}

TEST_CASE("boost and rotation generators") {
  const GammaSet s2 = adapted(2).base;
  const auto gens2 = lorentz_generators(s2);
  REQUIRE(gens2.size() == 1);
  CHECK(gens2[0].mu == 0);
  CHECK(gens2[0].nu == 1);
  ExactMatrix expected(2, 2);
  expected << ExactScalar(0), ExactScalar(0, 1, 1), ExactScalar(0, 1, 1),
      ExactScalar(0);
  CHECK(exact_equal(gens2[0].matrix, expected));

  const GammaSet s4 = adapted(4).base;
  const auto gens4 = lorentz_generators(s4);
  REQUIRE(gens4.size() == 6);
  const ExactMatrix k = kappa(s4);
  for (const auto& g : gens4) {
    // Generators avoiding the last index commute with kappa, the others
    // anticommute; this is what makes the half-spin blocks invariant.
    if (g.nu < 3) {
      CHECK(commute(g.matrix, k));
    } else {
      CHECK(anticommute(g.matrix, k));
    }
  }

  // [S01, S12] = -i S02.
  const ExactMatrix s01 = gens4[0].matrix;
  const ExactMatrix s02 = gens4[1].matrix;
  const ExactMatrix s12 = gens4[3].matrix;
  const ExactMatrix comm =
      ExactMatrix(mat_mul(s01, s12) - mat_mul(s12, s01));
  CHECK(exact_equal(comm, ExactMatrix(ExactScalar(0, -1) * s02)));
}

TEST_CASE("closure of the two-dimensional generators is the known 8-element group") {
  const GammaSet s = adapted(2).base;
  const MatrixGroup g = group_closure(s.matrices);
  REQUIRE(g.size() == 8);
  CHECK(exact_equal(g.elements[0], exact_identity(2)));
  for (std::size_t k = 0; k < g.generator_positions.size(); ++k) {
    CHECK(exact_equal(g.elements[g.generator_positions[k]], s.matrices[k]));
  }
  const std::vector<ExactMatrix> expected = {
      exact_identity(2),
      ExactMatrix(-exact_identity(2)),
      pauli3(),
      ExactMatrix(-pauli3()),
      ExactMatrix(ExactScalar::unit_im() * pauli2()),
      ExactMatrix(ExactScalar(0, -1) * pauli2()),
      pauli1(),
      ExactMatrix(-pauli1()),
  };
  for (const ExactMatrix& want : expected) {
    bool found = false;
    for (const ExactMatrix& have : g.elements) {
      found = found || exact_equal(want, have);
    }
    CHECK(found);
  }
}

TEST_CASE("closure sizes grow as 2^(d+1)") {
  CHECK(group_closure(adapted(2).base.matrices).size() == 8);
  CHECK(group_closure(adapted(4).base.matrices).size() == 32);
  CHECK(group_closure(adapted(6).base.matrices).size() == 128);
}

TEST_CASE("closure respects the element bound") {
  CHECK_THROWS_AS(group_closure(adapted(4).base.matrices, 16),
                  ClosureBoundError);
}

TEST_CASE("block characters of paired odd sets are orthogonal") {
  const AdaptedSet a3 = adapted(3);
  const AdaptedSet c3 = conjugate_odd(a3);
  const auto sums = direct_sums(a3.base.matrices, c3.base.matrices);
  const MatrixGroup g = group_closure(sums);
  CHECK(g.size() == 16);
  const BlockCharacters chi = block_characters(g, 2);
  CHECK(character_inner(chi.upper, chi.lower) == ExactScalar(0));
  CHECK(character_inner(chi.upper, chi.upper) ==
        ExactScalar(static_cast<std::int64_t>(g.size())));
  CHECK(character_inner(chi.lower, chi.lower) ==
        ExactScalar(static_cast<std::int64_t>(g.size())));
  CHECK(character_orthogonality(a3.base.matrices, c3.base.matrices) ==
        ExactScalar(0));
}

TEST_CASE("odd pair classification") {
  const AdaptedSet a5 = adapted(5);
  const AdaptedSet c5 = conjugate_odd(a5);
  CHECK(classify_odd_pair(a5.base, c5.base) == Equivalence::kInequivalent);
  CHECK(classify_odd_pair(a5.base, a5.base) == Equivalence::kEquivalent);

  std::mt19937_64 rng(35);
  const ExactMatrix u = random_monomial(rng, a5.base.order());
  CHECK(classify_odd_pair(conjugated_set(a5.base, u), c5.base) ==
        Equivalence::kInequivalent);
  CHECK(classify_odd_pair(conjugated_set(a5.base, u), a5.base) ==
        Equivalence::kEquivalent);

  CHECK_THROWS_AS(classify_odd_pair(adapted(4).base, adapted(4).base),
                  UsageError);
  CHECK_THROWS_AS(classify_odd_pair(a5.base, adapted(3).base), UsageError);
}
