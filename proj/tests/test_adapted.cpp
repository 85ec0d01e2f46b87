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
#include <string>
#include <vector>

#include "cliffdesc/adapted.hpp"
#include "cliffdesc/clifford.hpp"
#include "cliffdesc/errors.hpp"
#include "cliffdesc/exact_matrix.hpp"
#include "cliffdesc/render.hpp"

namespace {

using namespace cliffdesc;

std::size_t count_occurrences(const std::string& text,
                              const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("two-dimensional seed") {
  const AdaptedSet s = adapted_base();
  REQUIRE(s.base.dim == 2);
  REQUIRE(s.base.order() == 2);
  CHECK(exact_equal(s.base.matrices[0], pauli3()));
  CHECK(exact_equal(s.base.matrices[1],
                    ExactMatrix(ExactScalar::unit_im() * pauli2())));
  CHECK(s.base.label == "adapted-2");
  CHECK(exact_equal(adapted(2).base.matrices[0], s.base.matrices[0]));
}

TEST_CASE("odd completion appends -i times the chiral matrix") {
  const AdaptedSet s3 = adapted(3);
  REQUIRE(s3.base.dim == 3);
  REQUIRE(s3.base.order() == 2);
  CHECK(exact_equal(s3.base.matrices[2],
                    ExactMatrix(ExactScalar(0, -1) * pauli1())));

  for (int even : {2, 4, 6, 8}) {
    const AdaptedSet s = adapted(even);
    const AdaptedSet odd = adapted_fill_odd(s);
    CHECK(odd.base.dim == even + 1);
    CHECK(odd.base.order() == s.base.order());
    CHECK(exact_equal(odd.base.matrices.back(),
                      ExactMatrix(ExactScalar(0, -1) * chiral(s.base))));
    for (int mu = 0; mu < even; ++mu) {
      CHECK(exact_equal(odd.base.matrices[static_cast<std::size_t>(mu)],
                        s.base.matrices[static_cast<std::size_t>(mu)]));
    }
  }
}

TEST_CASE("four-dimensional matrices, pinned") {
  const AdaptedSet s = adapted(4);
  REQUIRE(s.base.order() == 4);
  const ExactMatrix id2 = exact_identity(2);
  CHECK(exact_equal(s.base.matrices[0], kron(id2, pauli3())));
  CHECK(exact_equal(s.base.matrices[1],
                    kron(id2, ExactMatrix(ExactScalar::unit_im() * pauli2()))));
  CHECK(exact_equal(s.base.matrices[2],
                    kron(ExactMatrix(ExactScalar(0, -1) * pauli3()),
                         pauli1())));
  CHECK(exact_equal(s.base.matrices[3],
                    kron(ExactMatrix(ExactScalar::unit_im() * pauli2()),
                         pauli1())));
}

TEST_CASE("five-dimensional completion, pinned") {
  const AdaptedSet s = adapted(5);
  // -i J_4 = -i s1 (x) s1.
  CHECK(exact_equal(s.base.matrices[4],
                    ExactMatrix(ExactScalar(0, -1) *
                                kron(pauli1(), pauli1()))));
}

TEST_CASE("six-dimensional step, pinned") {
  const AdaptedSet s4 = adapted(4);
  const AdaptedSet s6 = adapted(6);
  REQUIRE(s6.base.order() == 8);
  const ExactMatrix id2 = exact_identity(2);
  for (int mu = 0; mu < 4; ++mu) {
    CHECK(exact_equal(s6.base.matrices[static_cast<std::size_t>(mu)],
                      kron(id2, s4.base.matrices[static_cast<std::size_t>(mu)])));
  }
  const ExactMatrix ch4 = chiral(s4.base);
  CHECK(exact_equal(s6.base.matrices[4],
                    kron(ExactMatrix(ExactScalar(0, -1) * pauli3()), ch4)));
  CHECK(exact_equal(s6.base.matrices[5],
                    kron(ExactMatrix(ExactScalar::unit_im() * pauli2()), ch4)));
}

TEST_CASE("recipes reproduce the stored matrices") {
  for (int dim = 2; dim <= 9; ++dim) {
    const AdaptedSet s = adapted(dim);
    CHECK(recipe_consistent(s));
    CHECK(recipe_consistent(conjugate_odd(adapted(dim % 2 ? dim : dim + 1))));
    REQUIRE(s.recipe.size() == s.base.matrices.size());
  }
}

TEST_CASE("all entries stay on the quarter-phase alphabet") {
  for (int dim = 2; dim <= 10; ++dim) {
    const AdaptedSet s = adapted(dim);
    for (const ExactMatrix& g : s.base.matrices) {
      CHECK(entries_quarter_phase(g));
      CHECK(is_monomial(g));
    }
    CHECK(verify_clifford(s.base).pass);
    CHECK(verify_hermiticity(s.base).pass);
    CHECK(verify_traceless(s.base).pass);
  }
}

TEST_CASE("chiral matrices nest by one Kronecker factor per step") {
  for (int even : {2, 4, 6, 8}) {
    const ExactMatrix inner = chiral(adapted(even).base);
    const ExactMatrix outer = chiral(adapted(even + 2).base);
    CHECK(exact_equal(outer, kron(pauli1(), inner)));
  }
}

TEST_CASE("exchange identity holds for the construction, not in general") {
  for (int even : {2, 4, 6, 8, 10}) {
    CHECK(verify_exchange_chiral(adapted(even)).pass);
  }

  // A diagonal phase change is still a valid gamma set but moves the
  // chiral matrix off the exchange form.
  AdaptedSet doctored = adapted(4);
  ExactMatrix u = exact_identity(4);
  u(0, 0) = ExactScalar::unit_im();
  const ExactMatrix ui = adjoint(u);
  for (ExactMatrix& g : doctored.base.matrices) {
    g = mat_mul(mat_mul(u, g), ui);
  }
  CHECK(verify_clifford(doctored.base).pass);
  CHECK(!verify_exchange_chiral(doctored).pass);
}

TEST_CASE("conjugation negates the last matrix and is involutive") {
  for (int dim : {3, 5, 7, 9}) {
    const AdaptedSet s = adapted(dim);
    const AdaptedSet c = conjugate_odd(s);
    CHECK(c.base.label == s.base.label + "-conjugate");
    CHECK(exact_equal(c.base.matrices.back(),
                      ExactMatrix(-s.base.matrices.back())));
    for (std::size_t mu = 0; mu + 1 < s.base.matrices.size(); ++mu) {
      CHECK(exact_equal(c.base.matrices[mu], s.base.matrices[mu]));
    }
    const AdaptedSet cc = conjugate_odd(c);
    CHECK(cc.base.label == s.base.label);
    CHECK(exact_equal(cc.base.matrices.back(), s.base.matrices.back()));
    CHECK(recipe_consistent(c));
  }
  CHECK_THROWS_AS(conjugate_odd(adapted(4)), ParityError);
}

TEST_CASE("dimension bounds") {
  CHECK_THROWS_AS(adapted(1), UsageError);
  CHECK_THROWS_AS(adapted(0), UsageError);
  CHECK_THROWS_AS(adapted(-3), UsageError);
  CHECK_THROWS_AS(adapted(17), UsageError);
  CHECK_THROWS_AS(adapted(5, 4), UsageError);
  CHECK(adapted(12, 12).base.dim == 12);
}

TEST_CASE("text rendering round-trips") {
  for (int dim : {2, 3, 4, 5, 6}) {
    const AdaptedSet s = adapted(dim);
    const std::string text = render_text(s.base);
    const ParsedGrid parsed = parse_text_grid(text);
    REQUIRE(parsed.set.dim == dim);
    REQUIRE(parsed.set.matrices.size() == s.base.matrices.size());
    for (std::size_t mu = 0; mu < s.base.matrices.size(); ++mu) {
      CHECK(exact_equal(parsed.set.matrices[mu], s.base.matrices[mu]));
    }
    if (dim % 2 == 0) {
      REQUIRE(parsed.chiral.has_value());
      CHECK(exact_equal(*parsed.chiral, chiral(s.base)));
    } else {
      CHECK(!parsed.chiral.has_value());
    }
  }
}

TEST_CASE("svg rendering counts cells and honors the palette") {
  const AdaptedSet s = adapted(4);
  RenderOptions opts;
  opts.palette = {"#aaaaaa", "#bbbbbb", "#cccccc", "#dddddd", "#eeeeee"};
  const std::string svg = render_svg(s.base, opts);
  // One rect per entry of each generator grid and of the chiral grid, plus
  // the enclosing box.
  const std::size_t cells = 4 * 16 + 16;
  CHECK(count_occurrences(svg, "<rect") == cells + 1);
  CHECK(count_occurrences(svg, "#aaaaaa") > 0);  // zeros
  CHECK(count_occurrences(svg, "#bbbbbb") > 0);  // +1
  CHECK(count_occurrences(svg, "#cccccc") > 0);  // -1
  CHECK(count_occurrences(svg, "#dddddd") > 0);  // +i
  CHECK(count_occurrences(svg, "#eeeeee") > 0);  // -i
  CHECK(svg.find("<svg") == 0);

  CHECK(render_grid(s, RenderFormat::kText) == render_text(s.base));
  CHECK(render_grid(s, RenderFormat::kSvg, opts) == svg);
}

TEST_CASE("rendering rejects entries outside the alphabet") {
  GammaSet bad = adapted(2).base;
  bad.matrices[0](0, 0) = ExactScalar(2);
  CHECK_THROWS_AS(render_text(bad), RenderError);
  CHECK_THROWS_AS(render_svg(bad), RenderError);
}

TEST_CASE("factor names match their matrices") {
  CHECK(exact_equal(factor_matrix(FactorTag::kIdentity), exact_identity(2)));
  CHECK(exact_equal(factor_matrix(FactorTag::kSigma1), pauli1()));
  CHECK(exact_equal(factor_matrix(FactorTag::kSigma3), pauli3()));
  CHECK(exact_equal(factor_matrix(FactorTag::kISigma2),
                    ExactMatrix(ExactScalar::unit_im() * pauli2())));
  CHECK(exact_equal(factor_matrix(FactorTag::kMinusISigma3),
                    ExactMatrix(ExactScalar(0, -1) * pauli3())));
  CHECK(exact_equal(factor_matrix(FactorTag::kMinusISigma1),
                    ExactMatrix(ExactScalar(0, -1) * pauli1())));
  CHECK(exact_equal(factor_matrix(FactorTag::kPlusISigma1),
                    ExactMatrix(ExactScalar::unit_im() * pauli1())));
  for (FactorTag tag :
       {FactorTag::kIdentity, FactorTag::kSigma1, FactorTag::kSigma3,
        FactorTag::kISigma2, FactorTag::kMinusISigma3,
        FactorTag::kMinusISigma1, FactorTag::kPlusISigma1}) {
    CHECK(!factor_name(tag).empty());
  }
}
