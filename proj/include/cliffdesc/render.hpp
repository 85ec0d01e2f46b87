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

#include <array>
#include <optional>
#include <string>

#include "cliffdesc/adapted.hpp"
#include "cliffdesc/gamma_set.hpp"

namespace cliffdesc {

/// Cell colors for the five-value entry alphabet, in the order
/// {0, +1, -1, +i, -i}.
struct RenderOptions {
  int cell_size = 12;
  std::array<std::string, 5> palette = {"#ffffff", "#000000", "#e03131",
                                        "#1c7ed6", "#ffd43b"};
};

enum class RenderFormat { kText, kSvg };

/// Character grid: one glyph per entry from {., +, -, i, j} standing for
/// {0, +1, -1, +i, -i}. The generator grids sit side by side inside an
/// ASCII box; for even dimension the chiral grid follows outside the box.
/// Throws RenderError on entries outside the alphabet.
std::string render_text(const GammaSet& s);

/// SVG 1.1 document with one colored square per entry, generator grids
/// boxed together and the chiral grid outside. Same alphabet restriction.
std::string render_svg(const GammaSet& s, const RenderOptions& opts = {});

std::string render_grid(const AdaptedSet& s, RenderFormat format,
                        const RenderOptions& opts = {});

/// Inverse of render_text, for round-tripping.
struct ParsedGrid {
  GammaSet set;
  std::optional<ExactMatrix> chiral;
};

ParsedGrid parse_text_grid(const std::string& text);

}  // namespace cliffdesc
