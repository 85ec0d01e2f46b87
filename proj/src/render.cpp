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

#include "cliffdesc/render.hpp"

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "cliffdesc/clifford.hpp"
#include "cliffdesc/errors.hpp"

namespace cliffdesc {

namespace {

// {0, +1, -1, +i, -i} -> {0, 1, 2, 3, 4}
int entry_class(const ExactScalar& e) {
  if (e.is_zero()) return 0;
  const auto q = e.quarter_phase();
  if (!q.has_value()) {
    throw RenderError("render: entry " + e.str() +
                      " outside the alphabet {0, +/-1, +/-i}");
  }
  switch (*q) {
    case 0: return 1;
    case 1: return 3;
    case 2: return 2;
    default: return 4;
  }
}

constexpr char kGlyphs[5] = {'.', '+', '-', 'i', 'j'};

ExactScalar glyph_value(char c) {
  switch (c) {
    case '.': return ExactScalar(0);
    case '+': return ExactScalar(1);
    case '-': return ExactScalar(-1);
    case 'i': return ExactScalar(0, 1);
    case 'j': return ExactScalar(0, -1);
    default:
      throw ParseError(std::string("text grid: unknown glyph '") + c + "'");
  }
}

std::string glyph_row(const ExactMatrix& m, Eigen::Index row) {
  std::string out(static_cast<std::size_t>(m.cols()), '.');
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    out[static_cast<std::size_t>(j)] = kGlyphs[entry_class(m(row, j))];
  }
  return out;
}

}  // namespace

std::string render_text(const GammaSet& s) {
  require_well_formed(s);
  const int n = s.order();
  const bool with_chiral = s.dim % 2 == 0;
  std::vector<ExactMatrix> grids = s.matrices;
  if (with_chiral) grids.push_back(chiral(s));

  std::ostringstream os;
  os << "d=" << s.dim << " order=" << n;
  if (!s.label.empty()) os << " label=" << s.label;
  os << "\n";

  // Column headers, then the generator grids side by side in one box with
  // the chiral grid outside it.
  const int cell_w = n + 2;
  std::string headers;
  for (int mu = 0; mu < s.dim; ++mu) {
    std::string h = "g" + std::to_string(mu);
    h.resize(static_cast<std::size_t>(cell_w), ' ');
    headers += h;
  }
  os << "  " << headers << (with_chiral ? " ch" : "") << "\n";

  const int inner_w = s.dim * n + (s.dim - 1) * 2;
  os << "+" << std::string(static_cast<std::size_t>(inner_w) + 2, '-')
     << "+\n";
  for (int r = 0; r < n; ++r) {
    os << "| ";
    for (int mu = 0; mu < s.dim; ++mu) {
      if (mu) os << "  ";
      os << glyph_row(grids[static_cast<std::size_t>(mu)], r);
    }
    os << " |";
    if (with_chiral) os << "  " << glyph_row(grids.back(), r);
    os << "\n";
  }
  os << "+" << std::string(static_cast<std::size_t>(inner_w) + 2, '-')
     << "+\n";
  return os.str();
}

std::string render_svg(const GammaSet& s, const RenderOptions& opts) {
  require_well_formed(s);
  const int n = s.order();
  const bool with_chiral = s.dim % 2 == 0;
  std::vector<ExactMatrix> grids = s.matrices;
  if (with_chiral) grids.push_back(chiral(s));

  const int cs = opts.cell_size;
  const int pad = cs;
  const int gap = cs;
  const int fs = cs;  // label font size
  const int box_pad = cs / 2 + 1;
  const int grid_w = n * cs;
  const int box_w = 2 * box_pad + s.dim * grid_w + (s.dim - 1) * gap;
  const int gy = pad + fs + box_pad;
  const int box_h = 2 * box_pad + grid_w;
  const int total_w =
      pad + box_w + (with_chiral ? 2 * gap + grid_w : 0) + pad;
  const int total_h = gy + grid_w + box_pad + pad;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << total_w
     << "\" height=\"" << total_h << "\" viewBox=\"0 0 " << total_w << " "
     << total_h << "\">\n";
  os << "<rect x=\"" << pad << "\" y=\"" << (gy - box_pad) << "\" width=\""
     << box_w << "\" height=\"" << box_h
     << "\" fill=\"none\" stroke=\"#343a40\"/>\n";

  auto emit_grid = [&](const ExactMatrix& m, int x0, const std::string& name) {
    os << "<text x=\"" << x0 << "\" y=\"" << (gy - box_pad - 4)
       << "\" font-family=\"monospace\" font-size=\"" << fs << "\">" << name
       << "</text>\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        os << "<rect x=\"" << (x0 + static_cast<int>(j) * cs) << "\" y=\""
           << (gy + static_cast<int>(i) * cs) << "\" width=\"" << cs
           << "\" height=\"" << cs << "\" fill=\""
           << opts.palette[static_cast<std::size_t>(entry_class(m(i, j)))]
           << "\" stroke=\"#ced4da\" stroke-width=\"0.5\"/>\n";
      }
    }
  };

  for (int mu = 0; mu < s.dim; ++mu) {
    const int x0 = pad + box_pad + mu * (grid_w + gap);
    emit_grid(grids[static_cast<std::size_t>(mu)], x0,
              "g" + std::to_string(mu));
  }
  if (with_chiral) {
    emit_grid(grids.back(), pad + box_w + 2 * gap, "ch");
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_grid(const AdaptedSet& s, RenderFormat format,
                        const RenderOptions& opts) {
  return format == RenderFormat::kText ? render_text(s.base)
                                       : render_svg(s.base, opts);
}

ParsedGrid parse_text_grid(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line.rfind("d=", 0) != 0) {
    throw ParseError("text grid: missing 'd=' header line");
  }
  int dim = 0;
  int order = 0;
  std::string label;
  {
    std::istringstream hs(line);
    std::string tok;
    while (hs >> tok) {
      if (tok.rfind("d=", 0) == 0) dim = std::stoi(tok.substr(2));
      if (tok.rfind("order=", 0) == 0) order = std::stoi(tok.substr(6));
      if (tok.rfind("label=", 0) == 0) label = tok.substr(6);
    }
  }
  if (dim < 2 || order != gamma_order(dim)) {
    throw ParseError("text grid: inconsistent dim/order header");
  }
  const bool with_chiral = dim % 2 == 0;
  const std::size_t per_row =
      static_cast<std::size_t>(dim) + (with_chiral ? 1 : 0);

  std::vector<std::vector<std::string>> rows;
  while (std::getline(is, line)) {
    if (line.rfind("| ", 0) != 0) continue;
    std::string stripped;
    for (char c : line) stripped += (c == '|' ? ' ' : c);
    std::istringstream ls(stripped);
    std::vector<std::string> toks;
    std::string tok;
    while (ls >> tok) toks.push_back(tok);
    if (toks.size() != per_row) {
      throw ParseError("text grid: content row has " +
                       std::to_string(toks.size()) + " grids, expected " +
                       std::to_string(per_row));
    }
    for (const std::string& t : toks) {
      if (t.size() != static_cast<std::size_t>(order)) {
        throw ParseError("text grid: row width " + std::to_string(t.size()) +
                         " differs from order " + std::to_string(order));
      }
    }
    rows.push_back(std::move(toks));
  }
  if (rows.size() != static_cast<std::size_t>(order)) {
    throw ParseError("text grid: found " + std::to_string(rows.size()) +
                     " content rows, expected " + std::to_string(order));
  }

  ParsedGrid out;
  out.set.dim = dim;
  out.set.label = label;
  for (std::size_t k = 0; k < per_row; ++k) {
    ExactMatrix m(order, order);
    for (int r = 0; r < order; ++r) {
      for (int c = 0; c < order; ++c) {
        m(r, c) = glyph_value(
            rows[static_cast<std::size_t>(r)][k][static_cast<std::size_t>(c)]);
      }
    }
    if (k < static_cast<std::size_t>(dim)) {
      out.set.matrices.push_back(std::move(m));
    } else {
      out.chiral = std::move(m);
    }
  }
  return out;
}

}  // namespace cliffdesc
