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

#include "cliffdesc/serialize.hpp"

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cliffdesc/clifford.hpp"
#include "cliffdesc/errors.hpp"

namespace cliffdesc {

namespace {

constexpr const char* kSchemaVersion = "1";

nlohmann::json exact_matrix_triples(const ExactMatrix& m) {
  nlohmann::json triples = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const ExactScalar& e = m(i, j);
      if (e.is_zero()) continue;
      const auto q = e.quarter_phase();
      if (!q.has_value()) {
        throw StructureError(
            "to_document: entry " + e.str() +
            " is not a fourth root of unity; use the float encoding");
      }
      triples.push_back({i, j, *q});
    }
  }
  return triples;
}

nlohmann::json float_matrix_grid(const ExactMatrix& m) {
  nlohmann::json grid = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const auto c = m(i, j).to_complex();
      row.push_back({c.real(), c.imag()});
    }
    grid.push_back(std::move(row));
  }
  return grid;
}

}  // namespace

std::string encoding_name(Encoding e) {
  return e == Encoding::kExactQuarterPhase ? "exact-quarter-phase"
                                           : "complex-float";
}

nlohmann::json to_document(const GammaSet& s, Encoding encoding,
                           const std::string& construction) {
  require_well_formed(s);
  nlohmann::json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["dim"] = s.dim;
  doc["order"] = s.order();
  doc["encoding"] = encoding_name(encoding);
  nlohmann::json matrices = nlohmann::json::array();
  for (const ExactMatrix& m : s.matrices) {
    matrices.push_back(encoding == Encoding::kExactQuarterPhase
                           ? exact_matrix_triples(m)
                           : float_matrix_grid(m));
  }
  doc["matrices"] = std::move(matrices);
  doc["metadata"] = {{"label", s.label}, {"construction", construction}};
  return doc;
}

ParsedDocument from_document(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("document: not a JSON object");
  for (const char* key :
       {"schema_version", "dim", "order", "encoding", "matrices"}) {
    if (!doc.contains(key)) {
      throw ParseError(std::string("document: missing field '") + key + "'");
    }
  }
  if (doc["schema_version"] != kSchemaVersion) {
    throw ParseError("document: unsupported schema_version");
  }
  ParsedDocument out;
  if (!doc["dim"].is_number_integer()) {
    throw ParseError("document: dim is not an integer");
  }
  out.dim = doc["dim"].get<int>();
  if (out.dim < 2) throw ParseError("document: dim must be at least 2");
  const int order = gamma_order(out.dim);
  if (!doc["order"].is_number_integer() || doc["order"].get<int>() != order) {
    throw ParseError("document: order does not equal 2^floor(dim/2)");
  }
  const std::string enc = doc["encoding"].get<std::string>();
  if (enc == "exact-quarter-phase") {
    out.encoding = Encoding::kExactQuarterPhase;
  } else if (enc == "complex-float") {
    out.encoding = Encoding::kComplexFloat;
  } else {
    throw ParseError("document: unknown encoding '" + enc + "'");
  }
  if (doc.contains("metadata")) {
    const auto& md = doc["metadata"];
    if (md.contains("label")) out.label = md["label"].get<std::string>();
    if (md.contains("construction")) {
      out.construction = md["construction"].get<std::string>();
    }
  }
  const auto& matrices = doc["matrices"];
  if (!matrices.is_array() ||
      static_cast<int>(matrices.size()) != out.dim) {
    throw ParseError("document: expected " + std::to_string(out.dim) +
                     " matrices");
  }

  if (out.encoding == Encoding::kExactQuarterPhase) {
    GammaSet s{out.dim, {}, out.label};
    for (const auto& triples : matrices) {
      if (!triples.is_array()) {
        throw ParseError("document: matrix is not a triple list");
      }
      ExactMatrix m = exact_zero(order);
      for (const auto& t : triples) {
        if (!t.is_array() || t.size() != 3) {
          throw ParseError("document: malformed (row, col, phase) triple");
        }
        const int r = t[0].get<int>();
        const int c = t[1].get<int>();
        const int q = t[2].get<int>();
        if (r < 0 || r >= order || c < 0 || c >= order || q < 0 || q > 3) {
          throw ParseError("document: triple out of range");
        }
        if (!m(r, c).is_zero()) {
          throw ParseError("document: duplicate entry in triple list");
        }
        m(r, c) = ExactScalar::i_power(q);
      }
      s.matrices.push_back(std::move(m));
    }
    out.exact = std::move(s);
  } else {
    for (const auto& grid : matrices) {
      if (!grid.is_array() || static_cast<int>(grid.size()) != order) {
        throw ParseError("document: float grid has wrong row count");
      }
      Eigen::MatrixXcd m(order, order);
      for (int i = 0; i < order; ++i) {
        const auto& row = grid[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != order) {
          throw ParseError("document: float grid has wrong column count");
        }
        for (int j = 0; j < order; ++j) {
          const auto& pair = row[static_cast<std::size_t>(j)];
          if (!pair.is_array() || pair.size() != 2) {
            throw ParseError("document: float entry is not an [re, im] pair");
          }
          m(i, j) = {pair[0].get<double>(), pair[1].get<double>()};
        }
      }
      out.floating.push_back(std::move(m));
    }
  }
  return out;
}

nlohmann::json tree_to_json(const DescentNode& node) {
  nlohmann::json j;
  j["dim"] = node.set.dim;
  j["order"] = node.set.order();
  j["branch"] = branch_name(node.branch);
  j["label"] = node.set.label;
  if (node.set.dim % 2 == 1) {
    j["pseudoscalar_class"] = pseudoscalar_class(node.set);
  }
  nlohmann::json children = nlohmann::json::array();
  for (const auto& child : node.children) {
    children.push_back(tree_to_json(*child));
  }
  j["children"] = std::move(children);
  return j;
}

namespace {

void tree_text_walk(const DescentNode& node, int depth, std::ostream& os) {
  os << std::string(static_cast<std::size_t>(2 * depth), ' ') << "["
     << branch_name(node.branch) << "] d=" << node.set.dim
     << " order=" << node.set.order();
  if (node.set.dim % 2 == 1) {
    os << " class=" << (pseudoscalar_class(node.set) > 0 ? "+1" : "-1");
  }
  if (!node.set.label.empty()) os << " label=" << node.set.label;
  os << "\n";
  for (const auto& child : node.children) {
    tree_text_walk(*child, depth + 1, os);
  }
}

}  // namespace

std::string tree_to_text(const DescentNode& node) {
  std::ostringstream os;
  tree_text_walk(node, 0, os);
  return os.str();
}

}  // namespace cliffdesc
