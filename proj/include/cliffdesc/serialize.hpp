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

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cliffdesc/descent.hpp"
#include "cliffdesc/gamma_set.hpp"

namespace cliffdesc {

/// Wire encodings, schema version "1". The exact encoding stores each
/// matrix as sorted (row, col, phase) triples for the nonzero entries
/// valued i^phase; it is admissible only when every entry is in
/// {0, +/-1, +/-i} and round-trips losslessly. The float encoding stores
/// dense [re, im] grids.
enum class Encoding { kExactQuarterPhase, kComplexFloat };

std::string encoding_name(Encoding e);

nlohmann::json to_document(const GammaSet& s, Encoding encoding,
                           const std::string& construction = "");

/// Either side of the wire format after validation: exact documents parse
/// into a GammaSet, float documents into dense complex matrices.
struct ParsedDocument {
  int dim = 0;
  Encoding encoding = Encoding::kExactQuarterPhase;
  std::string label;
  std::string construction;
  std::optional<GammaSet> exact;
  std::vector<Eigen::MatrixXcd> floating;
};

/// Throws ParseError on any schema violation.
ParsedDocument from_document(const nlohmann::json& doc);

/// Descent tree as nested JSON: dim, branch, label, pseudoscalar class at
/// odd nodes, children.
nlohmann::json tree_to_json(const DescentNode& node);

/// Indented plain-text view of the same tree.
std::string tree_to_text(const DescentNode& node);

}  // namespace cliffdesc
