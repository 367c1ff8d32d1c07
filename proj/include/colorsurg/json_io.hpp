// Copyright 2026 The colorsurg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "colorsurg/lattice.hpp"
#include "colorsurg/layout.hpp"

namespace colorsurg {

using Json = nlohmann::ordered_json;

// Patch documents carry every vertex, edge, face, boundary segment and
// logical operator, so patch_from_json(patch_to_json(p)) reproduces p.
Json patch_to_json(const CodePatch &p);
CodePatch patch_from_json(const Json &j);

// Geometry and generator summary of a surgery layout (export only; layouts
// are rebuilt from their configuration).
Json layout_to_json(const SurgeryLayout &lay);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    // Lines starting with '#' before the header, without the marker.
    std::vector<std::string> comments;
    size_t column(const std::string &name) const;  // throws ValidationError
};

CsvTable parse_csv(const std::string &text);
std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &text);

// Shortest round-trip decimal form of a double.
std::string format_double(double v);

}  // namespace colorsurg
