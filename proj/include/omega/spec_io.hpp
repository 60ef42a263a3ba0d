// Copyright 2026 The Authors.
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

// Matroid spec files. A spec is a JSON object with a "kind" and, for the
// leaf kinds, the ground-set size "n". Subsets are sorted lists of 0-based
// elements.
//
//   {"kind": "bases", "n": 3, "bases": [[0,1],[0,2],[1,2]]}
//   {"kind": "uniform", "n": 5, "r": 2}
//   {"kind": "schubert_lower", "n": 10, "chain": [[],[0,1],[0,...,6],[0,...,9]], "a": [0,1,3,4]}
//   {"kind": "schubert_upper", ...same fields...}
//   {"kind": "schubert_order", "n": 10, "A": [0,2,3,7], "order": [0,1,...]}   order optional
//   {"kind": "dual", "of": {...}}
//   {"kind": "delete" | "contract", "of": {...}, "set": [...]}
//   {"kind": "direct_sum", "parts": [{...}, {...}, ...]}
//
// Any spec may carry an "id" string. A file holds one spec or an array.
// Derived kinds may also give "n", which is then checked.

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "omega/matroid.hpp"
#include "omega/polytope.hpp"

namespace omega {

using Json = nlohmann::json;

struct MatroidSpec {
  std::string id;
  Matroid matroid;
};

/// Errors: kParseError for malformed specs; matroid errors pass through.
Matroid parse_matroid(const Json& spec);

/// One object or an array of objects. Missing ids become "<prefix>#<index>".
std::vector<MatroidSpec> parse_matroid_specs(const Json& doc, const std::string& prefix);

/// Reads and parses a spec file; kParseError on unreadable or invalid JSON.
std::vector<MatroidSpec> load_matroid_specs(const std::filesystem::path& path);

Json parse_json_text(const std::string& text, const std::string& origin);

Json subset_to_json(SubsetMask s);
SubsetMask subset_from_json(const Json& j, int n);

/// {"kind": "bases", "n": ..., "bases": [...]} plus "id" when nonempty.
Json bases_spec(const Matroid& m, const std::string& id = "");

/// [[num, den], ...] per point. Plain integers are accepted as coordinates.
std::vector<RationalPoint> parse_points(const Json& doc);
std::vector<RationalPoint> load_points(const std::filesystem::path& path);
Json point_to_json(const RationalPoint& z);

}  // namespace omega
