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

#include "omega/spec_io.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "omega/errors.hpp"

namespace omega {
namespace {

[[noreturn]] void parse_fail(const std::string& what) { fail(ErrorCode::kParseError, what); }

const Json& field(const Json& spec, const char* name) {
  if (!spec.is_object() || !spec.contains(name)) {
    parse_fail(std::string("spec is missing field \"") + name + "\"");
  }
  return spec.at(name);
}

int int_field(const Json& spec, const char* name) {
  const Json& v = field(spec, name);
  if (!v.is_number_integer()) parse_fail(std::string("field \"") + name + "\" must be an integer");
  return v.get<int>();
}

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) parse_fail(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (const Json& v : j) {
    if (!v.is_number_integer()) parse_fail(std::string(what) + " must hold integers only");
    out.push_back(v.get<int>());
  }
  return out;
}

int leaf_size(const Json& spec) {
  const int n = int_field(spec, "n");
  if (n < 0) parse_fail("n must be nonnegative");
  if (n > kMaxGroundSet) {
    fail(ErrorCode::kGroundSetTooLarge,
         "n = " + std::to_string(n) + " exceeds " + std::to_string(kMaxGroundSet));
  }
  return n;
}

SetChain chain_field(const Json& spec, int n) {
  const Json& chain = field(spec, "chain");
  if (!chain.is_array()) parse_fail("chain must be an array of subsets");
  std::vector<SubsetMask> sets;
  for (const Json& s : chain) sets.push_back(subset_from_json(s, n));
  return SetChain(std::move(sets), n);
}

Matroid build(const Json& spec) {
  if (!spec.is_object()) parse_fail("matroid spec must be a JSON object");
  const Json& kind_json = field(spec, "kind");
  if (!kind_json.is_string()) parse_fail("kind must be a string");
  const std::string kind = kind_json.get<std::string>();

  if (kind == "bases") {
    const int n = leaf_size(spec);
    const Json& list = field(spec, "bases");
    if (!list.is_array()) parse_fail("bases must be an array of subsets");
    std::vector<SubsetMask> bases;
    for (const Json& b : list) bases.push_back(subset_from_json(b, n));
    return Matroid::from_bases(n, std::move(bases));
  }
  if (kind == "uniform") return uniform(int_field(spec, "r"), leaf_size(spec));
  if (kind == "schubert_lower" || kind == "schubert_upper") {
    const int n = leaf_size(spec);
    const SetChain chain = chain_field(spec, n);
    const auto a = int_list(field(spec, "a"), "a");
    return kind == "schubert_lower" ? schubert_lower(chain, a) : schubert_upper(chain, a);
  }
  if (kind == "schubert_order") {
    const int n = leaf_size(spec);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    if (spec.contains("order")) order = int_list(spec.at("order"), "order");
    return schubert_from_order(n, order, subset_from_json(field(spec, "A"), n));
  }
  if (kind == "dual") return dual(build(field(spec, "of")));
  if (kind == "delete" || kind == "contract") {
    const Matroid base = build(field(spec, "of"));
    const SubsetMask s = subset_from_json(field(spec, "set"), base.size());
    return kind == "delete" ? deletion(base, s) : contraction(base, s);
  }
  if (kind == "direct_sum") {
    const Json& parts = field(spec, "parts");
    if (!parts.is_array() || parts.empty()) parse_fail("parts must be a nonempty array");
    Matroid out = build(parts.front());
    for (std::size_t i = 1; i < parts.size(); ++i) out = direct_sum(out, build(parts[i]));
    return out;
  }
  parse_fail("unknown matroid kind \"" + kind + "\"");
}

Rational coordinate(const Json& c) {
  if (c.is_number_integer()) return Rational(c.get<long long>());
  if (c.is_array() && c.size() == 2 && c[0].is_number_integer() && c[1].is_number_integer()) {
    const long long den = c[1].get<long long>();
    if (den == 0) parse_fail("zero denominator in point coordinate");
    return Rational(c[0].get<long long>(), den);
  }
  parse_fail("point coordinates must be integers or [numerator, denominator] pairs");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_fail("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    parse_fail(origin + ": " + e.what());
  }
}

Matroid parse_matroid(const Json& spec) {
  Matroid m = build(spec);
  if (spec.contains("n") && spec.at("n").is_number_integer() && spec.at("n").get<int>() != m.size()) {
    parse_fail("spec declares n = " + std::to_string(spec.at("n").get<int>()) +
               " but describes a matroid on " + std::to_string(m.size()) + " elements");
  }
  return m;
}

std::vector<MatroidSpec> parse_matroid_specs(const Json& doc, const std::string& prefix) {
  std::vector<MatroidSpec> out;
  auto add = [&](const Json& spec, std::size_t index) {
    std::string id = prefix + "#" + std::to_string(index);
    if (spec.is_object() && spec.contains("id")) {
      if (!spec.at("id").is_string()) parse_fail("id must be a string");
      id = spec.at("id").get<std::string>();
    }
    out.push_back({std::move(id), parse_matroid(spec)});
  };
  if (doc.is_array()) {
    for (std::size_t i = 0; i < doc.size(); ++i) add(doc[i], i);
  } else {
    add(doc, 0);
  }
  return out;
}

std::vector<MatroidSpec> load_matroid_specs(const std::filesystem::path& path) {
  return parse_matroid_specs(parse_json_text(read_file(path), path.string()),
                             path.stem().string());
}

Json subset_to_json(SubsetMask s) { return Json(s.elements()); }

SubsetMask subset_from_json(const Json& j, int n) {
  SubsetMask out;
  for (int e : int_list(j, "subset")) {
    if (e < 0 || e >= n) {
      parse_fail("element " + std::to_string(e) + " outside ground set of size " +
                 std::to_string(n));
    }
    if (out.contains(e)) parse_fail("element " + std::to_string(e) + " repeated in subset");
    out = out.with(e);
  }
  return out;
}

Json bases_spec(const Matroid& m, const std::string& id) {
  Json spec = Json::object();
  if (!id.empty()) spec["id"] = id;
  spec["kind"] = "bases";
  spec["n"] = m.size();
  Json list = Json::array();
  for (SubsetMask b : m.bases()) list.push_back(subset_to_json(b));
  spec["bases"] = std::move(list);
  return spec;
}

std::vector<RationalPoint> parse_points(const Json& doc) {
  if (!doc.is_array()) parse_fail("point batch must be an array of points");
  std::vector<RationalPoint> out;
  for (const Json& point : doc) {
    if (!point.is_array()) parse_fail("each point must be an array of coordinates");
    RationalPoint z;
    for (const Json& c : point) z.push_back(coordinate(c));
    out.push_back(std::move(z));
  }
  return out;
}

std::vector<RationalPoint> load_points(const std::filesystem::path& path) {
  return parse_points(parse_json_text(read_file(path), path.string()));
}

Json point_to_json(const RationalPoint& z) {
  Json out = Json::array();
  for (const Rational& c : z) {
    out.push_back(Json::array({numerator(c).convert_to<long long>(),
                              denominator(c).convert_to<long long>()}));
  }
  return out;
}

}  // namespace omega
