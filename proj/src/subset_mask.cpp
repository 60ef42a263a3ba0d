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

#include "omega/subset_mask.hpp"

#include "omega/errors.hpp"

namespace omega {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotAMatroid: return "NotAMatroid";
    case ErrorCode::kEmptyGroundSet: return "EmptyGroundSet";
    case ErrorCode::kGroundSetTooLarge: return "GroundSetTooLarge";
    case ErrorCode::kInvalidRank: return "InvalidRank";
    case ErrorCode::kInvalidProfile: return "InvalidProfile";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kLoopsPresent: return "LoopsPresent";
    case ErrorCode::kConstraintOutOfRange: return "ConstraintOutOfRange";
    case ErrorCode::kVariantInapplicable: return "VariantInapplicable";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kNonIntegralRank4: return "NonIntegralRank4";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

std::vector<int> SubsetMask::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for_each_element(*this, [&](int e) { out.push_back(e); });
  return out;
}

SubsetMask SubsetMask::from_elements(const std::vector<int>& elements) {
  Word bits = 0;
  for (int e : elements) {
    if (e < 0 || e >= kMaxGroundSet) {
      fail(ErrorCode::kInvalidArgument, "element " + std::to_string(e) + " out of range");
    }
    bits |= Word{1} << e;
  }
  return SubsetMask(bits);
}

std::string SubsetMask::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each_element(*this, [&](int e) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  });
  out += '}';
  return out;
}

SubsetMask compress(SubsetMask value, SubsetMask selector) {
  SubsetMask::Word out = 0;
  int pos = 0;
  for_each_element(selector, [&](int e) {
    if (value.contains(e)) out |= SubsetMask::Word{1} << pos;
    ++pos;
  });
  return SubsetMask(out);
}

SubsetMask expand(SubsetMask packed, SubsetMask selector) {
  SubsetMask::Word out = 0;
  int pos = 0;
  for_each_element(selector, [&](int e) {
    if (packed.contains(pos)) out |= SubsetMask::Word{1} << e;
    ++pos;
  });
  return SubsetMask(out);
}

}  // namespace omega
