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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "omega/bigint.hpp"
#include "omega/chain_sum.hpp"
#include "omega/closed_forms.hpp"
#include "omega/matroid.hpp"

namespace omega {

/// What omega_report should run.
///   auto          first applicable closed form, else final_flats, else record_flats
///   all           every closed-form rule and all ten chain-sum variants
///   closed_form   every applicable closed-form rule
///   <variant>     one chain-sum variant, e.g. "final_flats"
struct MethodSelector {
  enum class Kind { kAuto, kAll, kClosedForm, kVariant };
  Kind kind = Kind::kAuto;
  ChainVariant variant = ChainVariant::kFinalFlats;

  static std::optional<MethodSelector> parse(std::string_view text);
  std::string name() const;
};

struct MethodResult {
  std::string method;  // "closed_form:rank3", "outward_flats", ...
  std::optional<BigInt> value;  // ω(M); absent when the method could not run
  BigInt chains = 0;
  double seconds = 0;
  std::string note;
  bool infeasible = false;
};

struct OmegaReport {
  std::string id;
  int n = 0;
  int r = 0;
  std::vector<MethodResult> methods;
  std::optional<BigInt> consensus;  // set when at least one value exists and all agree
  bool agreement = true;  // true iff all computed values are equal
  std::string note;
};

struct ReportOptions {
  Evaluator evaluator = Evaluator::kTransfer;
};

OmegaReport omega_report(const Matroid& m, const MethodSelector& selector,
                         const std::string& id = "", const ReportOptions& options = {});

}  // namespace omega
