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

#include "omega/omega.hpp"

#include <chrono>

#include "omega/errors.hpp"

namespace omega {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

MethodResult run_variant(const Matroid& m, ChainVariant v, const ReportOptions& options) {
  MethodResult out;
  out.method = std::string(variant_name(v));
  const auto start = Clock::now();
  if (is_flats_variant(v) && !loops(m).empty()) {
    out.value = BigInt(0);
    out.note = "loops present, omega vanishes";
    out.seconds = seconds_since(start);
    return out;
  }
  try {
    ChainSumResult result = chain_sum(m, v, options.evaluator);
    if (component_count(m) % 2 == 0) result.value = -result.value;
    out.value = std::move(result.value);
    out.chains = std::move(result.chains);
  } catch (const OmegaError& e) {
    if (e.code() != ErrorCode::kInfeasible && e.code() != ErrorCode::kVariantInapplicable) throw;
    out.infeasible = e.code() == ErrorCode::kInfeasible;
    out.note = e.what();
  }
  out.seconds = seconds_since(start);
  return out;
}

void append_closed_forms(const Matroid& m, bool first_only, std::vector<MethodResult>& out) {
  const auto start = Clock::now();
  const auto rules = closed_form_rules(m);
  const double elapsed = seconds_since(start);
  if (rules.empty()) {
    MethodResult none;
    none.method = "closed_form";
    none.note = "no closed form applies";
    none.seconds = elapsed;
    out.push_back(std::move(none));
    return;
  }
  for (const auto& rule : rules) {
    MethodResult item;
    item.method = "closed_form:" + std::string(rule.name);
    item.value = rule.value;
    item.seconds = elapsed;
    out.push_back(std::move(item));
    if (first_only) break;
  }
}

}  // namespace

std::optional<MethodSelector> MethodSelector::parse(std::string_view text) {
  MethodSelector s;
  if (text == "auto") return s;
  if (text == "all") {
    s.kind = Kind::kAll;
    return s;
  }
  if (text == "closed_form") {
    s.kind = Kind::kClosedForm;
    return s;
  }
  if (auto v = parse_variant(text)) {
    s.kind = Kind::kVariant;
    s.variant = *v;
    return s;
  }
  return std::nullopt;
}

std::string MethodSelector::name() const {
  switch (kind) {
    case Kind::kAuto:
      return "auto";
    case Kind::kAll:
      return "all";
    case Kind::kClosedForm:
      return "closed_form";
    case Kind::kVariant:
      return std::string(variant_name(variant));
  }
  return "auto";
}

OmegaReport omega_report(const Matroid& m, const MethodSelector& selector, const std::string& id,
                         const ReportOptions& options) {
  OmegaReport report;
  report.id = id;
  report.n = m.size();
  report.r = m.rank();

  switch (selector.kind) {
    case MethodSelector::Kind::kAuto: {
      append_closed_forms(m, true, report.methods);
      if (report.methods.back().value) break;
      report.methods.clear();
      MethodResult result = run_variant(m, ChainVariant::kFinalFlats, options);
      if (!result.value) result = run_variant(m, ChainVariant::kRecordFlats, options);
      report.methods.push_back(std::move(result));
      break;
    }
    case MethodSelector::Kind::kAll:
      append_closed_forms(m, false, report.methods);
      for (ChainVariant v : kAllChainVariants) report.methods.push_back(run_variant(m, v, options));
      break;
    case MethodSelector::Kind::kClosedForm:
      append_closed_forms(m, false, report.methods);
      break;
    case MethodSelector::Kind::kVariant:
      report.methods.push_back(run_variant(m, selector.variant, options));
      break;
  }

  for (const auto& method : report.methods) {
    if (!method.value) continue;
    if (!report.consensus) {
      report.consensus = method.value;
    } else if (*report.consensus != *method.value) {
      report.agreement = false;
    }
  }
  if (!report.agreement) {
    report.consensus.reset();
    report.note = "methods disagree";
  } else if (report.consensus && *report.consensus < 0) {
    report.note = "negative omega";
  }
  return report;
}

}  // namespace omega
