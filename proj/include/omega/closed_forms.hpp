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
#include <string_view>
#include <vector>

#include "omega/bigint.hpp"
#include "omega/matroid.hpp"

namespace omega {

/// One closed-form evaluation of ω(M) whose hypotheses M satisfies.
struct ClosedFormRule {
  std::string_view name;
  BigInt value;
};

/// Rule names, in the order they are tried:
///   n_lt_2r, loops, coloops, overcrowded   vanishing criteria
///   disconnected                           product over components
///   rank1 .. rank4                         connected, after simplification
///   n_eq_2r, n_eq_2r_plus_1                near-middle rank
///   no_crowded_flats                       C(n-r-1, r-1)
///
/// Every applicable rule is returned, so callers can check that they agree.
/// Throws kNonIntegralRank4 if the rank-4 expression fails to be an integer.
std::vector<ClosedFormRule> closed_form_rules(const Matroid& m);

/// Value of the first applicable rule, if any.
std::optional<BigInt> omega_closed_form(const Matroid& m);

/// The rank-4 expression on its own, for a simple connected rank-4 matroid.
Rational rank4_expression(const Matroid& simple);

}  // namespace omega
