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

// Chain-sum formulas for ω°(M).
//
// Every variant is a signed sum over chains S_0 ⊂ S_1 ⊂ ... ⊂ S_k = E of
// Ferroni path counts constrained at the points (corank S_i, rank S_i) of
// the members other than ∅ and E:
//
//   variant        members              sign                     paths
//   InwardSets     all subsets          (-1)^(n-k)               strictly below
//   InwardFlats    flats                (-1)^k μ(F_0,F_1)...     strictly below
//   OutwardSets    all subsets          (-1)^(k-1)               weakly above
//   OutwardFlats   flats                (-1)^(k-1)               weakly above
//   Crowded*       stress >= 0          (-1)^(k-1)               weakly above
//   Record*        crowding records     (-1)^(k-1)               weakly above
//   Final*         see below            (-1)^(c(S_0)+k-1)        weakly above
//
// Non-final chains start at S_0 = ∅. Final chains start at any record S_0
// of stress 0 (∅ included), have strictly increasing stress and weakly
// decreasing Z(S_i); S_0 = E is allowed on its own.

#include <optional>
#include <string_view>
#include <vector>

#include "omega/bigint.hpp"
#include "omega/matroid.hpp"
#include "omega/set_chain.hpp"

namespace omega {

enum class ChainVariant {
  kInwardSets,
  kInwardFlats,
  kOutwardSets,
  kOutwardFlats,
  kCrowdedSets,
  kCrowdedFlats,
  kRecordSets,
  kRecordFlats,
  kFinalSets,
  kFinalFlats,
};

inline constexpr ChainVariant kAllChainVariants[] = {
    ChainVariant::kInwardSets,  ChainVariant::kInwardFlats,  ChainVariant::kOutwardSets,
    ChainVariant::kOutwardFlats, ChainVariant::kCrowdedSets, ChainVariant::kCrowdedFlats,
    ChainVariant::kRecordSets,  ChainVariant::kRecordFlats,  ChainVariant::kFinalSets,
    ChainVariant::kFinalFlats,
};

std::string_view variant_name(ChainVariant v);
std::optional<ChainVariant> parse_variant(std::string_view name);
bool is_flats_variant(ChainVariant v);

/// Largest ground set accepted by InwardSets and OutwardSets.
inline constexpr int kMaxUnrestrictedSetsSize = 12;

enum class Evaluator {
  /// Memoized transfer over the member poset; cost is polynomial in the
  /// number of admissible members and pairs.
  kTransfer,
  /// Depth-first walk over individual chains, extending the path-count
  /// vector one member at a time and dropping chains whose count hits zero.
  kDepthFirst,
};

struct ChainSumResult {
  BigInt value;  // ω°(M)
  /// kTransfer: number of chains in the summation domain.
  /// kDepthFirst: number of complete chains actually evaluated.
  BigInt chains;
};

/// Errors: kVariantInapplicable (flats variant with loops), kInfeasible
/// (InwardSets/OutwardSets with n > 12, or the depth-first chain budget
/// exhausted).
ChainSumResult chain_sum(const Matroid& m, ChainVariant variant,
                         Evaluator evaluator = Evaluator::kTransfer);

/// Budget of chain-prefix visits for Evaluator::kDepthFirst.
inline constexpr std::uint64_t kDepthFirstBudget = 20'000'000;

/// ω°(M) by the given variant.
BigInt omega_chain_sum(const Matroid& m, ChainVariant variant);

/// ω(M) = (-1)^(c(M)-1) ω°(M) by the given variant.
BigInt omega(const Matroid& m, ChainVariant variant);

/// ω of the Schubert matroid Ω_{S,a}: paths strictly below verts(S, a).
BigInt omega_schubert(const SetChain& chain, const std::vector<int>& a);

}  // namespace omega
