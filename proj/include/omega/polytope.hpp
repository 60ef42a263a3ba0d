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

// Exact membership tests for matroid polytopes and pointwise evaluation of
// the four chain decompositions of the indicator function of Δ(M).
// All arithmetic is in exact rationals.

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "omega/bigint.hpp"
#include "omega/matroid.hpp"
#include "omega/set_chain.hpp"

namespace omega {

using RationalPoint = std::vector<Rational>;

/// 0 <= z_i <= 1 and Σ z_i = r.
bool in_hypersimplex(int r, const RationalPoint& z);

/// Σ_{i∈S} z_i <= rank(S) for every S, with equality at S = E.
bool in_base_polytope(const Matroid& m, const RationalPoint& z);

/// Hypersimplex ∩ {Σ_{S_i} z <= a_i}, where r = a_k.
bool in_schubert_lower(const SetChain& chain, const std::vector<int>& a, const RationalPoint& z);
/// Hypersimplex ∩ {Σ_{S_i} z >= a_i}.
bool in_schubert_upper(const SetChain& chain, const std::vector<int>& a, const RationalPoint& z);
/// Hypersimplex ∩ {Σ_{S_i} z > a_i} over the members other than ∅ and E.
bool in_halfopen(const SetChain& chain, const std::vector<int>& a, const RationalPoint& z);

enum class IdentityKind { kInwardSets, kOutwardSets, kOuterFlats, kInnerFlats };

inline constexpr IdentityKind kAllIdentityKinds[] = {
    IdentityKind::kInwardSets, IdentityKind::kOutwardSets, IdentityKind::kOuterFlats,
    IdentityKind::kInnerFlats};

std::string_view identity_name(IdentityKind kind);
std::optional<IdentityKind> parse_identity(std::string_view name);

struct IdentityValues {
  std::int64_t lhs = 0;  // indicator of Δ(M) at z
  std::int64_t rhs = 0;  // signed sum of member indicators at z
};

/// Evaluates both sides of the decompositions at many points of one matroid.
/// Precomputes the flat lattice and its Möbius values once. The flats kinds
/// throw kVariantInapplicable when M has loops.
class IdentityChecker {
 public:
  explicit IdentityChecker(const Matroid& m);
  ~IdentityChecker();
  IdentityChecker(IdentityChecker&&) noexcept;
  IdentityChecker& operator=(IdentityChecker&&) noexcept;

  IdentityValues check(IdentityKind kind, const RationalPoint& z) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

IdentityValues check_identity(const Matroid& m, IdentityKind kind, const RationalPoint& z);

/// Test points for the identity checker: every 0/1 vertex of the
/// hypersimplex followed by `count` seeded points drawn from convex
/// combinations of bases and hypersimplex vertices, midpoints, and small
/// rational perturbations (denominators at most `max_denominator`, except
/// for the perturbations, which push off facets by 1/(4·max_denominator)).
std::vector<RationalPoint> sample_points(const Matroid& m, std::size_t count, std::mt19937_64& rng,
                                         int max_denominator = 64);

/// All points of {Σ z = r} ∩ [0,1]^n whose coordinates are multiples of 1/d.
std::vector<RationalPoint> grid_points(int n, int r, int d);

}  // namespace omega
