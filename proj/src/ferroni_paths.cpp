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

#include "omega/ferroni_paths.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "omega/errors.hpp"

namespace omega {
namespace {

constexpr int kBinomialRows = 63;

auto make_pascal() {
  std::array<std::array<std::int64_t, kBinomialRows>, kBinomialRows> table{};
  for (int n = 0; n < kBinomialRows; ++n) {
    table[n][0] = 1;
    for (int k = 1; k <= n; ++k) table[n][k] = table[n - 1][k - 1] + table[n - 1][k];
  }
  return table;
}

const auto kPascal = make_pascal();

}  // namespace

std::int64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n >= kBinomialRows) fail(ErrorCode::kInvalidArgument, "binomial row out of range");
  return kPascal[n][k];
}

std::string_view path_mode_name(PathMode mode) {
  return mode == PathMode::kStrictlyBelow ? "strictly_below" : "weakly_above";
}

BigInt count_paths(const PathProblem& problem) {
  if (problem.n < 0 || problem.r < 0) {
    fail(ErrorCode::kInvalidArgument, "path problem needs n >= 0 and r >= 0");
  }
  for (const auto& c : problem.constraints) {
    if (c.x < 0 || c.x > problem.n - problem.r) {
      fail(ErrorCode::kConstraintOutOfRange,
           "constraint x = " + std::to_string(c.x) + " outside [0, " +
               std::to_string(problem.n - problem.r) + "]");
    }
  }
  const PathGeometry geometry(problem.n, problem.r);
  if (!geometry.nonempty()) return 0;

  const int length = geometry.length();
  const int diagonals = geometry.diagonals();
  std::vector<std::vector<const PathConstraint*>> at(length + 1);
  for (const auto& c : problem.constraints) at[geometry.clamp(c.x)].push_back(&c);

  // ways[d]: paths over the first x steps with d diagonals, all constraints
  // at positions <= x satisfied.
  std::vector<BigInt> ways(diagonals + 1, 0);
  ways[0] = 1;
  for (int x = 0;; ++x) {
    for (const PathConstraint* c : at[x]) {
      for (int d = 0; d <= diagonals; ++d) {
        if (!PathGeometry::satisfies(c->mode, d, c->y)) ways[d] = 0;
      }
    }
    if (x == length) break;
    for (int d = diagonals; d >= 1; --d) ways[d] += ways[d - 1];
  }
  return ways[diagonals];
}

std::vector<LatticePoint> verts_of_chain(const SetChain& chain, const std::vector<int>& ranks) {
  if (ranks.size() != chain.size()) {
    fail(ErrorCode::kInvalidArgument, "ranks must align with chain members");
  }
  const SubsetMask ground = SubsetMask::full(chain.ground_size());
  std::vector<LatticePoint> out;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const SubsetMask s = chain[i];
    if (s.empty() || s == ground) continue;
    out.push_back({s.size() - ranks[i], ranks[i]});
  }
  return out;
}

}  // namespace omega
