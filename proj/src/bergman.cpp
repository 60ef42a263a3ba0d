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

#include "omega/bergman.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "matroid_access.hpp"
#include "omega/errors.hpp"

namespace omega {
namespace {

void check_point(const Matroid& m, const RationalPoint& z) {
  if (static_cast<int>(z.size()) != m.size()) {
    fail(ErrorCode::kInvalidArgument, "point has " + std::to_string(z.size()) +
                                          " coordinates, expected " + std::to_string(m.size()));
  }
}

// Elements by decreasing z, ties by increasing label.
std::vector<int> descending_order(const RationalPoint& z) {
  std::vector<int> order(z.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return z[a] > z[b]; });
  return order;
}

// Distinct coordinate values, largest first.
std::vector<Rational> levels(const RationalPoint& z) {
  std::vector<Rational> values(z.begin(), z.end());
  std::sort(values.begin(), values.end(), std::greater<>());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

SubsetMask at_least(const RationalPoint& z, const Rational& t) {
  SubsetMask out;
  for (std::size_t e = 0; e < z.size(); ++e) {
    if (z[e] >= t) out = out.with(static_cast<int>(e));
  }
  return out;
}

}  // namespace

SubsetMask z_max_basis(const Matroid& m, const RationalPoint& z) {
  check_point(m, z);
  SubsetMask basis;
  for (int e : descending_order(z)) {
    if (m.is_independent(basis.with(e))) basis = basis.with(e);
  }
  return basis;
}

std::vector<Rational> x_values(const Matroid& m, const RationalPoint& z) {
  check_point(m, z);
  const auto values = levels(z);
  std::vector<Rational> out;
  // Thresholds only matter at coordinate values; scanning them downwards,
  // x_p is the first level at which the upper set reaches rank p.
  for (int p = 1; p <= m.rank(); ++p) {
    for (const Rational& t : values) {
      if (m.rank(at_least(z, t)) >= p) {
        out.push_back(t);
        break;
      }
    }
  }
  return out;
}

std::vector<Rational> y_values(const Matroid& m, const RationalPoint& z) {
  const SubsetMask cobasis = m.ground_set().minus(z_max_basis(m, z));
  std::vector<Rational> values;
  for_each_element(cobasis, [&](int e) { values.push_back(z[e]); });
  std::sort(values.begin(), values.end());
  for (auto& v : values) v = -v;
  return values;
}

Matroid graded_matroid(const Matroid& m, const RationalPoint& z) {
  check_point(m, z);
  const int n = m.size();
  std::vector<SubsetMask> uppers;
  for (const Rational& t : levels(z)) uppers.push_back(at_least(z, t));

  std::vector<std::uint8_t> ranks(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < ranks.size(); ++mask) {
    const SubsetMask x(static_cast<SubsetMask::Word>(mask));
    int total = 0;
    SubsetMask below;
    for (SubsetMask upper : uppers) {
      const SubsetMask layer = upper.minus(below);
      total += m.rank(below | (x & layer)) - m.rank(below);
      below = upper;
    }
    ranks[mask] = static_cast<std::uint8_t>(total);
  }
  return MatroidAccess::from_valid_ranks(n, std::move(ranks));
}

bool bergman_contains(const Matroid& m, const RationalPoint& z) {
  return thickened_bergman_contains(m, 0, z);
}

bool thickened_bergman_contains(const Matroid& m, int ell, const RationalPoint& z) {
  if (ell < 0) fail(ErrorCode::kInvalidArgument, "thickening must be nonnegative");
  return loops(graded_matroid(m, z)).size() <= ell;
}

}  // namespace omega
