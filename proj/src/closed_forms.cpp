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

#include "omega/closed_forms.hpp"

#include "omega/crowding.hpp"
#include "omega/errors.hpp"
#include "omega/flat_lattice.hpp"

namespace omega {
namespace {

// Some nonempty proper subset of `part` has stress >= `threshold`.
bool has_inner_subset_with_stress(const Matroid& m, SubsetMask part, int threshold) {
  const auto bits = part.bits();
  for (auto t = (bits - 1) & bits; t != 0; t = (t - 1) & bits) {
    if (stress(m, SubsetMask(t)) >= threshold) return true;
  }
  return false;
}

BigInt rank3_value(const Matroid& simple) {
  BigInt value = binomial(simple.size() - 4, 2);
  for (SubsetMask line : FlatLattice(simple).flats_of_rank(2)) {
    value -= binomial(line.size() - 2, 2);
  }
  return value;
}

// ω of a connected matroid with n = 2r + 1, or nullopt if neither case of
// the dichotomy is recognised.
std::optional<BigInt> middle_core_value(const Matroid& core) {
  const SubsetMask ground = core.ground_set();
  if (core.rank() == 0) return BigInt(0);
  if (has_inner_subset_with_stress(core, ground, 1)) return BigInt(0);

  const auto minimal = minimal_crowded_sets(core);
  const std::size_t p = minimal.size();
  bool all_disjoint = true;
  bool all_covering = true;
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i + 1; j < p; ++j) {
      if (!(minimal[i] & minimal[j]).empty()) all_disjoint = false;
      if ((minimal[i] | minimal[j]) != ground) all_covering = false;
    }
  }
  if (p >= 2 && all_disjoint) return BigInt(0);
  if (p >= 2 && all_covering) {
    if (p % 2 == 0) return std::nullopt;
    return BigInt((p - 1) / 2);
  }
  return std::nullopt;
}

struct ComponentData {
  SubsetMask mask;
  int size = 0;
  int rank = 0;
};

std::vector<ComponentData> component_data(const Matroid& m) {
  std::vector<ComponentData> out;
  for (SubsetMask c : connected_components(m)) out.push_back({c, c.size(), m.rank(c)});
  return out;
}

void add_rank_rules(const Matroid& m, std::vector<ClosedFormRule>& rules) {
  const int r = m.rank();
  if (r < 1 || r > 4) return;
  if (r == 1) {
    rules.push_back({"rank1", m.size() >= 2 ? 1 : 0});
    return;
  }
  const Matroid simple = simplify(m).matroid;
  const int n = simple.size();
  if (r == 2) {
    rules.push_back({"rank2", n - 3});
  } else if (r == 3) {
    rules.push_back({"rank3", rank3_value(simple)});
  } else {
    const Rational value = rank4_expression(simple);
    if (denominator(value) != 1) {
      fail(ErrorCode::kNonIntegralRank4, "rank-4 expression evaluated to " + value.str());
    }
    rules.push_back({"rank4", numerator(value)});
  }
}

std::optional<BigInt> n_eq_2r_value(const Matroid& m, const std::vector<ComponentData>& parts) {
  for (const auto& c : parts) {
    if (c.size != 2 * c.rank) return BigInt(0);
    if (has_inner_subset_with_stress(m, c.mask, 0)) return BigInt(0);
  }
  return BigInt(1);
}

std::optional<BigInt> n_eq_2r_plus_1_value(const Matroid& m,
                                           const std::vector<ComponentData>& parts) {
  const ComponentData* core = nullptr;
  for (const auto& c : parts) {
    if (c.size < 2 * c.rank) return BigInt(0);
    if (c.size == 2 * c.rank + 1) core = &c;
  }
  for (const auto& c : parts) {
    if (&c == core) continue;
    if (has_inner_subset_with_stress(m, c.mask, 0)) return BigInt(0);
  }
  return middle_core_value(restriction(m, core->mask));
}

}  // namespace

Rational rank4_expression(const Matroid& simple) {
  const FlatLattice lattice(simple);
  const auto lines = lattice.flats_of_rank(2);
  const auto planes = lattice.flats_of_rank(3);
  const int n = simple.size();

  Rational value = binomial(n - 5, 3);
  for (SubsetMask p : planes) value -= binomial(p.size() - 3, 3);
  for (SubsetMask l : lines) {
    const Rational weight = binomial(l.size() - 2, 2);
    value -= weight * (Rational(n) - Rational(2 * l.size(), 3) - Rational(13, 3));
    for (SubsetMask p : planes) {
      if (!l.is_subset_of(p)) continue;
      value += weight * (Rational(p.size()) - Rational(2 * l.size(), 3) - Rational(7, 3));
    }
  }
  return value;
}

std::vector<ClosedFormRule> closed_form_rules(const Matroid& m) {
  std::vector<ClosedFormRule> rules;
  const int n = m.size();
  const int r = m.rank();

  if (n < 2 * r) rules.push_back({"n_lt_2r", 0});
  if (!loops(m).empty()) rules.push_back({"loops", 0});
  if (!coloops(m).empty()) rules.push_back({"coloops", 0});
  if (!is_crowding_record(m, m.ground_set())) rules.push_back({"overcrowded", 0});

  const auto parts = component_data(m);
  if (parts.size() > 1) {
    BigInt product = 1;
    bool known = true;
    for (const auto& c : parts) {
      const auto value = omega_closed_form(restriction(m, c.mask));
      if (!value) {
        known = false;
        break;
      }
      product *= *value;
    }
    if (known) rules.push_back({"disconnected", product});
  } else {
    add_rank_rules(m, rules);
  }

  if (n == 2 * r) {
    if (auto value = n_eq_2r_value(m, parts)) rules.push_back({"n_eq_2r", *value});
  }
  if (n == 2 * r + 1) {
    if (auto value = n_eq_2r_plus_1_value(m, parts)) rules.push_back({"n_eq_2r_plus_1", *value});
  }

  bool crowded_flat = false;
  const SubsetMask ground = m.ground_set();
  const FlatLattice lattice(m);
  for (SubsetMask f : lattice.flats()) {
    if (!f.empty() && f != ground && stress(m, f) >= 0) {
      crowded_flat = true;
      break;
    }
  }
  if (!crowded_flat) rules.push_back({"no_crowded_flats", binomial(n - r - 1, r - 1)});
  return rules;
}

std::optional<BigInt> omega_closed_form(const Matroid& m) {
  auto rules = closed_form_rules(m);
  if (rules.empty()) return std::nullopt;
  return rules.front().value;
}

}  // namespace omega
