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

#include <doctest.h>

#include <algorithm>
#include <bit>
#include <numeric>

#include "generators.hpp"
#include "omega/crowding.hpp"
#include "omega/flat_lattice.hpp"
#include "oracles.hpp"

using namespace omega;

namespace {

// Random chain ∅ ⊂ ... ⊂ E built by adding shuffled elements in blocks.
SetChain random_chain(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<SubsetMask> sets{SubsetMask()};
  SubsetMask cur;
  for (int e : perm) {
    cur = cur.with(e);
    if (cur.size() == n || gen::uniform_int(rng, 0, 2) == 0) sets.push_back(cur);
  }
  return SetChain(std::move(sets), n);
}

// Bitmasks of the step sequences lying weakly above the chain's points.
std::vector<std::uint32_t> paths_above(const Matroid& m, const SetChain& chain) {
  const int n = m.size();
  const int r = m.rank();
  std::vector<std::uint32_t> out;
  if (r <= 0 || n < 2 * r) return out;
  const int length = n - r - 1;
  for (std::uint32_t steps = 0; steps < (1u << length); ++steps) {
    if (std::popcount(steps) != r - 1) continue;
    bool ok = true;
    for (SubsetMask s : chain.sets()) {
      if (s.empty() || s == m.ground_set()) continue;
      const int upto = std::min(s.size() - m.rank(s), length);
      ok = ok && std::popcount(steps & ((1u << upto) - 1)) >= m.rank(s);
    }
    if (ok) out.push_back(steps);
  }
  return out;
}

}  // namespace

TEST_CASE("stress and records on small examples") {
  const Matroid u = uniform(2, 5);
  CHECK(stress(u, u.ground_set()) == 1);
  CHECK(is_crowding_record(u, u.ground_set()));
  // Two parallel elements inside U(2,4)+parallel: {1, 4} has stress 0 and is
  // not a summand of E, while E has stress 1.
  const Matroid p = add_parallel(uniform(2, 4), 1);
  CHECK(stress(p, SubsetMask(0b10010)) == 0);
  CHECK(is_crowding_record(p, p.ground_set()));
  // U(1,2) ⊕ U(2,3) has stress -1, so ∅ is overcrowded in E. The U(1,2)
  // part on its own is a record of stress 0.
  const Matroid sum = direct_sum(uniform(1, 2), uniform(2, 3));
  CHECK_FALSE(is_crowding_record(sum, sum.ground_set()));
  CHECK(is_crowding_record(sum, SubsetMask(0b00011)));
  const auto split = zy_split(sum, SubsetMask(0b00011));
  CHECK(split.z_part == SubsetMask(0b00011));
  CHECK(split.y_part.empty());
}

TEST_CASE("records, stresses and Z/Y split agree with exhaustive scans") {
  std::mt19937_64 rng(505);
  for (int trial = 0; trial < 40; ++trial) {
    const Matroid m = gen::any_matroid(7, rng);
    const CrowdingProfile profile(m);
    for (SubsetMask s : oracle::all_subsets(m.size())) {
      REQUIRE(profile.stress(s) == oracle::stress_of(m, s));
      REQUIRE(is_crowding_record(m, s) == oracle::is_record(m, s));
      REQUIRE(profile.is_record(s) == oracle::is_record(m, s));
      for (SubsetMask t : oracle::all_subsets(m.size())) {
        if (t.is_subset_of(s)) REQUIRE(is_overcrowded_in(m, t, s) == oracle::overcrowded_in(m, t, s));
      }
      if (!oracle::is_record(m, s)) continue;
      const auto split = zy_split(m, s);
      CHECK(split.z_part == oracle::zero_part(m, s));
      CHECK(split.rest.empty());
      CHECK((split.z_part | split.y_part) == s);
    }
    CHECK(profile.has_overcrowded_set() == !oracle::is_record(m, m.ground_set()));
  }
}

TEST_CASE("minimal crowded sets") {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 40; ++trial) {
    const Matroid m = gen::any_matroid(7, rng);
    std::vector<SubsetMask> expected;
    for (SubsetMask s : oracle::all_subsets(m.size())) {
      if (s.empty() || oracle::stress_of(m, s) < 0) continue;
      bool minimal = true;
      for (SubsetMask t : oracle::all_subsets(m.size())) {
        if (!t.empty() && t.is_proper_subset_of(s) && oracle::stress_of(m, t) >= 0) minimal = false;
      }
      if (minimal) expected.push_back(s);
    }
    std::sort(expected.begin(), expected.end(),
              [](SubsetMask a, SubsetMask b) { return a.bits() < b.bits(); });
    CHECK(minimal_crowded_sets(m) == expected);
    CHECK(CrowdingProfile(m).minimal_crowded() == expected);
  }
}

TEST_CASE("crowded and record flats are the flats among the sets") {
  std::mt19937_64 rng(707);
  for (int trial = 0; trial < 20; ++trial) {
    const Matroid m = gen::loop_free_matroid(7, rng);
    const CrowdingProfile profile(m);
    for (SubsetMask f : profile.crowded_flats(m)) CHECK(oracle::is_flat(m, f));
    for (SubsetMask f : profile.record_flats(m)) {
      CHECK(oracle::is_flat(m, f));
      CHECK(oracle::is_record(m, f));
    }
    std::size_t flats_that_are_records = 0;
    for (SubsetMask f : oracle::flats(m)) flats_that_are_records += oracle::is_record(m, f);
    CHECK(profile.record_flats(m).size() == flats_that_are_records);
  }
}

TEST_CASE("crowd hulls keep the weakly-above path set") {
  std::mt19937_64 rng(808);
  int shrunk = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Matroid m = gen::any_matroid(9, rng);
    const SetChain chain = random_chain(m.size(), rng);
    std::vector<int> stresses;
    std::vector<int> ranks;
    for (SubsetMask s : chain.sets()) {
      stresses.push_back(oracle::stress_of(m, s));
      ranks.push_back(m.rank(s));
    }
    const SetChain hull = crowd_hull(chain, stresses);
    const SetChain tight = minimal_crowd_hull(chain, stresses, ranks);

    for (std::size_t i = 0; i < hull.size(); ++i) {
      for (std::size_t j = 0; j < chain.size(); ++j) {
        if (chain[j].size() > hull[i].size()) CHECK(stresses[j] > oracle::stress_of(m, hull[i]));
      }
    }
    for (SubsetMask s : tight.sets()) {
      CHECK(std::find(hull.sets().begin(), hull.sets().end(), s) != hull.sets().end());
    }
    const auto expected = paths_above(m, chain);
    CHECK(paths_above(m, hull) == expected);
    CHECK(paths_above(m, tight) == expected);
    shrunk += tight.size() < hull.size();
  }
  CHECK(shrunk > 0);
}
