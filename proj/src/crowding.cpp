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

#include "omega/crowding.hpp"

#include "omega/errors.hpp"

namespace omega {
namespace {

// Scans proper nonempty T ⊂ S; neither ∅ nor S itself can be overcrowded.
template <class StressOf, class RankOf>
bool scan_record(SubsetMask s, StressOf stress_of, RankOf rank_of) {
  const int target = stress_of(s);
  if (target < 0) return false;
  const int rank_s = rank_of(s);
  const auto bits = s.bits();
  for (auto t = (bits - 1) & bits; t != 0; t = (t - 1) & bits) {
    const SubsetMask sub(t);
    const int st = stress_of(sub);
    if (st > target) return false;
    if (st == target && rank_of(sub) + rank_of(s.minus(sub)) != rank_s) return false;
  }
  return true;
}

void check_chain_data(const SetChain& chain, const std::vector<int>& values) {
  if (values.size() != chain.size()) {
    fail(ErrorCode::kInvalidArgument, "per-member data must align with the chain");
  }
}

}  // namespace

bool is_overcrowded_in(const Matroid& m, SubsetMask t, SubsetMask s) {
  if (!t.is_subset_of(s)) fail(ErrorCode::kInvalidArgument, "T must be a subset of S");
  const int st = stress(m, t);
  const int ss = stress(m, s);
  if (st != ss) return st > ss;
  return m.rank(s) != m.rank(t) + m.rank(s.minus(t));
}

bool is_crowding_record(const Matroid& m, SubsetMask s) {
  if (s.empty()) return true;
  return scan_record(
      s, [&](SubsetMask x) { return stress(m, x); }, [&](SubsetMask x) { return m.rank(x); });
}

ZYSplit zy_split(const Matroid& m, SubsetMask s) {
  ZYSplit out;
  for (SubsetMask c : restriction_components(m, s)) {
    const int st = stress(m, c);
    if (st == 0) {
      out.z_part |= c;
    } else if (st > 0) {
      out.y_part |= c;
    } else {
      out.rest |= c;
    }
  }
  return out;
}

std::vector<SubsetMask> minimal_crowded_sets(const Matroid& m) {
  return CrowdingProfile(m).minimal_crowded();
}

SetChain crowd_hull(const SetChain& chain, const std::vector<int>& stresses) {
  check_chain_data(chain, stresses);
  std::vector<SubsetMask> kept;
  // Walk backwards tracking the smallest stress seen to the right.
  int floor = 0;
  bool have_floor = false;
  for (std::size_t i = chain.size(); i-- > 0;) {
    if (!have_floor || floor > stresses[i]) kept.push_back(chain[i]);
    if (!have_floor || stresses[i] < floor) floor = stresses[i];
    have_floor = true;
  }
  return SetChain({kept.rbegin(), kept.rend()}, chain.ground_size());
}

SetChain minimal_crowd_hull(const SetChain& chain, const std::vector<int>& stresses,
                            const std::vector<int>& ranks) {
  check_chain_data(chain, stresses);
  check_chain_data(chain, ranks);
  std::vector<SubsetMask> kept;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    bool keep = true;
    for (std::size_t j = i + 1; j < chain.size() && keep; ++j) keep = stresses[j] > stresses[i];
    for (std::size_t j = 0; j < i && keep; ++j) keep = ranks[j] < ranks[i];
    if (keep) kept.push_back(chain[i]);
  }
  return SetChain(std::move(kept), chain.ground_size());
}

CrowdingProfile::CrowdingProfile(const Matroid& m) : n_(m.size()) {
  using Word = SubsetMask::Word;
  const Word count = Word{1} << n_;
  stress_.resize(count);
  for (Word mask = 0; mask < count; ++mask) {
    stress_[mask] = static_cast<std::int8_t>(omega::stress(m, SubsetMask(mask)));
  }
  record_.assign(count, 0);
  record_[0] = 1;
  for (Word mask = 1; mask < count; ++mask) {
    record_[mask] = scan_record(
        SubsetMask(mask), [&](SubsetMask x) { return int{stress_[x.bits()]}; },
        [&](SubsetMask x) { return m.rank(x); });
  }

  // below[S]: some nonempty proper subset of S is crowded.
  std::vector<std::uint8_t> below(count, 0);
  for (Word mask = 1; mask < count; ++mask) {
    bool found = false;
    for_each_element(SubsetMask(mask), [&](int e) {
      const Word sub = mask & ~(Word{1} << e);
      if (sub != 0 && (below[sub] || stress_[sub] >= 0)) found = true;
    });
    below[mask] = found;
    if (!found && stress_[mask] >= 0) minimal_crowded_.push_back(SubsetMask(mask));
  }
}

std::vector<SubsetMask> CrowdingProfile::crowded_sets() const {
  std::vector<SubsetMask> out;
  for (std::size_t mask = 0; mask < stress_.size(); ++mask) {
    if (stress_[mask] >= 0) out.emplace_back(static_cast<SubsetMask::Word>(mask));
  }
  return out;
}

std::vector<SubsetMask> CrowdingProfile::crowded_flats(const Matroid& m) const {
  std::vector<SubsetMask> out;
  for (SubsetMask s : crowded_sets()) {
    if (m.is_flat(s)) out.push_back(s);
  }
  return out;
}

std::vector<SubsetMask> CrowdingProfile::record_sets() const {
  std::vector<SubsetMask> out;
  for (std::size_t mask = 0; mask < record_.size(); ++mask) {
    if (record_[mask]) out.emplace_back(static_cast<SubsetMask::Word>(mask));
  }
  return out;
}

std::vector<SubsetMask> CrowdingProfile::record_flats(const Matroid& m) const {
  std::vector<SubsetMask> out;
  for (SubsetMask s : record_sets()) {
    if (m.is_flat(s)) out.push_back(s);
  }
  return out;
}

}  // namespace omega
