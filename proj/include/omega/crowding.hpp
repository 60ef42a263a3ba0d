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

#include <cstdint>
#include <vector>

#include "omega/matroid.hpp"
#include "omega/set_chain.hpp"

namespace omega {

/// stress(S) = |S| - 2 rank(S). S is crowded when this is >= 0.
inline int stress(const Matroid& m, SubsetMask s) { return s.size() - 2 * m.rank(s); }

/// T ⊆ S is overcrowded in S if stress(T) > stress(S), or the stresses tie
/// and T is not a summand of S (rank(S) != rank(T) + rank(S \ T)).
bool is_overcrowded_in(const Matroid& m, SubsetMask t, SubsetMask s);

/// Direct scan over all T ⊆ S.
bool is_crowding_record(const Matroid& m, SubsetMask s);

struct ZYSplit {
  SubsetMask z_part;  // components of M|S with stress 0
  SubsetMask y_part;  // components of M|S with stress > 0
  /// Whatever is left: components of negative stress. Empty on records.
  SubsetMask rest;
};

ZYSplit zy_split(const Matroid& m, SubsetMask s);

/// Inclusion-minimal nonempty sets of nonnegative stress, sorted by mask.
std::vector<SubsetMask> minimal_crowded_sets(const Matroid& m);

/// Members S_i with stress(S_j) > stress(S_i) for every later j.
SetChain crowd_hull(const SetChain& chain, const std::vector<int>& stresses);

/// The smallest subchain with the same weakly-above path set: the crowd
/// hull further thinned so that no member shares its rank with an earlier
/// member. Of two nested members of equal rank the larger one sits on the
/// same row further right, so its constraint is implied by the smaller one.
SetChain minimal_crowd_hull(const SetChain& chain, const std::vector<int>& stresses,
                            const std::vector<int>& ranks);

/// Stress and record flags for every subset, computed once in O(3^n).
class CrowdingProfile {
 public:
  explicit CrowdingProfile(const Matroid& m);

  int ground_size() const { return n_; }
  int stress(SubsetMask s) const { return stress_[s.bits()]; }
  bool is_crowded(SubsetMask s) const { return stress_[s.bits()] >= 0; }
  bool is_record(SubsetMask s) const { return record_[s.bits()] != 0; }
  /// True when E is not a crowding record, which forces ω = 0.
  bool has_overcrowded_set() const { return !is_record(SubsetMask::full(n_)); }

  std::vector<SubsetMask> crowded_sets() const;
  std::vector<SubsetMask> crowded_flats(const Matroid& m) const;
  std::vector<SubsetMask> record_sets() const;
  std::vector<SubsetMask> record_flats(const Matroid& m) const;
  const std::vector<SubsetMask>& minimal_crowded() const { return minimal_crowded_; }

 private:
  int n_ = 0;
  std::vector<std::int8_t> stress_;
  std::vector<std::uint8_t> record_;
  std::vector<SubsetMask> minimal_crowded_;
};

}  // namespace omega
