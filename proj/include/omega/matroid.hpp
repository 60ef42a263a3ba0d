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
#include <span>
#include <vector>

#include "omega/set_chain.hpp"
#include "omega/subset_mask.hpp"

namespace omega {

struct MatroidAccess;

/// A matroid on {0, ..., n-1} with 1 <= n <= 16, stored as its sorted basis
/// list together with the complete rank table (2^n entries).
///
/// Instances are immutable once constructed, so they can be shared across
/// threads without synchronization.
class Matroid {
 public:
  /// Validates and builds. Errors: kEmptyGroundSet (n = 0),
  /// kGroundSetTooLarge (n > 16), kInvalidArgument (empty list, stray bits),
  /// kNotAMatroid (mixed cardinalities or a failed exchange).
  static Matroid from_bases(int n, std::vector<SubsetMask> bases);

  /// Builds from a complete rank table indexed by mask bits. The table is
  /// checked for r(∅)=0, unit increments and local submodularity.
  static Matroid from_rank_table(int n, std::vector<std::uint8_t> ranks);

  int size() const { return n_; }
  int rank() const { return r_; }
  SubsetMask ground_set() const { return SubsetMask::full(n_); }
  const std::vector<SubsetMask>& bases() const { return bases_; }
  std::span<const std::uint8_t> rank_table() const { return ranks_; }

  int rank(SubsetMask s) const { return ranks_[s.bits()]; }
  int corank(SubsetMask s) const { return s.size() - rank(s); }
  bool is_basis(SubsetMask s) const { return s.size() == r_ && rank(s) == r_; }
  bool is_independent(SubsetMask s) const { return rank(s) == s.size(); }

  SubsetMask closure(SubsetMask s) const;
  bool is_flat(SubsetMask s) const { return closure(s) == s; }

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.n_ == b.n_ && a.bases_ == b.bases_;
  }

 private:
  friend struct MatroidAccess;
  Matroid(int n, std::vector<std::uint8_t> ranks);

  int n_ = 0;
  int r_ = 0;
  std::vector<SubsetMask> bases_;
  std::vector<std::uint8_t> ranks_;
};

Matroid uniform(int r, int n);

/// Throws kInvalidProfile unless the chain runs from ∅ to E, a_0 = 0 and
/// a_{i-1} <= a_i <= a_{i-1} + |S_i \ S_{i-1}|.
void check_schubert_profile(const SetChain& chain, const std::vector<int>& a);

/// Bases are the r-subsets B with |B ∩ S_i| <= a_i along the chain.
/// The chain must run from ∅ to E.
Matroid schubert_lower(const SetChain& chain, const std::vector<int>& a);
/// Bases satisfy |B ∩ S_i| >= a_i; built from the reversed complemented data.
Matroid schubert_upper(const SetChain& chain, const std::vector<int>& a);
/// Bases are the |A|-subsets dominating A in the Gale order induced by
/// `order` (order[0] is the smallest element).
Matroid schubert_from_order(int n, const std::vector<int>& order, SubsetMask a);

Matroid dual(const Matroid& m);
/// M \ S, with the surviving elements relabelled 0.. in increasing order.
Matroid deletion(const Matroid& m, SubsetMask s);
/// M / S, relabelled as for deletion.
Matroid contraction(const Matroid& m, SubsetMask s);
/// M | S, i.e. deletion of E \ S.
Matroid restriction(const Matroid& m, SubsetMask s);
/// Elements of `second` are shifted up by first.size().
Matroid direct_sum(const Matroid& first, const Matroid& second);
/// Appends a new element n that is parallel to `element` (a loop if
/// `element` is a loop).
Matroid add_parallel(const Matroid& m, int element);

struct Simplification {
  Matroid matroid;
  /// Original label of each retained element (the smallest of its class).
  std::vector<int> kept;
  /// Size of the parallel class each retained element represents.
  std::vector<int> multiplicity;
};

/// Collapses parallel classes. Throws kLoopsPresent if M has loops.
Simplification simplify(const Matroid& m);

SubsetMask loops(const Matroid& m);
SubsetMask coloops(const Matroid& m);

/// Connected components of M, each as a mask, ordered by smallest element.
/// Computed by union-find over single-element basis exchanges.
std::vector<SubsetMask> connected_components(const Matroid& m);
int component_count(const Matroid& m);

/// Components of the restriction M|S, ordered by smallest element; empty
/// for S = ∅. Uses the fundamental circuits of a greedy basis of S.
std::vector<SubsetMask> restriction_components(const Matroid& m, SubsetMask s);

int component_count(const Matroid& m, SubsetMask s);

}  // namespace omega
