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

#include <vector>

#include "omega/subset_mask.hpp"

namespace omega {

/// Strictly increasing list of subsets of a ground set of size n.
class SetChain {
 public:
  SetChain() = default;
  /// Throws kInvalidArgument unless consecutive members are strictly nested
  /// and every member lies inside the ground set.
  SetChain(std::vector<SubsetMask> sets, int n);

  /// The chain ∅ ⊂ {first s_1 elements} ⊂ ... with the given prefix sizes.
  static SetChain initial_segments(const std::vector<int>& sizes, int n);

  const std::vector<SubsetMask>& sets() const { return sets_; }
  int ground_size() const { return n_; }
  bool includes_bottom() const { return includes_bottom_; }
  bool includes_top() const { return includes_top_; }
  std::size_t size() const { return sets_.size(); }
  /// Number of links: members minus one.
  int length() const { return static_cast<int>(sets_.size()) - 1; }
  SubsetMask operator[](std::size_t i) const { return sets_[i]; }

  friend bool operator==(const SetChain&, const SetChain&) = default;

 private:
  std::vector<SubsetMask> sets_;
  int n_ = 0;
  bool includes_bottom_ = false;
  bool includes_top_ = false;
};

}  // namespace omega
