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
#include <memory>
#include <vector>

#include "omega/matroid.hpp"

namespace omega {

/// The lattice of flats of a matroid, graded by rank.
///
/// Möbius values are computed one row μ(F, ·) at a time on first use by the
/// defining recursion μ(F,F) = 1, μ(F,G) = -Σ_{F ⊆ H ⊊ G} μ(F,H). Rows are
/// cached behind a mutex, so concurrent readers are safe.
class FlatLattice {
 public:
  explicit FlatLattice(const Matroid& m);
  ~FlatLattice();
  FlatLattice(FlatLattice&&) noexcept;
  FlatLattice& operator=(FlatLattice&&) noexcept;

  int ground_size() const { return n_; }
  int rank() const { return rank_; }

  /// All flats, sorted by (rank, mask bits).
  const std::vector<SubsetMask>& flats() const { return flats_; }
  std::vector<SubsetMask> flats_of_rank(int k) const;
  int flat_rank(std::size_t index) const { return flat_ranks_[index]; }

  SubsetMask bottom() const { return flats_.front(); }
  SubsetMask top() const { return flats_.back(); }

  bool is_flat(SubsetMask s) const { return index_[s.bits()] >= 0; }
  /// Position of s in flats(), or -1 when s is not a flat.
  int index_of(SubsetMask s) const { return index_[s.bits()]; }

  /// Indices of the flats covering flats()[index].
  const std::vector<int>& upper_covers(std::size_t index) const { return covers_[index]; }

  /// μ(F, G); zero unless F ⊆ G. Throws kInvalidArgument if F or G is not a flat.
  std::int64_t mobius(SubsetMask f, SubsetMask g) const;

 private:
  struct RowCache;

  int n_ = 0;
  int rank_ = 0;
  std::vector<SubsetMask> flats_;
  std::vector<int> flat_ranks_;
  std::vector<int> index_;
  std::vector<std::vector<int>> covers_;
  std::unique_ptr<RowCache> cache_;
};

FlatLattice flat_lattice(const Matroid& m);

}  // namespace omega
