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

#include "omega/flat_lattice.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>
#include <utility>

#include "omega/errors.hpp"

namespace omega {

struct FlatLattice::RowCache {
  using Row = std::vector<std::pair<int, std::int64_t>>;  // sorted by flat index
  std::mutex mutex;
  std::unordered_map<int, Row> rows;
};

FlatLattice::FlatLattice(const Matroid& m)
    : n_(m.size()), rank_(m.rank()), cache_(std::make_unique<RowCache>()) {
  using Word = SubsetMask::Word;
  const Word count = Word{1} << n_;
  for (Word mask = 0; mask < count; ++mask) {
    const SubsetMask s(mask);
    if (m.is_flat(s)) flats_.push_back(s);
  }
  std::stable_sort(flats_.begin(), flats_.end(), [&](SubsetMask a, SubsetMask b) {
    return m.rank(a) < m.rank(b);
  });
  index_.assign(count, -1);
  flat_ranks_.reserve(flats_.size());
  for (std::size_t i = 0; i < flats_.size(); ++i) {
    index_[flats_[i].bits()] = static_cast<int>(i);
    flat_ranks_.push_back(m.rank(flats_[i]));
  }
  covers_.resize(flats_.size());
  for (std::size_t i = 0; i < flats_.size(); ++i) {
    const SubsetMask f = flats_[i];
    auto& up = covers_[i];
    for (int e = 0; e < n_; ++e) {
      if (f.contains(e)) continue;
      const int j = index_[m.closure(f.with(e)).bits()];
      if (std::find(up.begin(), up.end(), j) == up.end()) up.push_back(j);
    }
    std::sort(up.begin(), up.end());
  }
}

FlatLattice::~FlatLattice() = default;
FlatLattice::FlatLattice(FlatLattice&&) noexcept = default;
FlatLattice& FlatLattice::operator=(FlatLattice&&) noexcept = default;

std::vector<SubsetMask> FlatLattice::flats_of_rank(int k) const {
  std::vector<SubsetMask> out;
  for (std::size_t i = 0; i < flats_.size(); ++i) {
    if (flat_ranks_[i] == k) out.push_back(flats_[i]);
  }
  return out;
}

std::int64_t FlatLattice::mobius(SubsetMask f, SubsetMask g) const {
  const int fi = index_of(f);
  const int gi = index_of(g);
  if (fi < 0 || gi < 0) fail(ErrorCode::kInvalidArgument, "mobius arguments must be flats");
  if (!f.is_subset_of(g)) return 0;

  std::lock_guard lock(cache_->mutex);
  auto it = cache_->rows.find(fi);
  if (it == cache_->rows.end()) {
    // Flats are sorted by rank, so every H ⊊ G precedes G in the interval list.
    RowCache::Row row;
    for (std::size_t j = fi; j < flats_.size(); ++j) {
      const SubsetMask upper = flats_[j];
      if (!f.is_subset_of(upper)) continue;
      std::int64_t value = 0;
      if (static_cast<int>(j) == fi) {
        value = 1;
      } else {
        for (const auto& [h, mu] : row) {
          if (flats_[h].is_proper_subset_of(upper)) value -= mu;
        }
      }
      row.emplace_back(static_cast<int>(j), value);
    }
    it = cache_->rows.emplace(fi, std::move(row)).first;
  }
  const auto& row = it->second;
  auto pos = std::lower_bound(row.begin(), row.end(), std::make_pair(gi, std::int64_t{0}),
                              [](const auto& a, const auto& b) { return a.first < b.first; });
  return pos->second;
}

FlatLattice flat_lattice(const Matroid& m) { return FlatLattice(m); }

}  // namespace omega
