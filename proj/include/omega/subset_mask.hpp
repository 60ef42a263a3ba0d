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

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace omega {

inline constexpr int kMaxGroundSet = 16;

/// A subset of {0, ..., n-1}; element i is present iff bit i is set.
/// The ground-set size is carried by the owning matroid, not the mask.
class SubsetMask {
 public:
  using Word = std::uint32_t;

  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(Word bits) : bits_(bits) {}

  static constexpr SubsetMask full(int n) {
    return SubsetMask(n >= 32 ? ~Word{0} : ((Word{1} << n) - 1));
  }
  static constexpr SubsetMask singleton(int e) { return SubsetMask(Word{1} << e); }

  constexpr Word bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1u; }
  constexpr bool is_subset_of(SubsetMask other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool is_proper_subset_of(SubsetMask other) const {
    return is_subset_of(other) && bits_ != other.bits_;
  }
  /// Lowest element; undefined on the empty set.
  constexpr int min_element() const { return std::countr_zero(bits_); }

  constexpr SubsetMask with(int e) const { return SubsetMask(bits_ | (Word{1} << e)); }
  constexpr SubsetMask without(int e) const { return SubsetMask(bits_ & ~(Word{1} << e)); }
  constexpr SubsetMask minus(SubsetMask other) const {
    return SubsetMask(bits_ & ~other.bits_);
  }

  friend constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) {
    return SubsetMask(a.bits_ | b.bits_);
  }
  friend constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) {
    return SubsetMask(a.bits_ & b.bits_);
  }
  friend constexpr SubsetMask operator^(SubsetMask a, SubsetMask b) {
    return SubsetMask(a.bits_ ^ b.bits_);
  }
  SubsetMask& operator|=(SubsetMask o) { bits_ |= o.bits_; return *this; }
  SubsetMask& operator&=(SubsetMask o) { bits_ &= o.bits_; return *this; }

  friend constexpr bool operator==(SubsetMask, SubsetMask) = default;
  friend constexpr auto operator<=>(SubsetMask, SubsetMask) = default;

  std::vector<int> elements() const;
  static SubsetMask from_elements(const std::vector<int>& elements);
  /// "{0,2,3}" style rendering for diagnostics.
  std::string to_string() const;

 private:
  Word bits_ = 0;
};

/// Calls f(T) for every T ⊆ s, including ∅ and s itself.
template <class F>
void for_each_subset(SubsetMask s, F&& f) {
  const auto bits = s.bits();
  auto t = bits;
  while (true) {
    f(SubsetMask(t));
    if (t == 0) break;
    t = (t - 1) & bits;
  }
}

/// Calls f(T) for every T with s ⊆ T ⊆ universe.
template <class F>
void for_each_superset(SubsetMask s, SubsetMask universe, F&& f) {
  const SubsetMask free = universe.minus(s);
  for_each_subset(free, [&](SubsetMask extra) { f(s | extra); });
}

template <class F>
void for_each_element(SubsetMask s, F&& f) {
  auto bits = s.bits();
  while (bits != 0) {
    f(std::countr_zero(bits));
    bits &= bits - 1;
  }
}

/// Packs the bits of `value` selected by `selector` into the low bits.
SubsetMask compress(SubsetMask value, SubsetMask selector);
/// Inverse of compress: spreads the low bits of `packed` over `selector`.
SubsetMask expand(SubsetMask packed, SubsetMask selector);

}  // namespace omega
