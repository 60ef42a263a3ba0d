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

#include "omega/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "matroid_access.hpp"
#include "omega/errors.hpp"

namespace omega {
namespace {

using Word = SubsetMask::Word;

void check_ground_size(int n) {
  if (n <= 0) fail(ErrorCode::kEmptyGroundSet, "ground set must be nonempty");
  if (n > kMaxGroundSet) {
    fail(ErrorCode::kGroundSetTooLarge,
         "n = " + std::to_string(n) + " exceeds the cap of " + std::to_string(kMaxGroundSet));
  }
}

// rank(S) = max over listed bases B of |B ∩ S|, via the independence
// downset: S is independent iff it lies inside some basis.
std::vector<std::uint8_t> ranks_from_bases(int n, const std::vector<SubsetMask>& bases) {
  const Word count = Word{1} << n;
  std::vector<std::uint8_t> independent(count, 0);
  for (SubsetMask b : bases) independent[b.bits()] = 1;
  for (Word mask = count; mask-- > 0;) {
    if (independent[mask]) continue;
    for (int e = 0; e < n; ++e) {
      const Word bit = Word{1} << e;
      if (!(mask & bit) && independent[mask | bit]) {
        independent[mask] = 1;
        break;
      }
    }
  }
  std::vector<std::uint8_t> ranks(count, 0);
  for (Word mask = 1; mask < count; ++mask) {
    if (independent[mask]) {
      ranks[mask] = static_cast<std::uint8_t>(std::popcount(mask));
      continue;
    }
    std::uint8_t best = 0;
    for (Word rest = mask; rest != 0; rest &= rest - 1) {
      const Word bit = rest & (~rest + 1);
      best = std::max(best, ranks[mask ^ bit]);
    }
    ranks[mask] = best;
  }
  return ranks;
}

// Returns an empty string when the table is a matroid rank function,
// otherwise a description of the first violation found.
std::string rank_table_violation(int n, const std::vector<std::uint8_t>& ranks) {
  const Word count = Word{1} << n;
  if (ranks.size() != count) return "rank table has the wrong size";
  if (ranks[0] != 0) return "rank of the empty set is nonzero";
  for (Word s = 0; s < count; ++s) {
    for (int e = 0; e < n; ++e) {
      const Word be = Word{1} << e;
      if (s & be) continue;
      const int step = ranks[s | be] - ranks[s];
      if (step != 0 && step != 1) {
        return "rank increment outside {0,1} at " + SubsetMask(s).to_string() + "+" +
               std::to_string(e);
      }
      for (int f = e + 1; f < n; ++f) {
        const Word bf = Word{1} << f;
        if (s & bf) continue;
        if (ranks[s | be] + ranks[s | bf] < ranks[s | be | bf] + ranks[s]) {
          return "submodularity fails at S=" + SubsetMask(s).to_string() + ", e=" +
                 std::to_string(e) + ", f=" + std::to_string(f);
        }
      }
    }
  }
  return {};
}

}  // namespace

SetChain::SetChain(std::vector<SubsetMask> sets, int n) : sets_(std::move(sets)), n_(n) {
  check_ground_size(n);
  const SubsetMask ground = SubsetMask::full(n);
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (!sets_[i].is_subset_of(ground)) {
      fail(ErrorCode::kInvalidArgument, "chain member outside the ground set");
    }
    if (i > 0 && !sets_[i - 1].is_proper_subset_of(sets_[i])) {
      fail(ErrorCode::kInvalidArgument, "chain members must be strictly nested");
    }
  }
  includes_bottom_ = !sets_.empty() && sets_.front().empty();
  includes_top_ = !sets_.empty() && sets_.back() == ground;
}

SetChain SetChain::initial_segments(const std::vector<int>& sizes, int n) {
  std::vector<SubsetMask> sets;
  sets.reserve(sizes.size());
  for (int s : sizes) {
    if (s < 0 || s > n) fail(ErrorCode::kInvalidArgument, "segment size out of range");
    sets.push_back(SubsetMask::full(s));
  }
  return SetChain(std::move(sets), n);
}

Matroid::Matroid(int n, std::vector<std::uint8_t> ranks) : n_(n), ranks_(std::move(ranks)) {
  const Word count = Word{1} << n;
  r_ = ranks_[count - 1];
  for (Word mask = 0; mask < count; ++mask) {
    if (std::popcount(mask) == r_ && ranks_[mask] == r_) bases_.emplace_back(mask);
  }
}

Matroid Matroid::from_bases(int n, std::vector<SubsetMask> bases) {
  check_ground_size(n);
  if (bases.empty()) fail(ErrorCode::kInvalidArgument, "basis list is empty");
  const SubsetMask ground = SubsetMask::full(n);
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  const int r = bases.front().size();
  for (SubsetMask b : bases) {
    if (!b.is_subset_of(ground)) {
      fail(ErrorCode::kInvalidArgument, "basis " + b.to_string() + " leaves the ground set");
    }
    if (b.size() != r) fail(ErrorCode::kNotAMatroid, "bases have different cardinalities");
  }
  // The family is a basis system exactly when S -> max |B ∩ S| is submodular;
  // the local test costs O(2^n n^2) regardless of how many bases there are.
  auto ranks = ranks_from_bases(n, bases);
  if (auto why = rank_table_violation(n, ranks); !why.empty()) {
    fail(ErrorCode::kNotAMatroid, "basis exchange fails: " + why);
  }
  return Matroid(n, std::move(ranks));
}

Matroid Matroid::from_rank_table(int n, std::vector<std::uint8_t> ranks) {
  check_ground_size(n);
  if (auto why = rank_table_violation(n, ranks); !why.empty()) {
    fail(ErrorCode::kNotAMatroid, why);
  }
  return Matroid(n, std::move(ranks));
}

SubsetMask Matroid::closure(SubsetMask s) const {
  const int base = rank(s);
  SubsetMask out = s;
  for (int e = 0; e < n_; ++e) {
    if (!s.contains(e) && rank(s.with(e)) == base) out = out.with(e);
  }
  return out;
}

Matroid uniform(int r, int n) {
  check_ground_size(n);
  if (r < 0 || r > n) {
    fail(ErrorCode::kInvalidRank,
         "rank " + std::to_string(r) + " invalid for n = " + std::to_string(n));
  }
  const Word count = Word{1} << n;
  std::vector<std::uint8_t> ranks(count);
  for (Word mask = 0; mask < count; ++mask) {
    ranks[mask] = static_cast<std::uint8_t>(std::min(std::popcount(mask), r));
  }
  return MatroidAccess::from_valid_ranks(n, std::move(ranks));
}

void check_schubert_profile(const SetChain& chain, const std::vector<int>& a) {
  if (!chain.includes_bottom() || !chain.includes_top()) {
    fail(ErrorCode::kInvalidProfile, "Schubert chain must run from the empty set to E");
  }
  if (a.size() != chain.size()) {
    fail(ErrorCode::kInvalidProfile, "profile length differs from chain length");
  }
  if (a.front() != 0) fail(ErrorCode::kInvalidProfile, "profile must start at 0");
  for (std::size_t i = 1; i < a.size(); ++i) {
    const int gap = chain[i].minus(chain[i - 1]).size();
    if (a[i] < a[i - 1] || a[i] > a[i - 1] + gap) {
      fail(ErrorCode::kInvalidProfile,
           "profile entry a_" + std::to_string(i) + " = " + std::to_string(a[i]) +
               " violates a_{i-1} <= a_i <= a_{i-1} + |S_i \\ S_{i-1}|");
    }
  }
}

Matroid schubert_lower(const SetChain& chain, const std::vector<int>& a) {
  check_schubert_profile(chain, a);
  const int n = chain.ground_size();
  const int r = a.back();
  std::vector<SubsetMask> bases;
  const Word count = Word{1} << n;
  for (Word mask = 0; mask < count; ++mask) {
    if (std::popcount(mask) != r) continue;
    const SubsetMask b(mask);
    bool ok = true;
    for (std::size_t i = 1; i + 1 < chain.size() && ok; ++i) {
      ok = (b & chain[i]).size() <= a[i];
    }
    if (ok) bases.push_back(b);
  }
  return MatroidAccess::from_valid_ranks(n, ranks_from_bases(n, bases));
}

Matroid schubert_upper(const SetChain& chain, const std::vector<int>& a) {
  check_schubert_profile(chain, a);
  const int n = chain.ground_size();
  const int k = chain.length();
  const int r = a.back();
  const SubsetMask ground = SubsetMask::full(n);
  std::vector<SubsetMask> sets(chain.size());
  std::vector<int> profile(chain.size());
  for (int i = 0; i <= k; ++i) {
    sets[i] = ground.minus(chain[k - i]);
    profile[i] = r - a[k - i];
  }
  return schubert_lower(SetChain(std::move(sets), n), profile);
}

Matroid schubert_from_order(int n, const std::vector<int>& order, SubsetMask a) {
  check_ground_size(n);
  if (static_cast<int>(order.size()) != n) {
    fail(ErrorCode::kInvalidArgument, "order must list every element exactly once");
  }
  std::vector<int> position(n, -1);
  for (int i = 0; i < n; ++i) {
    const int e = order[i];
    if (e < 0 || e >= n || position[e] != -1) {
      fail(ErrorCode::kInvalidArgument, "order is not a permutation of the ground set");
    }
    position[e] = i;
  }
  if (!a.is_subset_of(SubsetMask::full(n))) {
    fail(ErrorCode::kInvalidArgument, "A leaves the ground set");
  }
  auto sorted_positions = [&](SubsetMask s) {
    std::vector<int> pos;
    for_each_element(s, [&](int e) { pos.push_back(position[e]); });
    std::sort(pos.begin(), pos.end());
    return pos;
  };
  const auto threshold = sorted_positions(a);
  const int r = a.size();
  std::vector<SubsetMask> bases;
  const Word count = Word{1} << n;
  for (Word mask = 0; mask < count; ++mask) {
    if (std::popcount(mask) != r) continue;
    const auto pos = sorted_positions(SubsetMask(mask));
    if (std::equal(pos.begin(), pos.end(), threshold.begin(),
                   [](int b, int t) { return b >= t; })) {
      bases.emplace_back(mask);
    }
  }
  return MatroidAccess::from_valid_ranks(n, ranks_from_bases(n, bases));
}

Matroid dual(const Matroid& m) {
  const int n = m.size();
  const SubsetMask ground = m.ground_set();
  const Word count = Word{1} << n;
  std::vector<std::uint8_t> ranks(count);
  for (Word mask = 0; mask < count; ++mask) {
    const SubsetMask s(mask);
    ranks[mask] = static_cast<std::uint8_t>(s.size() - m.rank() + m.rank(ground.minus(s)));
  }
  return MatroidAccess::from_valid_ranks(n, std::move(ranks));
}

namespace {

SubsetMask checked_subset(const Matroid& m, SubsetMask s) {
  if (!s.is_subset_of(m.ground_set())) {
    fail(ErrorCode::kInvalidArgument, "set " + s.to_string() + " leaves the ground set");
  }
  return s;
}

}  // namespace

Matroid contraction(const Matroid& m, SubsetMask s) {
  checked_subset(m, s);
  const SubsetMask keep = m.ground_set().minus(s);
  const int n = keep.size();
  if (n == 0) fail(ErrorCode::kEmptyGroundSet, "contracting every element");
  const int base = m.rank(s);
  const Word count = Word{1} << n;
  std::vector<std::uint8_t> ranks(count);
  for (Word mask = 0; mask < count; ++mask) {
    ranks[mask] = static_cast<std::uint8_t>(m.rank(expand(SubsetMask(mask), keep) | s) - base);
  }
  return MatroidAccess::from_valid_ranks(n, std::move(ranks));
}

Matroid deletion(const Matroid& m, SubsetMask s) {
  checked_subset(m, s);
  const SubsetMask keep = m.ground_set().minus(s);
  const int n = keep.size();
  if (n == 0) fail(ErrorCode::kEmptyGroundSet, "deleting every element");
  const Word count = Word{1} << n;
  std::vector<std::uint8_t> ranks(count);
  for (Word mask = 0; mask < count; ++mask) {
    ranks[mask] = static_cast<std::uint8_t>(m.rank(expand(SubsetMask(mask), keep)));
  }
  return MatroidAccess::from_valid_ranks(n, std::move(ranks));
}

Matroid restriction(const Matroid& m, SubsetMask s) {
  checked_subset(m, s);
  return deletion(m, m.ground_set().minus(s));
}

Matroid direct_sum(const Matroid& first, const Matroid& second) {
  const int n1 = first.size();
  const int n = n1 + second.size();
  check_ground_size(n);
  const Word count = Word{1} << n;
  const Word low = SubsetMask::full(n1).bits();
  std::vector<std::uint8_t> ranks(count);
  for (Word mask = 0; mask < count; ++mask) {
    ranks[mask] = static_cast<std::uint8_t>(first.rank(SubsetMask(mask & low)) +
                                            second.rank(SubsetMask(mask >> n1)));
  }
  return MatroidAccess::from_valid_ranks(n, std::move(ranks));
}

Matroid add_parallel(const Matroid& m, int element) {
  if (element < 0 || element >= m.size()) {
    fail(ErrorCode::kInvalidArgument, "parallel target out of range");
  }
  const int n = m.size() + 1;
  check_ground_size(n);
  const int fresh = n - 1;
  const Word count = Word{1} << n;
  std::vector<std::uint8_t> ranks(count);
  for (Word mask = 0; mask < count; ++mask) {
    SubsetMask s(mask);
    if (s.contains(fresh)) s = s.without(fresh).with(element);
    ranks[mask] = static_cast<std::uint8_t>(m.rank(s));
  }
  return MatroidAccess::from_valid_ranks(n, std::move(ranks));
}

Simplification simplify(const Matroid& m) {
  if (!loops(m).empty()) fail(ErrorCode::kLoopsPresent, "simplify requires a loopless matroid");
  const int n = m.size();
  std::vector<int> representative(n, -1);
  std::vector<int> kept;
  std::vector<int> multiplicity;
  SubsetMask keep;
  for (int e = 0; e < n; ++e) {
    if (representative[e] != -1) continue;
    representative[e] = e;
    int size = 1;
    for (int f = e + 1; f < n; ++f) {
      if (representative[f] == -1 && m.rank(SubsetMask::singleton(e).with(f)) == 1) {
        representative[f] = e;
        ++size;
      }
    }
    kept.push_back(e);
    multiplicity.push_back(size);
    keep = keep.with(e);
  }
  return Simplification{restriction(m, keep), std::move(kept), std::move(multiplicity)};
}

SubsetMask loops(const Matroid& m) {
  SubsetMask out;
  for (int e = 0; e < m.size(); ++e) {
    if (m.rank(SubsetMask::singleton(e)) == 0) out = out.with(e);
  }
  return out;
}

SubsetMask coloops(const Matroid& m) {
  SubsetMask out;
  const SubsetMask ground = m.ground_set();
  for (int e = 0; e < m.size(); ++e) {
    if (m.rank(ground.without(e)) < m.rank()) out = out.with(e);
  }
  return out;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

std::vector<SubsetMask> groups(UnionFind& uf, SubsetMask support, int n) {
  std::vector<SubsetMask> by_root(n);
  for_each_element(support, [&](int e) { by_root[uf.find(e)] = by_root[uf.find(e)].with(e); });
  std::vector<SubsetMask> out;
  for (SubsetMask g : by_root) {
    if (!g.empty()) out.push_back(g);
  }
  std::sort(out.begin(), out.end(),
            [](SubsetMask a, SubsetMask b) { return a.min_element() < b.min_element(); });
  return out;
}

}  // namespace

std::vector<SubsetMask> connected_components(const Matroid& m) {
  const int n = m.size();
  UnionFind uf(n);
  const SubsetMask ground = m.ground_set();
  for (SubsetMask b : m.bases()) {
    const SubsetMask outside = ground.minus(b);
    for_each_element(b, [&](int e) {
      for_each_element(outside, [&](int f) {
        if (m.is_basis(b.without(e).with(f))) uf.unite(e, f);
      });
    });
  }
  return groups(uf, ground, n);
}

int component_count(const Matroid& m) {
  return static_cast<int>(connected_components(m).size());
}

std::vector<SubsetMask> restriction_components(const Matroid& m, SubsetMask s) {
  checked_subset(m, s);
  const int n = m.size();
  SubsetMask basis;
  for_each_element(s, [&](int e) {
    if (m.rank(basis.with(e)) > basis.size()) basis = basis.with(e);
  });
  UnionFind uf(n);
  const int r = basis.size();
  for_each_element(s.minus(basis), [&](int f) {
    for_each_element(basis, [&](int b) {
      if (m.rank(basis.without(b).with(f)) == r) uf.unite(f, b);
    });
  });
  return groups(uf, s, n);
}

int component_count(const Matroid& m, SubsetMask s) {
  return static_cast<int>(restriction_components(m, s).size());
}

}  // namespace omega
