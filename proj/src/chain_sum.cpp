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

#include "omega/chain_sum.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <string>

#include "omega/crowding.hpp"
#include "omega/errors.hpp"
#include "omega/ferroni_paths.hpp"
#include "omega/flat_lattice.hpp"

namespace omega {
namespace {

constexpr std::array<std::string_view, 10> kVariantNames = {
    "inward_sets",  "inward_flats", "outward_sets", "outward_flats", "crowded_sets",
    "crowded_flats", "record_sets", "record_flats", "final_sets",    "final_flats",
};

struct Edge {
  bool allowed = false;
  std::int64_t weight = 0;
};

// Everything the evaluators need to know about one variant on one matroid.
// Members other than E are listed by decreasing size, so every strict
// superset of nodes[i] that is a member sits at an index below i.
struct Domain {
  int n = 0;
  int r = 0;
  PathMode mode = PathMode::kWeaklyAbove;
  bool empty = false;
  std::vector<SubsetMask> nodes;
  std::vector<int> index;  // mask bits -> node index, -1 if absent
  std::vector<int> larger;  // number of nodes strictly larger than nodes[i]
  std::vector<int> ranks;
  std::vector<int> coranks;
  std::vector<std::int64_t> start_weight;
  std::vector<std::uint8_t> is_start;
  // to == -1 stands for E.
  std::function<Edge(int from, int to)> edge;
  // Final variants only: the one-member chain (E).
  std::int64_t lone_top_sign = 0;

  template <class F>
  void for_each_above(int i, F&& f) const {
    const SubsetMask s = nodes[i];
    const SubsetMask ground = SubsetMask::full(n);
    const int free = n - s.size();
    if (free < 31 && (std::int64_t{1} << free) <= larger[i]) {
      for_each_superset(s, ground, [&](SubsetMask t) {
        if (t == s || t == ground) return;
        const int j = index[t.bits()];
        if (j >= 0) f(j);
      });
    } else {
      for (int j = 0; j < larger[i]; ++j) {
        if (s.is_subset_of(nodes[j])) f(j);
      }
    }
  }
};

struct Overflow {};

// Checked int64 arithmetic; the evaluator retries in BigInt on overflow.
struct Checked {
  using Num = std::int64_t;
  static Num add(Num a, Num b) {
    Num out;
    if (__builtin_add_overflow(a, b, &out)) throw Overflow{};
    return out;
  }
  static Num mul(Num a, Num b) {
    Num out;
    if (__builtin_mul_overflow(a, b, &out)) throw Overflow{};
    return out;
  }
  static BigInt widen(Num a) { return BigInt(a); }
};

struct Exact {
  using Num = BigInt;
  static Num add(const Num& a, const Num& b) { return a + b; }
  static Num mul(const Num& a, const Num& b) { return a * b; }
  static BigInt widen(const Num& a) { return a; }
};

bool satisfied(const Domain& d, int node, int diagonals) {
  if (d.nodes[node].empty()) return true;
  return PathGeometry::satisfies(d.mode, diagonals, d.ranks[node]);
}

template <class Arith>
ChainSumResult transfer(const Domain& dom) {
  using Num = typename Arith::Num;
  const PathGeometry geometry(dom.n, dom.r);
  const bool paths = geometry.nonempty();
  const int width = paths ? dom.r : 0;  // d = 0 .. r-1
  const int length = geometry.length();

  const int count = static_cast<int>(dom.nodes.size());
  std::vector<int> cx(count);
  for (int i = 0; i < count; ++i) cx[i] = paths ? geometry.clamp(dom.coranks[i]) : 0;

  // lift[i][delta * width + d] = sum over d' of C(delta, d' - d) * ok_i(d') * G_i[d']
  std::vector<std::vector<Num>> lift(count);
  std::vector<Num> chains(count, Num(0));
  Num total(0);
  Num total_chains(0);

  std::vector<Num> g(width);
  for (int i = 0; i < count; ++i) {
    const int top = std::min(cx[i], width - 1);
    std::fill(g.begin(), g.end(), Num(0));
    Num chain_count(0);

    const Edge to_top = dom.edge(i, -1);
    if (to_top.allowed) {
      chain_count = Arith::add(chain_count, Num(1));
      if (paths && to_top.weight != 0) {
        for (int d = 0; d <= top; ++d) {
          g[d] = Arith::mul(Num(to_top.weight), Num(binomial(length - cx[i], dom.r - 1 - d)));
        }
      }
    }
    dom.for_each_above(i, [&](int j) {
      const Edge e = dom.edge(i, j);
      if (!e.allowed) return;
      chain_count = Arith::add(chain_count, chains[j]);
      if (!paths || e.weight == 0) return;
      const int delta = cx[j] - cx[i];
      const Num* row = lift[j].data() + static_cast<std::size_t>(delta) * width;
      for (int d = 0; d <= top; ++d) {
        if (row[d] != 0) g[d] = Arith::add(g[d], Arith::mul(Num(e.weight), row[d]));
      }
    });
    chains[i] = chain_count;

    if (paths) {
      auto& table = lift[i];
      table.assign(static_cast<std::size_t>(cx[i] + 1) * width, Num(0));
      for (int delta = 0; delta <= cx[i]; ++delta) {
        for (int d = 0; d < width; ++d) {
          Num acc(0);
          for (int dp = d; dp <= top && dp - d <= delta; ++dp) {
            if (g[dp] == 0 || !satisfied(dom, i, dp)) continue;
            acc = Arith::add(acc, Arith::mul(Num(binomial(delta, dp - d)), g[dp]));
          }
          table[static_cast<std::size_t>(delta) * width + d] = acc;
        }
      }
    }

    if (dom.is_start[i]) {
      total_chains = Arith::add(total_chains, chain_count);
      if (paths && dom.start_weight[i] != 0) {
        const Num reach = lift[i][static_cast<std::size_t>(cx[i]) * width];
        total = Arith::add(total, Arith::mul(Num(dom.start_weight[i]), reach));
      }
    }
  }

  ChainSumResult out{Arith::widen(total), Arith::widen(total_chains)};
  if (dom.lone_top_sign != 0) {
    out.chains += 1;
    if (paths) out.value += dom.lone_top_sign * binomial(length, dom.r - 1);
  }
  return out;
}

class DepthFirst {
 public:
  explicit DepthFirst(const Domain& dom)
      : dom_(dom), geometry_(dom.n, dom.r), width_(dom.r) {}

  ChainSumResult run() {
    ChainSumResult out{0, 0};
    if (!geometry_.nonempty()) return out;
    for (int i = 0; i < static_cast<int>(dom_.nodes.size()); ++i) {
      if (!dom_.is_start[i] || dom_.start_weight[i] == 0) continue;
      const int cx = clamp(i);
      std::vector<BigInt> ways(width_, 0);
      for (int d = 0; d <= std::min(cx, width_ - 1); ++d) {
        if (satisfied(dom_, i, d)) ways[d] = binomial(cx, d);
      }
      if (all_zero(ways)) continue;
      visit(i, ways, BigInt(dom_.start_weight[i]));
    }
    value_ += dom_.lone_top_sign * binomial(geometry_.length(), dom_.r - 1);
    if (dom_.lone_top_sign != 0) ++chains_;
    out.value = value_;
    out.chains = chains_;
    return out;
  }

 private:
  int clamp(int i) const { return geometry_.clamp(dom_.coranks[i]); }

  static bool all_zero(const std::vector<BigInt>& v) {
    return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
  }

  void visit(int i, const std::vector<BigInt>& ways, const BigInt& weight) {
    if (++visits_ > kDepthFirstBudget) {
      fail(ErrorCode::kInfeasible, "depth-first chain budget exhausted");
    }
    const int cx = clamp(i);
    const Edge to_top = dom_.edge(i, -1);
    if (to_top.allowed && to_top.weight != 0) {
      ++chains_;
      BigInt tails = 0;
      for (int d = 0; d < width_; ++d) {
        if (ways[d] != 0) tails += ways[d] * binomial(geometry_.length() - cx, dom_.r - 1 - d);
      }
      value_ += weight * to_top.weight * tails;
    }
    dom_.for_each_above(i, [&](int j) {
      const Edge e = dom_.edge(i, j);
      if (!e.allowed || e.weight == 0) return;
      const int delta = clamp(j) - cx;
      std::vector<BigInt> next(width_, 0);
      for (int d = 0; d < width_; ++d) {
        if (ways[d] == 0) continue;
        for (int dp = d; dp < width_ && dp - d <= delta; ++dp) {
          next[dp] += ways[d] * binomial(delta, dp - d);
        }
      }
      for (int dp = 0; dp < width_; ++dp) {
        if (!satisfied(dom_, j, dp)) next[dp] = 0;
      }
      if (all_zero(next)) return;
      visit(j, next, weight * e.weight);
    });
  }

  const Domain& dom_;
  PathGeometry geometry_;
  int width_;
  BigInt value_ = 0;
  BigInt chains_ = 0;
  std::uint64_t visits_ = 0;
};

enum class Family { kAll, kCrowded, kRecord, kFinal };

Family family_of(ChainVariant v) {
  switch (v) {
    case ChainVariant::kInwardSets:
    case ChainVariant::kInwardFlats:
    case ChainVariant::kOutwardSets:
    case ChainVariant::kOutwardFlats:
      return Family::kAll;
    case ChainVariant::kCrowdedSets:
    case ChainVariant::kCrowdedFlats:
      return Family::kCrowded;
    case ChainVariant::kRecordSets:
    case ChainVariant::kRecordFlats:
      return Family::kRecord;
    case ChainVariant::kFinalSets:
    case ChainVariant::kFinalFlats:
      return Family::kFinal;
  }
  return Family::kAll;
}

std::int64_t sign_of_parity(int k) { return (k % 2 == 0) ? 1 : -1; }

// Owns the auxiliary structures the edge function refers to.
struct DomainBuild {
  Domain dom;
  std::unique_ptr<FlatLattice> lattice;
  std::vector<SubsetMask> z_parts;
  SubsetMask z_top;
  std::vector<int> stresses;
  int top_stress = 0;
};

std::unique_ptr<DomainBuild> build(const Matroid& m, ChainVariant v) {
  const bool flats = is_flats_variant(v);
  const Family family = family_of(v);
  const int n = m.size();
  const SubsetMask ground = m.ground_set();

  if (flats && !loops(m).empty()) {
    fail(ErrorCode::kVariantInapplicable,
         std::string(variant_name(v)) + " requires a loop-free matroid");
  }
  if (family == Family::kAll && !flats && n > kMaxUnrestrictedSetsSize) {
    fail(ErrorCode::kInfeasible, std::string(variant_name(v)) + " is capped at n <= " +
                                     std::to_string(kMaxUnrestrictedSetsSize));
  }

  auto out = std::make_unique<DomainBuild>();
  Domain& dom = out->dom;
  dom.n = n;
  dom.r = m.rank();
  dom.mode = (v == ChainVariant::kInwardSets || v == ChainVariant::kInwardFlats)
                 ? PathMode::kStrictlyBelow
                 : PathMode::kWeaklyAbove;

  std::vector<SubsetMask> candidates;
  if (flats) {
    out->lattice = std::make_unique<FlatLattice>(m);
    candidates = out->lattice->flats();
  } else {
    for (SubsetMask::Word mask = 0; mask < (SubsetMask::Word{1} << n); ++mask) {
      candidates.emplace_back(mask);
    }
  }

  std::unique_ptr<CrowdingProfile> profile;
  if (family != Family::kAll) profile = std::make_unique<CrowdingProfile>(m);
  if ((family == Family::kRecord || family == Family::kFinal) && !profile->is_record(ground)) {
    dom.empty = true;
    return out;
  }

  for (SubsetMask s : candidates) {
    if (s == ground) continue;
    switch (family) {
      case Family::kAll:
        break;
      case Family::kCrowded:
        if (!profile->is_crowded(s)) continue;
        break;
      case Family::kRecord:
      case Family::kFinal:
        if (!profile->is_record(s)) continue;
        break;
    }
    dom.nodes.push_back(s);
  }
  std::stable_sort(dom.nodes.begin(), dom.nodes.end(),
                   [](SubsetMask a, SubsetMask b) { return a.size() > b.size(); });

  const int count = static_cast<int>(dom.nodes.size());
  dom.index.assign(std::size_t{1} << n, -1);
  dom.larger.resize(count);
  dom.ranks.resize(count);
  dom.coranks.resize(count);
  dom.start_weight.assign(count, 0);
  dom.is_start.assign(count, 0);
  for (int i = 0; i < count; ++i) {
    const SubsetMask s = dom.nodes[i];
    dom.index[s.bits()] = i;
    dom.larger[i] = (i > 0 && dom.nodes[i - 1].size() == s.size()) ? dom.larger[i - 1] : i;
    dom.ranks[i] = m.rank(s);
    dom.coranks[i] = m.corank(s);
  }

  if (family == Family::kFinal) {
    out->stresses.resize(count);
    out->z_parts.resize(count);
    for (int i = 0; i < count; ++i) {
      const SubsetMask s = dom.nodes[i];
      out->stresses[i] = stress(m, s);
      out->z_parts[i] = zy_split(m, s).z_part;
      if (out->stresses[i] == 0) {
        dom.is_start[i] = 1;
        dom.start_weight[i] = -sign_of_parity(component_count(m, s));
      }
    }
    out->top_stress = stress(m, ground);
    out->z_top = zy_split(m, ground).z_part;
    if (out->top_stress == 0) dom.lone_top_sign = sign_of_parity(component_count(m) - 1);

    DomainBuild* b = out.get();
    dom.edge = [b](int from, int to) {
      const int st = to < 0 ? b->top_stress : b->stresses[to];
      const SubsetMask z = to < 0 ? b->z_top : b->z_parts[to];
      if (st <= b->stresses[from] || !z.is_subset_of(b->z_parts[from])) return Edge{};
      return Edge{true, -1};
    };
    return out;
  }

  // Remaining families start at ∅ only.
  const int bottom = dom.index[0];
  if (bottom < 0) {
    dom.empty = true;
    return out;
  }
  dom.is_start[bottom] = 1;
  if (v == ChainVariant::kInwardSets) {
    dom.start_weight[bottom] = sign_of_parity(n);
  } else if (v == ChainVariant::kInwardFlats) {
    dom.start_weight[bottom] = 1;
  } else {
    dom.start_weight[bottom] = -1;
  }

  if (v == ChainVariant::kInwardFlats) {
    DomainBuild* b = out.get();
    dom.edge = [b, ground](int from, int to) {
      const SubsetMask upper = to < 0 ? ground : b->dom.nodes[to];
      return Edge{true, -b->lattice->mobius(b->dom.nodes[from], upper)};
    };
  } else {
    dom.edge = [](int, int) { return Edge{true, -1}; };
  }
  return out;
}

}  // namespace

std::string_view variant_name(ChainVariant v) { return kVariantNames[static_cast<int>(v)]; }

std::optional<ChainVariant> parse_variant(std::string_view name) {
  for (std::size_t i = 0; i < kVariantNames.size(); ++i) {
    if (kVariantNames[i] == name) return static_cast<ChainVariant>(i);
  }
  return std::nullopt;
}

bool is_flats_variant(ChainVariant v) { return static_cast<int>(v) % 2 == 1; }

ChainSumResult chain_sum(const Matroid& m, ChainVariant variant, Evaluator evaluator) {
  const auto built = build(m, variant);
  const Domain& dom = built->dom;
  if (dom.empty) return {0, 0};
  if (evaluator == Evaluator::kDepthFirst) return DepthFirst(dom).run();
  try {
    return transfer<Checked>(dom);
  } catch (const Overflow&) {
    return transfer<Exact>(dom);
  }
}

BigInt omega_chain_sum(const Matroid& m, ChainVariant variant) {
  return chain_sum(m, variant).value;
}

BigInt omega(const Matroid& m, ChainVariant variant) {
  BigInt value = omega_chain_sum(m, variant);
  if (component_count(m) % 2 == 0) value = -value;
  return value;
}

BigInt omega_schubert(const SetChain& chain, const std::vector<int>& a) {
  check_schubert_profile(chain, a);
  PathProblem problem{chain.ground_size(), a.back(), {}};
  for (const LatticePoint& p : verts_of_chain(chain, a)) {
    problem.constraints.push_back({p.x, p.y, PathMode::kStrictlyBelow});
  }
  return count_paths(problem);
}

}  // namespace omega
