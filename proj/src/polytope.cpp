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

#include "omega/polytope.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "omega/errors.hpp"
#include "omega/flat_lattice.hpp"

namespace omega {
namespace {

constexpr std::array<std::string_view, 4> kIdentityNames = {"inward_sets", "outward_sets",
                                                            "outer_flats", "inner_flats"};

void check_dimension(int n, const RationalPoint& z) {
  if (static_cast<int>(z.size()) != n) {
    fail(ErrorCode::kInvalidArgument, "point has " + std::to_string(z.size()) +
                                          " coordinates, expected " + std::to_string(n));
  }
}

// sums[S] = Σ_{i∈S} z_i for every S ⊆ [n].
std::vector<Rational> subset_sums(const RationalPoint& z) {
  const std::size_t count = std::size_t{1} << z.size();
  std::vector<Rational> sums(count);
  for (std::size_t mask = 1; mask < count; ++mask) {
    const int low = std::countr_zero(mask);
    sums[mask] = sums[mask & (mask - 1)] + z[low];
  }
  return sums;
}

Rational sum_over(SubsetMask s, const RationalPoint& z) {
  Rational total = 0;
  for_each_element(s, [&](int e) { total += z[e]; });
  return total;
}

enum class Compare { kAtMost, kAtLeast, kAbove };

bool chain_membership(const SetChain& chain, const std::vector<int>& a, const RationalPoint& z,
                      Compare cmp) {
  check_schubert_profile(chain, a);
  check_dimension(chain.ground_size(), z);
  if (!in_hypersimplex(a.back(), z)) return false;
  for (std::size_t i = 1; i + 1 < chain.size(); ++i) {
    const Rational s = sum_over(chain[i], z);
    const bool ok = cmp == Compare::kAtMost   ? s <= a[i]
                    : cmp == Compare::kAtLeast ? s >= a[i]
                                               : s > a[i];
    if (!ok) return false;
  }
  return true;
}

}  // namespace

bool in_hypersimplex(int r, const RationalPoint& z) {
  Rational total = 0;
  for (const Rational& c : z) {
    if (c < 0 || c > 1) return false;
    total += c;
  }
  return total == r;
}

bool in_base_polytope(const Matroid& m, const RationalPoint& z) {
  check_dimension(m.size(), z);
  const auto sums = subset_sums(z);
  const std::size_t full = m.ground_set().bits();
  if (sums[full] != m.rank()) return false;
  for (std::size_t mask = 1; mask < full; ++mask) {
    if (sums[mask] > m.rank(SubsetMask(static_cast<SubsetMask::Word>(mask)))) return false;
  }
  return true;
}

bool in_schubert_lower(const SetChain& chain, const std::vector<int>& a, const RationalPoint& z) {
  return chain_membership(chain, a, z, Compare::kAtMost);
}

bool in_schubert_upper(const SetChain& chain, const std::vector<int>& a, const RationalPoint& z) {
  return chain_membership(chain, a, z, Compare::kAtLeast);
}

bool in_halfopen(const SetChain& chain, const std::vector<int>& a, const RationalPoint& z) {
  return chain_membership(chain, a, z, Compare::kAbove);
}

std::string_view identity_name(IdentityKind kind) {
  return kIdentityNames[static_cast<int>(kind)];
}

std::optional<IdentityKind> parse_identity(std::string_view name) {
  for (std::size_t i = 0; i < kIdentityNames.size(); ++i) {
    if (kIdentityNames[i] == name) return static_cast<IdentityKind>(i);
  }
  return std::nullopt;
}

struct IdentityChecker::Impl {
  Matroid m;
  bool loop_free = false;
  // Flats other than E by decreasing rank, so supersets come first, and for
  // each one the strictly larger flats (index into `flats`, -1 for E) with μ.
  std::vector<SubsetMask> flats;
  std::vector<std::vector<std::pair<int, std::int64_t>>> above;

  explicit Impl(const Matroid& matroid) : m(matroid), loop_free(loops(matroid).empty()) {
    if (!loop_free) return;
    const FlatLattice lattice(m);
    const SubsetMask ground = m.ground_set();
    for (SubsetMask f : lattice.flats()) {
      if (f != ground) flats.push_back(f);
    }
    std::reverse(flats.begin(), flats.end());
    above.resize(flats.size());
    for (std::size_t i = 0; i < flats.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (flats[i].is_proper_subset_of(flats[j])) {
          above[i].emplace_back(static_cast<int>(j), lattice.mobius(flats[i], flats[j]));
        }
      }
      above[i].emplace_back(-1, lattice.mobius(flats[i], ground));
    }
  }

  std::int64_t sets_rhs(IdentityKind kind, const std::vector<Rational>& sums) const {
    const int n = m.size();
    const std::size_t full = m.ground_set().bits();
    const bool inward = kind == IdentityKind::kInwardSets;
    // f[S]: signed number of admissible chains from S up to E.
    std::vector<std::int64_t> f(full + 1, 0);
    for (std::size_t mask = full; mask-- > 0;) {
      const SubsetMask s(static_cast<SubsetMask::Word>(mask));
      if (mask != 0) {
        const bool good = inward ? sums[mask] <= m.rank(s) : sums[mask] > m.rank(s);
        if (!good) continue;
      }
      std::int64_t acc = -1;  // the link S -> E
      for_each_superset(s, m.ground_set(), [&](SubsetMask t) {
        if (t == s || t.bits() == full) return;
        acc -= f[t.bits()];
      });
      f[mask] = acc;
    }
    const std::int64_t start = inward ? ((n % 2 == 0) ? 1 : -1) : -1;
    return start * f[0];
  }

  std::int64_t flats_rhs(IdentityKind kind, const std::vector<Rational>& sums) const {
    if (!loop_free) {
      fail(ErrorCode::kVariantInapplicable,
           std::string(identity_name(kind)) + " requires a loop-free matroid");
    }
    const bool inner = kind == IdentityKind::kInnerFlats;
    std::vector<std::int64_t> f(flats.size(), 0);
    std::vector<std::uint8_t> good(flats.size(), 0);
    for (std::size_t i = 0; i < flats.size(); ++i) {
      const SubsetMask s = flats[i];
      if (!s.empty()) {
        const bool ok = inner ? sums[s.bits()] <= m.rank(s) : sums[s.bits()] > m.rank(s);
        if (!ok) continue;
      }
      good[i] = 1;
      std::int64_t acc = 0;
      for (const auto& [j, mu] : above[i]) {
        const std::int64_t link = inner ? -mu : -1;
        if (j < 0) {
          acc += link;
        } else if (good[j]) {
          acc += link * f[j];
        }
      }
      f[i] = acc;
    }
    // ∅ is the last flat; for outer flats the start carries the extra -1.
    return inner ? f.back() : -f.back();
  }
};

IdentityChecker::IdentityChecker(const Matroid& m) : impl_(std::make_unique<Impl>(m)) {}
IdentityChecker::~IdentityChecker() = default;
IdentityChecker::IdentityChecker(IdentityChecker&&) noexcept = default;
IdentityChecker& IdentityChecker::operator=(IdentityChecker&&) noexcept = default;

IdentityValues IdentityChecker::check(IdentityKind kind, const RationalPoint& z) const {
  const Matroid& m = impl_->m;
  check_dimension(m.size(), z);
  if ((kind == IdentityKind::kOuterFlats || kind == IdentityKind::kInnerFlats) &&
      !impl_->loop_free) {
    fail(ErrorCode::kVariantInapplicable,
         std::string(identity_name(kind)) + " requires a loop-free matroid");
  }
  IdentityValues out;
  if (!in_hypersimplex(m.rank(), z)) {
    out.lhs = in_base_polytope(m, z) ? 1 : 0;
    return out;
  }
  const auto sums = subset_sums(z);
  out.lhs = in_base_polytope(m, z) ? 1 : 0;
  switch (kind) {
    case IdentityKind::kInwardSets:
    case IdentityKind::kOutwardSets:
      out.rhs = impl_->sets_rhs(kind, sums);
      break;
    case IdentityKind::kOuterFlats:
    case IdentityKind::kInnerFlats:
      out.rhs = impl_->flats_rhs(kind, sums);
      break;
  }
  return out;
}

IdentityValues check_identity(const Matroid& m, IdentityKind kind, const RationalPoint& z) {
  return IdentityChecker(m).check(kind, z);
}

namespace {

RationalPoint indicator(SubsetMask s, int n) {
  RationalPoint z(n, Rational(0));
  for_each_element(s, [&](int e) { z[e] = 1; });
  return z;
}

SubsetMask random_r_subset(int n, int r, std::mt19937_64& rng) {
  std::vector<int> elements(n);
  for (int i = 0; i < n; ++i) elements[i] = i;
  std::shuffle(elements.begin(), elements.end(), rng);
  SubsetMask out;
  for (int i = 0; i < r; ++i) out = out.with(elements[i]);
  return out;
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Convex combination with weights k_j / q, Σ k_j = q.
RationalPoint combine(const std::vector<SubsetMask>& vertices, int n, int q,
                      std::mt19937_64& rng) {
  std::vector<int> cuts;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) cuts.push_back(uniform_int(rng, 0, q));
  cuts.push_back(0);
  cuts.push_back(q);
  std::sort(cuts.begin(), cuts.end());
  RationalPoint z(n, Rational(0));
  for (std::size_t j = 0; j < vertices.size(); ++j) {
    const Rational w(cuts[j + 1] - cuts[j], q);
    for_each_element(vertices[j], [&](int e) { z[e] += w; });
  }
  return z;
}

}  // namespace

std::vector<RationalPoint> sample_points(const Matroid& m, std::size_t count, std::mt19937_64& rng,
                                         int max_denominator) {
  const int n = m.size();
  const int r = m.rank();
  std::vector<RationalPoint> out;
  for (SubsetMask::Word mask = 0; mask < (SubsetMask::Word{1} << n); ++mask) {
    const SubsetMask s(mask);
    if (s.size() == r) out.push_back(indicator(s, n));
  }
  const auto& bases = m.bases();
  auto random_basis = [&] {
    return bases[std::uniform_int_distribution<std::size_t>(0, bases.size() - 1)(rng)];
  };
  for (std::size_t i = 0; i < count; ++i) {
    const int q = uniform_int(rng, 1, max_denominator);
    RationalPoint z;
    switch (uniform_int(rng, 0, 4)) {
      case 0: {
        std::vector<SubsetMask> vs(uniform_int(rng, 2, 4));
        for (auto& v : vs) v = random_r_subset(n, r, rng);
        z = combine(vs, n, q, rng);
        break;
      }
      case 1: {
        std::vector<SubsetMask> vs(uniform_int(rng, 2, 3));
        for (auto& v : vs) v = random_basis();
        z = combine(vs, n, q, rng);
        break;
      }
      case 2: {
        // Midpoint of a basis and an arbitrary vertex.
        const SubsetMask a = random_basis();
        const SubsetMask b = random_r_subset(n, r, rng);
        z.assign(n, Rational(0));
        for_each_element(a, [&](int e) { z[e] += Rational(1, 2); });
        for_each_element(b, [&](int e) { z[e] += Rational(1, 2); });
        break;
      }
      case 3: {
        // Nudge a facet point: move 1/(4·max_denominator) between two coordinates.
        z = combine({random_basis(), random_basis()}, n, q, rng);
        if (n >= 2) {
          const int from = uniform_int(rng, 0, n - 1);
          int to = uniform_int(rng, 0, n - 2);
          if (to >= from) ++to;
          const Rational eps(1, 4 * max_denominator);
          z[from] -= eps;
          z[to] += eps;
        }
        break;
      }
      default: {
        // Lattice point of the hyperplane with coordinates k/q; may leave the box.
        z.assign(n, Rational(0));
        Rational total = 0;
        for (int e = 0; e + 1 < n; ++e) {
          z[e] = Rational(uniform_int(rng, 0, q), q);
          total += z[e];
        }
        z[n - 1] = Rational(r) - total;
        break;
      }
    }
    out.push_back(std::move(z));
  }
  return out;
}

std::vector<RationalPoint> grid_points(int n, int r, int d) {
  if (n < 1 || d < 1) fail(ErrorCode::kInvalidArgument, "grid needs n >= 1 and d >= 1");
  std::vector<RationalPoint> out;
  std::vector<int> k(n, 0);
  while (true) {
    int total = 0;
    for (int v : k) total += v;
    if (total == r * d) {
      RationalPoint z(n);
      for (int i = 0; i < n; ++i) z[i] = Rational(k[i], d);
      out.push_back(std::move(z));
    }
    int i = 0;
    while (i < n && k[i] == d) k[i++] = 0;
    if (i == n) break;
    ++k[i];
  }
  return out;
}

}  // namespace omega
