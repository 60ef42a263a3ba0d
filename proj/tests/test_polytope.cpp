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

#include <doctest.h>

#include <algorithm>

#include "generators.hpp"
#include "omega/bergman.hpp"
#include "omega/errors.hpp"
#include "omega/polytope.hpp"
#include "oracles.hpp"

using namespace omega;

namespace {

RationalPoint point(std::initializer_list<Rational> coords) { return RationalPoint(coords); }

RationalPoint indicator(int n, SubsetMask s) {
  RationalPoint z(n);
  for (int e : s.elements()) z[e] = 1;
  return z;
}

RationalPoint negate(RationalPoint z) {
  for (auto& c : z) c = -c;
  return z;
}

}  // namespace

TEST_CASE("membership examples") {
  const Matroid u12 = uniform(1, 2);
  CHECK(in_base_polytope(u12, point({Rational(1, 2), Rational(1, 2)})));
  CHECK_FALSE(in_base_polytope(u12, point({2, -1})));
  CHECK(in_hypersimplex(1, point({Rational(1, 2), Rational(1, 2)})));
  CHECK_FALSE(in_hypersimplex(1, point({Rational(1, 3), Rational(1, 3)})));

  const SetChain trivial(std::vector<SubsetMask>{SubsetMask(), SubsetMask(0b11)}, 2);
  const auto half = point({Rational(1, 2), Rational(1, 2)});
  CHECK(in_schubert_lower(trivial, {0, 1}, half));
  CHECK(in_schubert_upper(trivial, {0, 1}, half));
  CHECK(in_halfopen(trivial, {0, 1}, half));

  const SetChain chain(std::vector<SubsetMask>{SubsetMask(), SubsetMask(0b01), SubsetMask(0b11)}, 2);
  CHECK(in_halfopen(chain, {0, 0, 1}, half));
  CHECK_FALSE(in_halfopen(chain, {0, 0, 1}, point({0, 1})));
  CHECK(in_schubert_lower(chain, {0, 0, 1}, point({0, 1})));

  bool threw = false;
  try {
    in_schubert_lower(chain, {0, 2, 1}, half);
  } catch (const OmegaError& e) {
    threw = e.code() == ErrorCode::kInvalidProfile;
  }
  CHECK(threw);
}

TEST_CASE("vertices of base polytopes are exactly the bases") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const Matroid m = gen::any_matroid(7, rng);
    for (SubsetMask s : oracle::all_subsets(m.size())) {
      if (s.size() != m.rank()) continue;
      CHECK(in_base_polytope(m, indicator(m.size(), s)) == m.is_basis(s));
    }
  }
}

TEST_CASE("Schubert polytope equals the base polytope of the Schubert matroid") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = gen::uniform_int(rng, 2, 7);
    const int r = gen::uniform_int(rng, 0, n);
    const auto data = random_schubert_data(n, r, rng);
    const Matroid lower = schubert_lower(data.chain, data.a);
    const Matroid upper = schubert_upper(data.chain, data.a);
    for (int k = 0; k < 40; ++k) {
      const auto z = gen::rational_point(n, r, rng);
      CHECK(in_schubert_lower(data.chain, data.a, z) == in_base_polytope(lower, z));
      CHECK(in_schubert_upper(data.chain, data.a, z) == in_base_polytope(upper, z));
    }
  }
}

TEST_CASE("identity checker small cases") {
  const Matroid u12 = uniform(1, 2);
  for (IdentityKind kind : kAllIdentityKinds) {
    CAPTURE(identity_name(kind));
    const auto mid = check_identity(u12, kind, point({Rational(1, 2), Rational(1, 2)}));
    CHECK(mid.lhs == 1);
    CHECK(mid.rhs == 1);
    const auto off = check_identity(u12, kind, point({Rational(1, 2), Rational(1, 3)}));
    CHECK(off.lhs == 0);
    CHECK(off.rhs == 0);
    const auto outside = check_identity(u12, kind, point({2, -1}));
    CHECK(outside.lhs == 0);
    CHECK(outside.rhs == 0);
    CHECK(parse_identity(identity_name(kind)) == kind);
  }
}

TEST_CASE("identities hold at sampled and grid points") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 12; ++trial) {
    const Matroid m = gen::any_matroid(6, rng);
    const IdentityChecker checker(m);
    auto points = sample_points(m, 150, rng);
    const auto grid = grid_points(m.size(), m.rank(), 3);
    points.insert(points.end(), grid.begin(), grid.end());
    for (IdentityKind kind : kAllIdentityKinds) {
      const bool flats = kind == IdentityKind::kOuterFlats || kind == IdentityKind::kInnerFlats;
      if (flats && !loops(m).empty()) continue;
      for (const auto& z : points) {
        const auto v = checker.check(kind, z);
        REQUIRE(v.lhs == v.rhs);
        REQUIRE(v.lhs == (in_base_polytope(m, z) ? 1 : 0));
      }
    }
  }
}

TEST_CASE("sampler covers the vertices and stays on the hyperplane") {
  std::mt19937_64 rng(14);
  const Matroid m = uniform(2, 5);
  const auto points = sample_points(m, 100, rng);
  CHECK(points.size() == 100 + 10);
  for (const auto& z : points) {
    Rational total = 0;
    for (const auto& c : z) total += c;
    CHECK(total == 2);
  }
  CHECK(grid_points(2, 1, 8).size() == 9);
}

TEST_CASE("z-maximal basis, x and y values") {
  const Matroid u23 = uniform(2, 3);
  const auto z = point({3, 2, 1});
  CHECK(z_max_basis(u23, z) == SubsetMask(0b011));
  CHECK(x_values(u23, z) == std::vector<Rational>{3, 2});
  CHECK(y_values(u23, z) == std::vector<Rational>{-1});

  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 200; ++trial) {
    const Matroid m = gen::any_matroid(8, rng);
    const auto w = gen::rational_point(m.size(), m.rank(), rng, true);
    const auto x = x_values(m, w);
    const auto y = y_values(m, w);
    CHECK(x == oracle::x_values(m, w));
    CHECK(y == oracle::y_values(m, w));
    CHECK(std::is_sorted(x.rbegin(), x.rend()));
    CHECK(std::is_sorted(y.rbegin(), y.rend()));

    const auto best = oracle::max_weight_bases(m, w);
    CHECK(std::find(best.begin(), best.end(), z_max_basis(m, w)) != best.end());
    if (loops(m).empty() && m.rank() > 0) {
      CHECK(x.front() == *std::max_element(w.begin(), w.end()));
    }
    CHECK(x_values(dual(m), w) == y_values(m, negate(w)));
  }
}

TEST_CASE("graded matroid") {
  const Matroid u23 = uniform(2, 3);
  const Matroid g = graded_matroid(u23, point({1, 0, 0}));
  CHECK(g.bases() == direct_sum(uniform(1, 1), uniform(1, 2)).bases());
  CHECK(bergman_contains(u23, point({1, 0, 0})));

  const Matroid g2 = graded_matroid(u23, point({2, 1, 0}));
  CHECK(loops(g2) == SubsetMask(0b100));
  CHECK_FALSE(bergman_contains(u23, point({2, 1, 0})));
  CHECK(thickened_bergman_contains(u23, 1, point({2, 1, 0})));

  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    const Matroid m = gen::any_matroid(8, rng);
    const auto w = gen::rational_point(m.size(), m.rank(), rng, true);
    const Matroid gr = graded_matroid(m, w);
    CHECK(gr.bases() == oracle::max_weight_bases(m, w));
    const RationalPoint constant(m.size(), Rational(5, 2));
    CHECK(graded_matroid(m, constant).bases() == m.bases());
    CHECK(bergman_contains(m, constant) == loops(m).empty());
    CHECK(thickened_bergman_contains(m, loops(gr).size(), w));
    if (!loops(gr).empty()) CHECK_FALSE(thickened_bergman_contains(m, loops(gr).size() - 1, w));
  }
}
