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

#include "omega/matroid.hpp"
#include "omega/polytope.hpp"

namespace omega {

/// Greedy basis maximizing Σ_{b∈B} z(b); ties go to the smaller element.
SubsetMask z_max_basis(const Matroid& m, const RationalPoint& z);

/// x_p(z) = max{ t : rank{e : z(e) >= t} >= p } for p = 1..r.
std::vector<Rational> x_values(const Matroid& m, const RationalPoint& z);

/// y_q(z) = -z(c_q) for q = 1..n-r, where c_1, c_2, ... lists the
/// complement of the z-maximal basis by increasing z.
std::vector<Rational> y_values(const Matroid& m, const RationalPoint& z);

/// ⊕ M|S_i / S_{i-1} over the upper level sets S_1 ⊂ S_2 ⊂ ... of z
/// (equal coordinates share a level). Elements keep their labels.
Matroid graded_matroid(const Matroid& m, const RationalPoint& z);

/// gr^z(M) is loop-free.
bool bergman_contains(const Matroid& m, const RationalPoint& z);

/// gr^z(M) has at most `ell` loops.
bool thickened_bergman_contains(const Matroid& m, int ell, const RationalPoint& z);

}  // namespace omega
