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

// Counting Ferroni paths: step sequences of length L = n - r - 1 made of
// r - 1 diagonal steps and n - 2r horizontal ones, running from (1/2, 1/2)
// to (n - r - 1/2, r - 1/2).
//
// A constraint at the integer point (x, y) looks at D(x), the number of
// diagonal steps among the first min(x, L) steps:
//   StrictlyBelow  requires D(x) <  y
//   WeaklyAbove    requires D(x) >= y
// Clamping at L amounts to extending each path horizontally past its end.

#include <string_view>
#include <vector>

#include "omega/bigint.hpp"
#include "omega/set_chain.hpp"

namespace omega {

enum class PathMode { kStrictlyBelow, kWeaklyAbove };

std::string_view path_mode_name(PathMode mode);

struct LatticePoint {
  int x = 0;
  int y = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

struct PathConstraint {
  int x = 0;
  int y = 0;
  PathMode mode = PathMode::kStrictlyBelow;
};

struct PathProblem {
  int n = 0;
  int r = 0;
  std::vector<PathConstraint> constraints;
};

/// Shape of the path ensemble for given (n, r).
class PathGeometry {
 public:
  PathGeometry(int n, int r) : n_(n), r_(r), length_(n - r - 1) {}

  int n() const { return n_; }
  int r() const { return r_; }
  /// Number of steps L = n - r - 1.
  int length() const { return length_; }
  int diagonals() const { return r_ - 1; }
  /// False when the ensemble is empty (r = 0 or n < 2r).
  bool nonempty() const { return r_ >= 1 && r_ - 1 <= length_; }
  int clamp(int x) const { return x < length_ ? x : length_; }

  static bool satisfies(PathMode mode, int diagonals_so_far, int y) {
    return mode == PathMode::kStrictlyBelow ? diagonals_so_far < y : diagonals_so_far >= y;
  }

 private:
  int n_;
  int r_;
  int length_;
};

/// Exact number of Ferroni paths meeting every constraint. Zero when r = 0
/// or n < 2r. Throws kConstraintOutOfRange unless 0 <= x <= n - r.
BigInt count_paths(const PathProblem& problem);

/// Points (|S_j| - a_j, a_j) for the members of the chain other than ∅ and E.
std::vector<LatticePoint> verts_of_chain(const SetChain& chain, const std::vector<int>& ranks);

}  // namespace omega
