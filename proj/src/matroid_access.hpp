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
#include <vector>

#include "omega/matroid.hpp"

namespace omega {

// Library-internal constructor for rank tables derived from an existing
// matroid (minors, duals, sums), which are valid by construction.
struct MatroidAccess {
  static Matroid from_valid_ranks(int n, std::vector<std::uint8_t> ranks) {
    return Matroid(n, std::move(ranks));
  }
};

}  // namespace omega
