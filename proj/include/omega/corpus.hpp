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

// Seeded random matroids: Schubert matroids, and the family obtained from
// them by duals, deletions, contractions, direct sums and parallel
// extensions. Identical seeds give identical corpora.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "omega/matroid.hpp"
#include "omega/spec_io.hpp"

namespace omega {

struct SchubertData {
  SetChain chain;
  std::vector<int> a;
};

/// Chain of k links with k uniform in [1, min(r, n-r) + 1], members being
/// prefixes of a random permutation, and a uniformly drawn valid profile.
SchubertData random_schubert_data(int n, int r, std::mt19937_64& rng);

Json schubert_spec(const SchubertData& data, bool upper = false);

struct CorpusEntry {
  std::string id;
  Json spec;
  Matroid matroid;
};

enum class CorpusFamily { kSchubert, kClosure };

std::optional<CorpusFamily> parse_family(std::string_view name);

/// A random Schubert matroid on n elements of rank r.
CorpusEntry random_schubert(int n, int r, std::mt19937_64& rng, const std::string& id);

/// A random member of the closure family on at most max_n elements
/// (2 <= max_n <= 16): a Schubert matroid, its dual, a minor, a direct sum
/// of two, or a parallel extension.
CorpusEntry random_closure_member(int max_n, std::mt19937_64& rng, const std::string& id);

/// `count` entries with ids "<family>-0000", ... For kSchubert, r < 0 picks
/// a random rank per entry; for kClosure, n is the size cap and r is unused.
std::vector<CorpusEntry> generate_corpus(CorpusFamily family, int n, int r, std::size_t count,
                                         std::uint64_t seed);

}  // namespace omega
