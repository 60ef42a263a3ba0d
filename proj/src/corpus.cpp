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

#include "omega/corpus.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include "omega/errors.hpp"

namespace omega {
namespace {

int draw(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random subset of [n] of size k.
SubsetMask random_subset(int n, int k, std::mt19937_64& rng) {
  std::vector<int> elements(n);
  std::iota(elements.begin(), elements.end(), 0);
  std::shuffle(elements.begin(), elements.end(), rng);
  SubsetMask out;
  for (int i = 0; i < k; ++i) out = out.with(elements[i]);
  return out;
}

CorpusEntry schubert_entry(int n, int r, std::mt19937_64& rng, const std::string& id) {
  const bool upper = draw(rng, 0, 1) == 1;
  const SchubertData data = random_schubert_data(n, r, rng);
  Json spec = schubert_spec(data, upper);
  Matroid m = upper ? schubert_upper(data.chain, data.a) : schubert_lower(data.chain, data.a);
  return {id, std::move(spec), std::move(m)};
}

CorpusEntry random_leaf(int n, std::mt19937_64& rng, const std::string& id) {
  return schubert_entry(n, draw(rng, 0, n), rng, id);
}

}  // namespace

SchubertData random_schubert_data(int n, int r, std::mt19937_64& rng) {
  if (n < 1 || n > kMaxGroundSet || r < 0 || r > n) {
    fail(ErrorCode::kInvalidArgument, "random Schubert matroid needs 0 <= r <= n <= 16, n >= 1");
  }
  const int links = std::min(draw(rng, 1, std::min(r, n - r) + 1), n);

  std::vector<int> interior(n - 1);
  std::iota(interior.begin(), interior.end(), 1);
  std::shuffle(interior.begin(), interior.end(), rng);
  std::vector<int> sizes(interior.begin(), interior.begin() + (links - 1));
  sizes.push_back(0);
  sizes.push_back(n);
  std::sort(sizes.begin(), sizes.end());

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<SubsetMask> sets;
  for (int size : sizes) {
    SubsetMask s;
    for (int i = 0; i < size; ++i) s = s.with(perm[i]);
    sets.push_back(s);
  }

  std::vector<int> a{0};
  for (std::size_t i = 1; i + 1 < sizes.size(); ++i) {
    const int lo = std::max(a.back(), r - (n - sizes[i]));
    const int hi = std::min(a.back() + (sizes[i] - sizes[i - 1]), r);
    a.push_back(draw(rng, lo, hi));
  }
  a.push_back(r);
  return {SetChain(std::move(sets), n), std::move(a)};
}

Json schubert_spec(const SchubertData& data, bool upper) {
  Json chain = Json::array();
  for (SubsetMask s : data.chain.sets()) chain.push_back(subset_to_json(s));
  return Json{{"kind", upper ? "schubert_upper" : "schubert_lower"},
              {"n", data.chain.ground_size()},
              {"chain", std::move(chain)},
              {"a", data.a}};
}

std::optional<CorpusFamily> parse_family(std::string_view name) {
  if (name == "schubert") return CorpusFamily::kSchubert;
  if (name == "closure") return CorpusFamily::kClosure;
  return std::nullopt;
}

CorpusEntry random_schubert(int n, int r, std::mt19937_64& rng, const std::string& id) {
  CorpusEntry entry = schubert_entry(n, r, rng, id);
  entry.spec["id"] = id;
  return entry;
}

CorpusEntry random_closure_member(int max_n, std::mt19937_64& rng, const std::string& id) {
  if (max_n < 2 || max_n > kMaxGroundSet) {
    fail(ErrorCode::kInvalidArgument, "closure family needs 2 <= n <= 16");
  }
  CorpusEntry out{id, Json(), uniform(0, 1)};
  switch (draw(rng, 0, 5)) {
    case 0:
      out = random_leaf(draw(rng, 1, max_n), rng, id);
      break;
    case 1: {
      CorpusEntry base = random_leaf(draw(rng, 1, max_n), rng, id);
      out.matroid = dual(base.matroid);
      out.spec = Json{{"kind", "dual"}, {"of", std::move(base.spec)}};
      break;
    }
    case 2:
    case 3: {
      const bool contract = draw(rng, 0, 1) == 1;
      CorpusEntry base = random_leaf(draw(rng, 2, max_n), rng, id);
      const int n0 = base.matroid.size();
      const SubsetMask s = random_subset(n0, draw(rng, 1, std::min(2, n0 - 1)), rng);
      out.matroid = contract ? contraction(base.matroid, s) : deletion(base.matroid, s);
      out.spec = Json{{"kind", contract ? "contract" : "delete"},
                      {"of", std::move(base.spec)},
                      {"set", subset_to_json(s)}};
      break;
    }
    case 4: {
      const int n1 = draw(rng, 1, max_n - 1);
      const int n2 = draw(rng, 1, max_n - n1);
      CorpusEntry a = random_leaf(n1, rng, id);
      CorpusEntry b = random_leaf(n2, rng, id);
      out.matroid = direct_sum(a.matroid, b.matroid);
      out.spec = Json{{"kind", "direct_sum"}, {"parts", Json::array({a.spec, b.spec})}};
      break;
    }
    default: {
      CorpusEntry base = random_leaf(draw(rng, 1, max_n - 1), rng, id);
      out.matroid = add_parallel(base.matroid, draw(rng, 0, base.matroid.size() - 1));
      out.spec = bases_spec(out.matroid);
      break;
    }
  }
  out.id = id;
  out.spec["id"] = id;
  return out;
}

std::vector<CorpusEntry> generate_corpus(CorpusFamily family, int n, int r, std::size_t count,
                                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CorpusEntry> out;
  const char* prefix = family == CorpusFamily::kSchubert ? "schubert" : "closure";
  for (std::size_t i = 0; i < count; ++i) {
    char id[32];
    std::snprintf(id, sizeof id, "%s-%04zu", prefix, i);
    if (family == CorpusFamily::kSchubert) {
      out.push_back(random_schubert(n, r < 0 ? draw(rng, 0, n) : r, rng, id));
    } else {
      out.push_back(random_closure_member(n, rng, id));
    }
  }
  return out;
}

}  // namespace omega
