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

// omega compute | check-identities | random | bench

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "omega/chain_sum.hpp"
#include "omega/corpus.hpp"
#include "omega/errors.hpp"
#include "omega/omega.hpp"
#include "omega/polytope.hpp"
#include "omega/spec_io.hpp"

namespace {

using namespace omega;

constexpr int kExitOk = 0;
constexpr int kExitDisagree = 1;
constexpr int kExitParse = 2;
constexpr int kExitInfeasible = 3;

struct RunConfig {
  std::vector<std::string> inputs;
  std::string method = "auto";
  std::size_t samples = 500;
  std::uint64_t seed = 42;
  unsigned jobs = 1;
  std::string format = "json";
  std::string out;
  bool timings = false;
  std::string evaluator = "transfer";

  // check-identities
  std::string points;
  int grid = 0;
  int max_denominator = 64;

  // random
  std::string family = "schubert";
  int n = 9;
  int r = -1;
  std::size_t count = 10;
};

// Runs task(i) for i in [0, count) on `jobs` threads. Callers write into
// per-index slots, so output order never depends on scheduling.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& task) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          task(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

Json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return Json(v.convert_to<std::int64_t>());
  }
  return Json(v.str());
}

std::string big_or_dash(const std::optional<BigInt>& v) { return v ? v->str() : "-"; }

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) fail(ErrorCode::kParseError, "cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<MatroidSpec> load_inputs(const RunConfig& config) {
  std::vector<MatroidSpec> all;
  for (const auto& path : config.inputs) {
    auto specs = load_matroid_specs(path);
    for (auto& s : specs) all.push_back(std::move(s));
  }
  return all;
}

Evaluator parse_evaluator(const std::string& name) {
  if (name == "transfer") return Evaluator::kTransfer;
  if (name == "dfs") return Evaluator::kDepthFirst;
  fail(ErrorCode::kParseError, "unknown evaluator \"" + name + "\"");
}

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()));
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

int cmd_compute(const RunConfig& config) {
  const auto selector = MethodSelector::parse(config.method);
  if (!selector) fail(ErrorCode::kParseError, "unknown method \"" + config.method + "\"");
  ReportOptions options;
  options.evaluator = parse_evaluator(config.evaluator);
  const auto specs = load_inputs(config);

  std::vector<OmegaReport> reports(specs.size());
  parallel_for(specs.size(), config.jobs, [&](std::size_t i) {
    reports[i] = omega_report(specs[i].matroid, *selector, specs[i].id, options);
  });

  Output output(config.out);
  std::ostream& out = output.stream();
  bool disagree = false;
  bool infeasible = false;
  std::vector<std::vector<std::string>> rows{{"id", "n", "r", "method", "omega", "chains", "note"}};
  if (config.timings) rows.front().push_back("seconds");

  for (const auto& report : reports) {
    disagree |= !report.agreement;
    for (const auto& m : report.methods) {
      infeasible |= m.infeasible;
      if (config.format == "table") {
        rows.push_back({report.id, std::to_string(report.n), std::to_string(report.r), m.method,
                        big_or_dash(m.value), m.chains.str(), m.note});
        if (config.timings) rows.back().push_back(std::to_string(m.seconds));
        continue;
      }
      Json rec{{"id", report.id},           {"n", report.n},
               {"r", report.r},             {"method", m.method},
               {"value", m.value ? big_to_json(*m.value) : Json(nullptr)},
               {"chains", big_to_json(m.chains)},
               {"infeasible", m.infeasible},
               {"consensus", report.consensus ? big_to_json(*report.consensus) : Json(nullptr)},
               {"agreement", report.agreement}};
      if (!m.note.empty()) rec["note"] = m.note;
      if (!report.note.empty()) rec["report_note"] = report.note;
      if (config.timings) rec["seconds"] = m.seconds;
      out << rec.dump() << '\n';
    }
    if (config.format == "table") {
      rows.push_back({report.id, "", "", "=> consensus", big_or_dash(report.consensus), "",
                      report.agreement ? report.note : "DISAGREE"});
    }
  }
  if (config.format == "table") print_table(out, rows);
  if (disagree) return kExitDisagree;
  if (infeasible) return kExitInfeasible;
  return kExitOk;
}

int cmd_check_identities(const RunConfig& config) {
  const auto specs = load_inputs(config);
  std::vector<RationalPoint> fixed;
  if (!config.points.empty()) fixed = load_points(config.points);

  struct KindSummary {
    std::string kind;
    std::size_t points = 0;
    std::size_t failures = 0;
    std::string note;
  };
  struct Failure {
    std::string kind;
    RationalPoint z;
    IdentityValues values;
  };
  struct MatroidResult {
    std::vector<KindSummary> kinds;
    std::vector<Failure> failures;
  };
  std::vector<MatroidResult> results(specs.size());

  for (std::size_t i = 0; i < specs.size(); ++i) {
    const Matroid& m = specs[i].matroid;
    std::vector<RationalPoint> points = fixed;
    for (const auto& z : points) {
      if (static_cast<int>(z.size()) != m.size()) {
        fail(ErrorCode::kParseError, "point of dimension " + std::to_string(z.size()) +
                                         " for matroid " + specs[i].id + " on " +
                                         std::to_string(m.size()) + " elements");
      }
    }
    if (config.points.empty()) {
      // One stream per matroid so results do not depend on input order.
      std::mt19937_64 rng(config.seed + i);
      points = sample_points(m, config.samples, rng, config.max_denominator);
    }
    if (config.grid > 0) {
      auto grid = grid_points(m.size(), m.rank(), config.grid);
      points.insert(points.end(), grid.begin(), grid.end());
    }

    const IdentityChecker checker(m);
    const bool has_loops = !loops(m).empty();
    for (IdentityKind kind : kAllIdentityKinds) {
      KindSummary summary{std::string(identity_name(kind)), points.size(), 0, ""};
      if (has_loops && (kind == IdentityKind::kOuterFlats || kind == IdentityKind::kInnerFlats)) {
        summary.points = 0;
        summary.note = "skipped: flats identities need a loop-free matroid";
        results[i].kinds.push_back(summary);
        continue;
      }
      std::vector<IdentityValues> values(points.size());
      parallel_for(points.size(), config.jobs,
                   [&](std::size_t p) { values[p] = checker.check(kind, points[p]); });
      for (std::size_t p = 0; p < points.size(); ++p) {
        if (values[p].lhs == values[p].rhs) continue;
        ++summary.failures;
        results[i].failures.push_back({summary.kind, points[p], values[p]});
      }
      results[i].kinds.push_back(summary);
    }
  }

  Output output(config.out);
  std::ostream& out = output.stream();
  std::size_t total_failures = 0;
  std::vector<std::vector<std::string>> rows{{"id", "n", "r", "identity", "points", "failures", "note"}};
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const Matroid& m = specs[i].matroid;
    for (const auto& k : results[i].kinds) {
      total_failures += k.failures;
      if (config.format == "table") {
        rows.push_back({specs[i].id, std::to_string(m.size()), std::to_string(m.rank()), k.kind,
                        std::to_string(k.points), std::to_string(k.failures), k.note});
        continue;
      }
      Json rec{{"id", specs[i].id}, {"n", m.size()},          {"r", m.rank()},
               {"identity", k.kind}, {"points", k.points}, {"failures", k.failures}};
      if (!k.note.empty()) rec["note"] = k.note;
      out << rec.dump() << '\n';
    }
    for (const auto& f : results[i].failures) {
      Json rec{{"id", specs[i].id},
               {"identity", f.kind},
               {"failure", true},
               {"z", point_to_json(f.z)},
               {"lhs", f.values.lhs},
               {"rhs", f.values.rhs},
               {"seed", config.seed + i}};
      if (config.format == "table") {
        std::cerr << rec.dump() << '\n';
      } else {
        out << rec.dump() << '\n';
      }
    }
  }
  if (config.format == "table") print_table(out, rows);
  return total_failures == 0 ? kExitOk : kExitDisagree;
}

int cmd_random(const RunConfig& config) {
  const auto family = parse_family(config.family);
  if (!family) fail(ErrorCode::kParseError, "unknown family \"" + config.family + "\"");
  const auto corpus = generate_corpus(*family, config.n, config.r, config.count, config.seed);
  Json doc = Json::array();
  for (const auto& entry : corpus) doc.push_back(entry.spec);
  Output output(config.out);
  output.stream() << doc.dump(1) << '\n';
  return kExitOk;
}

std::vector<MatroidSpec> standard_bench_corpus() {
  std::vector<MatroidSpec> out;
  out.push_back({"uniform(5,12)", uniform(5, 12)});
  out.push_back({"uniform(3,9)", uniform(3, 9)});
  out.push_back({"schubert_example",
                 schubert_lower(SetChain::initial_segments({0, 2, 7, 10}, 10), {0, 1, 3, 4})});
  for (auto& entry : generate_corpus(CorpusFamily::kSchubert, 10, 4, 3, 11)) {
    out.push_back({entry.id, std::move(entry.matroid)});
  }
  return out;
}

int cmd_bench(const RunConfig& config) {
  const auto specs = config.inputs.empty() ? standard_bench_corpus() : load_inputs(config);
  const Evaluator evaluator = parse_evaluator(config.evaluator);

  struct Row {
    std::string variant;
    std::optional<BigInt> value;
    BigInt chains;
    double seconds = 0;
    std::string note;
  };
  std::vector<std::vector<Row>> rows(specs.size());
  // Sequential: wall times are the point of this command.
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const Matroid& m = specs[i].matroid;
    for (ChainVariant v : kAllChainVariants) {
      Row row{std::string(variant_name(v)), std::nullopt, 0, 0, ""};
      const auto start = std::chrono::steady_clock::now();
      try {
        ChainSumResult result = chain_sum(m, v, evaluator);
        if (component_count(m) % 2 == 0) result.value = -result.value;
        row.value = result.value;
        row.chains = result.chains;
      } catch (const OmegaError& e) {
        if (e.code() != ErrorCode::kInfeasible && e.code() != ErrorCode::kVariantInapplicable) {
          throw;
        }
        row.note = std::string(error_code_name(e.code()));
      }
      row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      rows[i].push_back(std::move(row));
    }
  }

  Output output(config.out);
  std::ostream& out = output.stream();
  bool disagree = false;
  std::vector<std::vector<std::string>> table{{"id", "n", "r", "variant", "omega", "chains", "ms", "note"}};
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const Matroid& m = specs[i].matroid;
    std::optional<BigInt> first;
    for (const auto& row : rows[i]) {
      if (row.value) {
        if (first && *first != *row.value) disagree = true;
        if (!first) first = row.value;
      }
      if (config.format == "table") {
        char ms[32];
        std::snprintf(ms, sizeof ms, "%.2f", row.seconds * 1e3);
        table.push_back({specs[i].id, std::to_string(m.size()), std::to_string(m.rank()),
                         row.variant, big_or_dash(row.value), row.chains.str(), ms, row.note});
        continue;
      }
      Json rec{{"id", specs[i].id},      {"n", m.size()},
               {"r", m.rank()},          {"variant", row.variant},
               {"value", row.value ? big_to_json(*row.value) : Json(nullptr)},
               {"chains", big_to_json(row.chains)}};
      if (!row.note.empty()) rec["note"] = row.note;
      if (config.timings) rec["seconds"] = row.seconds;
      out << rec.dump() << '\n';
    }
  }
  if (config.format == "table") print_table(out, table);
  return disagree ? kExitDisagree : kExitOk;
}

void add_common(CLI::App* app, RunConfig& config, bool inputs_required) {
  auto* input = app->add_option("-i,--input", config.inputs, "matroid spec file (repeatable)");
  if (inputs_required) input->required();
  app->add_option("--seed", config.seed, "RNG seed");
  app->add_option("--jobs", config.jobs, "worker threads")->check(CLI::PositiveNumber);
  app->add_option("--format", config.format, "output format")
      ->check(CLI::IsMember({"json", "table"}));
  app->add_option("--out", config.out, "output file (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig config;
  CLI::App app{"omega: the top coefficient of the matroid g-polynomial"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "compute omega for each input matroid");
  add_common(compute, config, true);
  compute->add_option("--method", config.method,
                      "auto | all | closed_form | <variant>, e.g. final_flats");
  compute->add_option("--evaluator", config.evaluator, "transfer | dfs");
  compute->add_flag("--timings", config.timings, "include wall times");

  auto* identities = app.add_subcommand("check-identities", "check the indicator identities pointwise");
  add_common(identities, config, true);
  identities->add_option("--samples", config.samples, "sampled points per matroid");
  identities->add_option("--points", config.points, "point batch file instead of sampling");
  identities->add_option("--grid", config.grid, "also check every grid point with denominator D");
  identities->add_option("--max-denominator", config.max_denominator, "sampler denominator bound");

  auto* random = app.add_subcommand("random", "write a seeded random corpus of matroid specs");
  add_common(random, config, false);
  random->add_option("--family", config.family, "schubert | closure");
  random->add_option("--n", config.n, "ground set size (cap, for closure)");
  random->add_option("--r", config.r, "rank (schubert; negative = random)");
  random->add_option("--count", config.count, "number of specs");

  auto* bench = app.add_subcommand("bench", "chain counts and times per variant");
  add_common(bench, config, false);
  bench->add_option("--evaluator", config.evaluator, "transfer | dfs");
  bench->add_flag("--timings", config.timings, "include wall times in JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (compute->parsed()) return cmd_compute(config);
    if (identities->parsed()) return cmd_check_identities(config);
    if (random->parsed()) return cmd_random(config);
    return cmd_bench(config);
  } catch (const OmegaError& e) {
    std::cerr << "omega: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::kInfeasible:
        return kExitInfeasible;
      case ErrorCode::kParseError:
      case ErrorCode::kGroundSetTooLarge:
      case ErrorCode::kNotAMatroid:
      case ErrorCode::kEmptyGroundSet:
      case ErrorCode::kInvalidRank:
      case ErrorCode::kInvalidProfile:
      case ErrorCode::kInvalidArgument:
        return kExitParse;
      default:
        return kExitDisagree;
    }
  } catch (const std::exception& e) {
    std::cerr << "omega: " << e.what() << '\n';
    return kExitDisagree;
  }
}
