// Copyright 2026 The Gridwalk Authors
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

#ifndef GRIDWALK_EXPERIMENTS_H_
#define GRIDWALK_EXPERIMENTS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gridwalk/centrality.h"
#include "gridwalk/generators.h"
#include "gridwalk/graph.h"
#include "gridwalk/routing.h"

namespace gridwalk {

// One cell of the parameter grid.
struct ExperimentConfig {
  GeneratorSpec generator;  // generator.seed is ignored; runs derive their own
  std::size_t sources = 5;
  std::size_t targets = 50;
  std::size_t walkers = 5;
  RoutingPolicy policy;
  std::size_t repetitions = 10;
  std::optional<std::size_t> max_ticks;  // unset => 100 * nodes
  std::uint64_t master_seed = 0;
  EigenvectorOptions eigen{1e-10, 100000};

  std::size_t EffectiveMaxTicks() const;
};

struct RunResult {
  std::size_t run_index = 0;
  std::uint64_t derived_seed = 0;
  std::size_t ticks = 0;
  std::size_t delivered_targets = 0;
  std::size_t total_targets = 0;
  double delivery_rate_pct = 0.0;
  SimStatus status = SimStatus::kRunning;
  StallReason stall_reason = StallReason::kNone;
  std::vector<TickRecord> series;
  // Size of the component that sources and targets were drawn from; smaller
  // than the node count when the generated graph was disconnected.
  std::size_t placement_component = 0;

  friend bool operator==(const RunResult&, const RunResult&) = default;
};

struct Stats {
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
  double stddev = 0.0;  // sample standard deviation, 0 for a single value
};

Stats Summarize(const std::vector<double>& values);

struct SummaryRow {
  std::size_t config_id = 0;
  ExperimentConfig config;
  std::size_t runs = 0;
  Stats ticks;
  Stats delivery_rate_pct;
  std::size_t stall_count = 0;
};

// Samples sources + targets distinct nodes from LargestComponent(g); the first
// `sources` become Source, the rest Target, everything else Plain. Throws
// Error{kComponentTooSmall}.
Graph PlaceRoles(Graph g, std::size_t sources, std::size_t targets,
                 std::uint64_t seed);

// 100 * delivered / total. Throws Error{kZeroTargets}.
double DeliveryRate(std::size_t delivered, std::size_t total);

// 100 * (rw - cr) / rw; negative when centrality routing is slower. Throws
// Error{kDivisionByZero} when rw_mean_ticks <= 0.
double TimeReduction(double rw_mean_ticks, double cr_mean_ticks);

// Seed of run `run_index`; graph, placement and walk streams derive from it.
std::uint64_t RunSeed(std::uint64_t master_seed, std::size_t run_index);

// The graph, with roles placed, that run `run_index` of `cfg` walks on.
Graph BuildRunGraph(const ExperimentConfig& cfg, std::size_t run_index);

RunResult RunOnce(const ExperimentConfig& cfg, std::size_t run_index);

// All repetitions, ordered by run_index. Runs execute on up to `threads`
// workers (0 = hardware concurrency); results do not depend on the count.
std::vector<RunResult> RunConfig(const ExperimentConfig& cfg,
                                 unsigned threads = 0);

// Cartesian-product description of a sweep. Axes that a cell does not use
// (k for a random network, metric for a random walk) collapse to their first
// value instead of multiplying cells.
struct SweepGrid {
  std::vector<NetworkKind> networks;
  std::vector<std::size_t> nodes;
  std::vector<std::size_t> k{4};
  std::vector<double> p_rewire{0.1};
  std::vector<std::size_t> m{1};
  std::vector<std::optional<double>> p_edge{std::nullopt};
  std::vector<std::size_t> sources{5};
  std::vector<std::size_t> targets{50};
  std::vector<std::size_t> walkers;  // empty => walkers = sources per cell
  std::vector<PolicyKind> policies{PolicyKind::kRandomWalk};
  std::vector<Metric> metrics{Metric::kDegree};
  std::vector<bool> avoid_visited{true};
  std::vector<DeadEnd> dead_ends{DeadEnd::kDie};
  std::vector<std::size_t> repetitions{10};
  std::vector<std::optional<std::size_t>> max_ticks{std::nullopt};
  std::optional<std::uint64_t> seed;
  EigenvectorOptions eigen{1e-10, 100000};
};

// Throws Error{kEmptyGrid} when any axis is empty.
std::vector<ExperimentConfig> ExpandGrid(const SweepGrid& grid);

struct SweepResult {
  std::vector<ExperimentConfig> configs;
  std::vector<std::vector<RunResult>> runs;  // parallel to configs
  std::vector<SummaryRow> summary;
};

SweepResult RunSweep(const std::vector<ExperimentConfig>& configs,
                     unsigned threads = 0);
SummaryRow SummarizeRuns(std::size_t config_id, const ExperimentConfig& cfg,
                         const std::vector<RunResult>& runs);

struct ReductionRow {
  NetworkKind network = NetworkKind::kSmallWorld;
  Metric metric = Metric::kDegree;
  double rw_mean_ticks = 0.0;
  double cr_mean_ticks = 0.0;
  double reduction_pct = 0.0;
  std::size_t matched_cells = 0;
};

// Pairs every centrality cell with the random-walk cell that differs only in
// the policy, then pools the matched means per (network, metric). Empty when
// the grid has no random-walk baseline.
std::vector<ReductionRow> ComputeReductions(const std::vector<SummaryRow>& rows);

// CSV renderers; byte-stable for identical inputs.
std::string FormatRawCsv(const SweepResult& sweep);
std::string FormatSummaryCsv(const std::vector<SummaryRow>& rows);
std::string FormatReductionCsv(const std::vector<ReductionRow>& rows);
std::string FormatSeriesCsv(const std::vector<TickRecord>& series);

// Human-readable run log: RNG algorithm plus any run whose placement was
// restricted to the largest component of a disconnected graph.
std::string FormatRunLog(const SweepResult& sweep);

}  // namespace gridwalk

#endif  // GRIDWALK_EXPERIMENTS_H_
