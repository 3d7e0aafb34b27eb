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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero when a blocking criterion fails. Pass criterion ids (AC1 ... AC9)
// as arguments to run a subset.

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "gridwalk/centrality.h"
#include "gridwalk/experiments.h"
#include "gridwalk/generators.h"
#include "gridwalk/routing.h"
#include "gridwalk/svg.h"
#include "oracles.h"
#include "test_graphs.h"

namespace gridwalk {
namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  bool blocking = true;
  double time_limit_s = 0.0;  // 0 = none
  std::function<Verdict()> check;
};

double MaxAbsDiff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return a.size() == b.size() ? worst : INFINITY;
}

Verdict CentralityOracles() {
  std::mt19937_64 gen(20261018);
  const EigenvectorOptions tight{1e-12, 100000};
  double worst[4] = {0, 0, 0, 0};
  for (int trial = 0; trial < 500; ++trial) {
    const Graph g = testing::RandomConnectedGraph(gen, 8);
    worst[0] = std::max(worst[0], MaxAbsDiff(DegreeCentrality(g).score, oracle::Degree(g)));
    worst[1] = std::max(worst[1], MaxAbsDiff(ClosenessCentrality(g).score, oracle::Closeness(g)));
    worst[2] = std::max(worst[2], MaxAbsDiff(BetweennessCentrality(g).score, oracle::Betweenness(g)));
    worst[3] = std::max(worst[3],
                        MaxAbsDiff(EigenvectorCentrality(g, tight).score, oracle::Eigenvector(g)));
  }
  const double max_err = *std::max_element(std::begin(worst), std::end(worst));
  return {max_err <= 1e-9,
          fmt::format("500 graphs; max |err| degree {:.1e} closeness {:.1e} "
                      "betweenness {:.1e} eigenvector {:.1e}",
                      worst[0], worst[1], worst[2], worst[3])};
}

Verdict GeneratorContracts() {
  const double pairs = 500.0 * 499.0 / 2.0;
  const double mean = pairs * 0.01;
  const double sd_mean = std::sqrt(pairs * 0.01 * 0.99) / std::sqrt(100.0);
  double total = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    total += static_cast<double>(GenerateRandom(500, 0.01, seed).edge_count());
  }
  const double z = (total / 100.0 - mean) / sd_mean;
  const bool er_ok = std::abs(z) <= 3.0;

  std::size_t bad_trees = 0;
  for (std::size_t n = 2; n <= 2000; ++n) {
    const Graph g = GenerateScaleFree(n, 1, n);
    if (g.edge_count() != n - 1 || LargestComponent(g).size() != n) ++bad_trees;
  }

  bool lattice_ok = true;
  for (std::size_t n : {20, 100, 500}) {
    const Graph g = GenerateSmallWorld(n, 4, 0.0, n);
    for (NodeId v = 0; v < n; ++v) lattice_ok &= g.Degree(v) == 4;
    lattice_ok &= g.edge_count() == 2 * n;
    lattice_ok &= MeanClusteringCoefficient(g) == 0.5;
  }
  return {er_ok && bad_trees == 0 && lattice_ok,
          fmt::format("ER mean z={:+.2f}; BA non-trees {} of 1999; WS lattice {}", z,
                      bad_trees, lattice_ok ? "regular, C=0.5" : "WRONG")};
}

SweepGrid SmallestCell() {
  SweepGrid grid;
  grid.networks = {NetworkKind::kSmallWorld};
  grid.nodes = {500};
  grid.sources = {5};
  grid.targets = {50};
  grid.walkers = {5};
  grid.policies = {PolicyKind::kRandomWalk, PolicyKind::kCentralityWalk};
  grid.metrics = {Metric::kDegree, Metric::kCloseness, Metric::kBetweenness,
                  Metric::kEigenvector};
  grid.repetitions = {10};
  grid.seed = 42;
  return grid;
}

std::vector<std::string> SweepOutputs(const std::vector<ExperimentConfig>& cells) {
  const SweepResult sweep = RunSweep(cells);
  std::vector<std::string> out{FormatRawCsv(sweep), FormatSummaryCsv(sweep.summary),
                               FormatReductionCsv(ComputeReductions(sweep.summary))};
  for (const auto& runs : sweep.runs) out.push_back(RenderSeriesSvg(runs.front().series));
  return out;
}

Verdict Determinism() {
  const std::vector<ExperimentConfig> cells = ExpandGrid(SmallestCell());
  const auto t0 = Clock::now();
  const std::vector<ExperimentConfig> rw_only{cells.front()};
  SweepOutputs(rw_only);
  const double smallest_s = std::chrono::duration<double>(Clock::now() - t0).count();
  const auto a = SweepOutputs(cells);
  const auto b = SweepOutputs(cells);
  const bool same = a == b;
  return {same && smallest_s < 10.0,
          fmt::format("{} cells, {} artifacts {}; smallest cell {:.3f} s", cells.size(),
                      a.size(), same ? "byte-identical" : "DIFFER", smallest_s)};
}

Verdict ForcedMarch() {
  int failures = 0;
  int runs = 0;
  for (Metric metric : kAllMetrics) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      Graph g = testing::PathGraph(5);
      g.set_role(0, Role::kSource);
      g.set_role(4, Role::kTarget);
      const RoutingPolicy policy{PolicyKind::kCentralityWalk, metric, true, DeadEnd::kDie};
      Simulation sim(g, policy, ComputeCentrality(g, metric), 1, seed);
      const RunOutcome out = sim.Run(100);
      ++runs;
      failures += !(out.ticks == 4 && out.status == SimStatus::kComplete &&
                    DeliveryRate(out.visited_targets, out.total_targets) == 100.0);
    }
  }
  return {failures == 0, fmt::format("{} runs, {} not complete in 4 ticks", runs, failures)};
}

// The small-world tendency experiment, shared by AC5 and AC6.
const std::vector<SummaryRow>& TendencyRows(NetworkKind kind) {
  static std::map<NetworkKind, std::vector<SummaryRow>> cache;
  auto it = cache.find(kind);
  if (it != cache.end()) return it->second;
  SweepGrid grid;
  grid.networks = {kind};
  grid.nodes = {500};
  grid.k = {4};
  grid.p_rewire = {0.1};
  grid.m = {1};
  grid.sources = {10};
  grid.targets = {50};
  grid.walkers = {10};
  grid.policies = {PolicyKind::kRandomWalk, PolicyKind::kCentralityWalk};
  grid.metrics = {Metric::kDegree, Metric::kCloseness, Metric::kBetweenness,
                  Metric::kEigenvector};
  grid.avoid_visited = {true};
  grid.dead_ends = {DeadEnd::kRandomAnyNeighbor};
  grid.repetitions = {30};
  grid.seed = 1;
  return cache[kind] = RunSweep(ExpandGrid(grid)).summary;
}

Verdict SmallWorldReduction() {
  const auto& rows = TendencyRows(NetworkKind::kSmallWorld);
  const double rw = rows.front().ticks.mean;
  bool all = true;
  std::string detail = fmt::format("RW mean {:.1f};", rw);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double reduction = TimeReduction(rw, rows[i].ticks.mean);
    all &= reduction >= 40.0;
    detail += fmt::format(" {} {:.1f} ({:+.1f}%)", MetricName(rows[i].config.policy.metric),
                          rows[i].ticks.mean, reduction);
  }
  return {all, detail + "; need >= 40% each"};
}

Verdict SmallWorldParity() {
  const auto& rows = TendencyRows(NetworkKind::kSmallWorld);
  double lo = INFINITY, hi = 0.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    lo = std::min(lo, rows[i].ticks.mean);
    hi = std::max(hi, rows[i].ticks.mean);
  }
  const double spread = 100.0 * (hi - lo) / lo;
  return {spread <= 15.0,
          fmt::format("centrality means {:.1f}..{:.1f}, spread {:.1f}% (limit 15%)", lo,
                      hi, spread)};
}

// Informational: published random and scale-free reduction tables, with signs.
Verdict ReductionTables() {
  struct PublishedRow {
    NetworkKind kind;
    Metric metric;
    double value;
  };
  const PublishedRow published[] = {
      {NetworkKind::kRandom, Metric::kEigenvector, 55},
      {NetworkKind::kRandom, Metric::kBetweenness, 35},
      {NetworkKind::kRandom, Metric::kCloseness, 54},
      {NetworkKind::kRandom, Metric::kDegree, 56},
      {NetworkKind::kScaleFree, Metric::kEigenvector, 40.25},
      {NetworkKind::kScaleFree, Metric::kBetweenness, 24},
      {NetworkKind::kScaleFree, Metric::kCloseness, 46.8},
      {NetworkKind::kScaleFree, Metric::kDegree, -82.5},
  };
  std::string table;
  int agree = 0;
  for (NetworkKind kind : {NetworkKind::kRandom, NetworkKind::kScaleFree}) {
    for (const ReductionRow& row : ComputeReductions(TendencyRows(kind))) {
      for (const PublishedRow& p : published) {
        if (p.kind != kind || p.metric != row.metric) continue;
        const bool same_sign = (p.value < 0) == (row.reduction_pct < 0);
        agree += same_sign;
        table += fmt::format("\n      {:<11} RW vs {:<12} ours {:+7.1f}%  published {:+7.2f}%  sign {}",
                             NetworkKindName(kind), MetricName(row.metric),
                             row.reduction_pct, p.value, same_sign ? "agrees" : "DISAGREES");
      }
    }
  }
  return {true, fmt::format("{} of 8 signs agree (non-blocking){}", agree, table)};
}

Verdict StepCostAndSingleComputation() {
  std::vector<double> log_leaves, log_time;
  std::string detail;
  for (std::size_t leaves : {100, 1000, 10000}) {
    const Graph star = testing::StarGraph(leaves);
    const CentralityTable degree = DegreeCentrality(star);
    const RoutingPolicy policy{PolicyKind::kCentralityWalk, Metric::kDegree, false,
                               DeadEnd::kDie};
    Graph g = star;
    Rng rng(7);
    Walker w{.id = 0, .location = 0, .finished = false, .trail = {0}};
    const std::size_t steps = std::max<std::size_t>(200, 20'000'000 / leaves);
    double best = INFINITY;
    for (int batch = 0; batch < 5; ++batch) {
      const auto t0 = Clock::now();
      for (std::size_t i = 0; i < steps; ++i) {
        StepCentralityWalk(g, w, policy, degree, rng);
        w.location = 0;
        w.trail.resize(1);
      }
      const double per_step =
          std::chrono::duration<double>(Clock::now() - t0).count() / static_cast<double>(steps);
      best = std::min(best, per_step);
    }
    log_leaves.push_back(std::log10(static_cast<double>(leaves)));
    log_time.push_back(std::log10(best));
    detail += fmt::format("{} leaves {:.3g} us; ", leaves, best * 1e6);
  }
  const double mx = (log_leaves[0] + log_leaves[1] + log_leaves[2]) / 3.0;
  const double my = (log_time[0] + log_time[1] + log_time[2]) / 3.0;
  double sxy = 0.0, sxx = 0.0;
  for (int i = 0; i < 3; ++i) {
    sxy += (log_leaves[i] - mx) * (log_time[i] - my);
    sxx += (log_leaves[i] - mx) * (log_leaves[i] - mx);
  }
  const double slope = sxy / sxx;

  ExperimentConfig cfg;
  cfg.generator = {.kind = NetworkKind::kScaleFree, .nodes = 300};
  cfg.sources = 5;
  cfg.targets = 30;
  cfg.walkers = 5;
  cfg.repetitions = 4;
  cfg.policy = {PolicyKind::kCentralityWalk, Metric::kBetweenness, true, DeadEnd::kDie};
  const std::uint64_t before = CentralityComputationCount();
  RunConfig(cfg);
  const std::uint64_t centrality_calls = CentralityComputationCount() - before;
  cfg.policy.kind = PolicyKind::kRandomWalk;
  const std::uint64_t before_rw = CentralityComputationCount();
  RunConfig(cfg);
  const std::uint64_t rw_calls = CentralityComputationCount() - before_rw;

  const bool ok = std::abs(slope - 1.0) <= 0.2 && centrality_calls == 4 && rw_calls == 0;
  return {ok, fmt::format("{}log-log slope {:.3f}; centrality computations: {} for 4 "
                          "centrality runs, {} for 4 random-walk runs",
                          detail, slope, centrality_calls, rw_calls)};
}

Verdict StallAccounting() {
  Graph g = testing::FromEdges(4, {{0, 1}, {2, 3}});
  g.set_role(0, Role::kSource);
  g.set_role(2, Role::kTarget);
  std::vector<RoutingPolicy> policies;
  for (DeadEnd dead_end : {DeadEnd::kDie, DeadEnd::kRandomAnyNeighbor}) {
    for (bool avoid : {true, false}) {
      policies.push_back({PolicyKind::kRandomWalk, Metric::kDegree, avoid, dead_end});
      for (Metric m : kAllMetrics) {
        policies.push_back({PolicyKind::kCentralityWalk, m, avoid, dead_end});
      }
    }
  }
  int bad = 0;
  for (const RoutingPolicy& policy : policies) {
    ExperimentConfig cfg;
    cfg.policy = policy;
    cfg.repetitions = 3;
    std::vector<RunResult> runs;
    for (std::size_t i = 0; i < cfg.repetitions; ++i) {
      std::optional<CentralityTable> table;
      if (policy.kind == PolicyKind::kCentralityWalk) table = ComputeCentrality(g, policy.metric);
      Simulation sim(g, policy, table, 1, RunSeed(0, i));
      const RunOutcome out = sim.Run(400);
      RunResult r;
      r.run_index = i;
      r.ticks = out.ticks;
      r.delivered_targets = out.visited_targets;
      r.total_targets = out.total_targets;
      r.delivery_rate_pct = DeliveryRate(out.visited_targets, out.total_targets);
      r.status = out.status;
      r.stall_reason = out.stall_reason;
      runs.push_back(r);
      bad += out.status != SimStatus::kStalled || r.delivery_rate_pct != 0.0;
    }
    const SummaryRow row = SummarizeRuns(0, cfg, runs);
    bad += row.stall_count == 0 || row.delivery_rate_pct.max != 0.0;
  }
  return {bad == 0, fmt::format("{} policies x 3 runs, {} violations", policies.size(), bad)};
}

int Main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {"AC1", "centrality matches brute-force oracles", true, 30, CentralityOracles},
      {"AC2", "generator contracts", true, 60, GeneratorContracts},
      {"AC3", "sweep outputs are deterministic", true, 0, Determinism},
      {"AC4", "forced march on a 5-node path", true, 0, ForcedMarch},
      {"AC5", "small-world: centrality >= 40% faster than random walk", true, 120,
       SmallWorldReduction},
      {"AC6", "small-world: centrality policies within 15% of each other", true, 120,
       SmallWorldParity},
      {"AC7", "random and scale-free time-reduction tables", false, 0, ReductionTables},
      {"AC8", "per-step cost linear in degree, centrality computed once per run", true, 0,
       StepCostAndSingleComputation},
      {"AC9", "stall accounting on disconnected source and target", true, 0,
       StallAccounting},
  };
  std::vector<std::string> only(argv + 1, argv + argc);
  int failed = 0;
  for (const Criterion& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto t0 = Clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (c.time_limit_s > 0 && secs > c.time_limit_s) {
      v.pass = false;
      v.detail += fmt::format("; over the {:.0f} s limit", c.time_limit_s);
    }
    const char* status = v.pass ? "PASS" : (c.blocking ? "FAIL" : "INFO");
    fmt::print("{} {} {} [{:.2f} s]\n    {}\n", c.id, status, c.title, secs, v.detail);
    failed += !v.pass && c.blocking;
  }
  fmt::print("{} blocking criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace gridwalk

int main(int argc, char** argv) { return gridwalk::Main(argc, argv); }
