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

#include "gridwalk/experiments.h"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <iterator>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>

#include "gridwalk/error.h"
#include "gridwalk/rng.h"

namespace gridwalk {
namespace {

// Everything that identifies a cell except the routing policy.
auto BaselineKey(const ExperimentConfig& c) {
  return std::make_tuple(c.generator.kind, c.generator.nodes, c.generator.k,
                         c.generator.p_rewire, c.generator.m,
                         c.generator.EffectivePEdge(), c.sources, c.targets,
                         c.walkers, c.policy.avoid_visited, c.policy.dead_end,
                         c.repetitions, c.EffectiveMaxTicks(), c.master_seed);
}

std::string ConfigColumns(const ExperimentConfig& c) {
  return fmt::format(
      "{},{},{},{},{},{},{},{},{},{},{},{},{}", NetworkKindName(c.generator.kind),
      c.generator.nodes, c.generator.k, c.generator.p_rewire, c.generator.m,
      c.generator.EffectivePEdge(), c.sources, c.targets, c.walkers,
      PolicyKindName(c.policy.kind),
      c.policy.kind == PolicyKind::kRandomWalk ? std::string_view("none")
                                               : MetricName(c.policy.metric),
      c.policy.avoid_visited ? "true" : "false", DeadEndName(c.policy.dead_end));
}

bool UsesK(NetworkKind kind) { return kind == NetworkKind::kSmallWorld; }
bool UsesM(NetworkKind kind) { return kind == NetworkKind::kScaleFree; }
bool UsesPEdge(NetworkKind kind) { return kind == NetworkKind::kRandom; }

template <typename T>
std::vector<T> Relevant(const std::vector<T>& axis, bool used) {
  if (used) return axis;
  return {axis.front()};
}

}  // namespace

std::size_t ExperimentConfig::EffectiveMaxTicks() const {
  return max_ticks.value_or(100 * generator.nodes);
}

Stats Summarize(const std::vector<double>& values) {
  Stats s;
  if (values.empty()) return s;
  s.min = *std::min_element(values.begin(), values.end());
  s.max = *std::max_element(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double sq = 0.0;
    for (double v : values) sq += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(sq / static_cast<double>(values.size() - 1));
  }
  // Guard against the last-ulp drift of the running sum for constant data.
  s.mean = std::clamp(s.mean, s.min, s.max);
  return s;
}

Graph PlaceRoles(Graph g, std::size_t sources, std::size_t targets,
                 std::uint64_t seed) {
  std::vector<NodeId> pool = LargestComponent(g);
  const std::size_t need = sources + targets;
  if (need > pool.size()) {
    throw Error(ErrorCode::kComponentTooSmall,
                fmt::format("{} sources + {} targets exceed largest component "
                            "of {} nodes",
                            sources, targets, pool.size()));
  }
  g.ClearRoles();
  Rng rng(seed, "place");
  // Partial Fisher-Yates: the first `need` slots become a uniform sample
  // without replacement, in draw order.
  for (std::size_t i = 0; i < need; ++i) {
    const std::size_t j = i + rng.UniformIndex(pool.size() - i);
    std::swap(pool[i], pool[j]);
    g.set_role(pool[i], i < sources ? Role::kSource : Role::kTarget);
  }
  return g;
}

double DeliveryRate(std::size_t delivered, std::size_t total) {
  if (total == 0) throw Error(ErrorCode::kZeroTargets, "delivery rate needs targets");
  if (delivered > total) {
    throw Error(ErrorCode::kInvalidArgument, "delivered exceeds total targets");
  }
  return 100.0 * static_cast<double>(delivered) / static_cast<double>(total);
}

double TimeReduction(double rw_mean_ticks, double cr_mean_ticks) {
  if (!(rw_mean_ticks > 0.0)) {
    throw Error(ErrorCode::kDivisionByZero, "random-walk mean ticks must be positive");
  }
  return 100.0 * (rw_mean_ticks - cr_mean_ticks) / rw_mean_ticks;
}

std::uint64_t RunSeed(std::uint64_t master_seed, std::size_t run_index) {
  return DeriveSeed(master_seed, "run", run_index);
}

Graph BuildRunGraph(const ExperimentConfig& cfg, std::size_t run_index) {
  const std::uint64_t seed = RunSeed(cfg.master_seed, run_index);
  GeneratorSpec spec = cfg.generator;
  spec.seed = DeriveSeed(seed, "generate");
  return PlaceRoles(Generate(spec), cfg.sources, cfg.targets,
                    DeriveSeed(seed, "place"));
}

RunResult RunOnce(const ExperimentConfig& cfg, std::size_t run_index) {
  RunResult result;
  result.run_index = run_index;
  result.derived_seed = RunSeed(cfg.master_seed, run_index);
  try {
    Graph g = BuildRunGraph(cfg, run_index);
    result.placement_component = LargestComponent(g).size();

    std::optional<CentralityTable> table;
    if (cfg.policy.kind == PolicyKind::kCentralityWalk) {
      table = ComputeCentrality(g, cfg.policy.metric, cfg.eigen);
    }
    Simulation sim(std::move(g), cfg.policy, std::move(table), cfg.walkers,
                   DeriveSeed(result.derived_seed, "walk"));
    RunOutcome outcome = sim.Run(cfg.EffectiveMaxTicks());

    result.ticks = outcome.ticks;
    result.delivered_targets = outcome.visited_targets;
    result.total_targets = outcome.total_targets;
    result.delivery_rate_pct =
        DeliveryRate(outcome.visited_targets, outcome.total_targets);
    result.status = outcome.status;
    result.stall_reason = outcome.stall_reason;
    result.series = std::move(outcome.series);
  } catch (const Error& e) {
    throw Error(e.code(), fmt::format("run {}: {}", run_index, e.message()));
  }
  return result;
}

std::vector<RunResult> RunConfig(const ExperimentConfig& cfg, unsigned threads) {
  if (cfg.repetitions < 1) {
    throw Error(ErrorCode::kInvalidArgument, "repetitions must be >= 1");
  }
  std::vector<RunResult> results(cfg.repetitions);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, cfg.repetitions));

  std::atomic<std::size_t> next{0};
  std::mutex error_mu;
  std::size_t error_index = cfg.repetitions;
  std::exception_ptr error;
  auto worker = [&] {
    for (std::size_t i = next++; i < cfg.repetitions; i = next++) {
      try {
        results[i] = RunOnce(cfg, i);
      } catch (...) {
        std::lock_guard lock(error_mu);
        // Report the lowest failing run so the error is schedule-independent.
        if (i < error_index) {
          error_index = i;
          error = std::current_exception();
        }
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
  return results;
}

std::vector<ExperimentConfig> ExpandGrid(const SweepGrid& grid) {
  const bool empty_axis =
      grid.networks.empty() || grid.nodes.empty() || grid.k.empty() ||
      grid.p_rewire.empty() || grid.m.empty() || grid.p_edge.empty() ||
      grid.sources.empty() || grid.targets.empty() || grid.policies.empty() ||
      grid.metrics.empty() || grid.avoid_visited.empty() ||
      grid.dead_ends.empty() || grid.repetitions.empty() ||
      grid.max_ticks.empty();
  if (empty_axis) throw Error(ErrorCode::kEmptyGrid, "a parameter list is empty");

  std::vector<ExperimentConfig> out;
  for (NetworkKind kind : grid.networks)
  for (std::size_t nodes : grid.nodes)
  for (std::size_t k : Relevant(grid.k, UsesK(kind)))
  for (double p_rewire : Relevant(grid.p_rewire, UsesK(kind)))
  for (std::size_t m : Relevant(grid.m, UsesM(kind)))
  for (const auto& p_edge : Relevant(grid.p_edge, UsesPEdge(kind)))
  for (std::size_t sources : grid.sources)
  for (std::size_t targets : grid.targets)
  for (std::size_t walkers : grid.walkers.empty() ? std::vector{sources} : grid.walkers)
  for (PolicyKind policy : grid.policies)
  for (Metric metric : Relevant(grid.metrics, policy == PolicyKind::kCentralityWalk))
  for (bool avoid : grid.avoid_visited)
  for (DeadEnd dead_end : grid.dead_ends)
  for (std::size_t reps : grid.repetitions)
  for (const auto& max_ticks : grid.max_ticks) {
    ExperimentConfig cfg;
    cfg.generator = {kind, nodes, k, p_rewire, m, p_edge, 0};
    cfg.sources = sources;
    cfg.targets = targets;
    cfg.walkers = walkers;
    cfg.policy = {policy, metric, avoid, dead_end};
    cfg.repetitions = reps;
    cfg.max_ticks = max_ticks;
    cfg.master_seed = grid.seed.value_or(0);
    cfg.eigen = grid.eigen;
    out.push_back(cfg);
  }
  return out;
}

SummaryRow SummarizeRuns(std::size_t config_id, const ExperimentConfig& cfg,
                         const std::vector<RunResult>& runs) {
  SummaryRow row;
  row.config_id = config_id;
  row.config = cfg;
  row.runs = runs.size();
  std::vector<double> ticks, rates;
  for (const RunResult& r : runs) {
    ticks.push_back(static_cast<double>(r.ticks));
    rates.push_back(r.delivery_rate_pct);
    if (r.status != SimStatus::kComplete) ++row.stall_count;
  }
  row.ticks = Summarize(ticks);
  row.delivery_rate_pct = Summarize(rates);
  return row;
}

SweepResult RunSweep(const std::vector<ExperimentConfig>& configs,
                     unsigned threads) {
  if (configs.empty()) throw Error(ErrorCode::kEmptyGrid, "no configurations to run");
  SweepResult sweep;
  sweep.configs = configs;
  for (std::size_t id = 0; id < configs.size(); ++id) {
    try {
      sweep.runs.push_back(RunConfig(configs[id], threads));
    } catch (const Error& e) {
      throw Error(e.code(), fmt::format("config {}: {}", id, e.message()));
    }
    sweep.summary.push_back(SummarizeRuns(id, configs[id], sweep.runs.back()));
  }
  return sweep;
}

std::vector<ReductionRow> ComputeReductions(const std::vector<SummaryRow>& rows) {
  struct Pool {
    double rw_sum = 0.0;
    double cr_sum = 0.0;
    std::size_t cells = 0;
  };
  std::map<std::pair<NetworkKind, Metric>, Pool> pools;
  for (const SummaryRow& cr : rows) {
    if (cr.config.policy.kind != PolicyKind::kCentralityWalk) continue;
    const auto key = BaselineKey(cr.config);
    auto rw = std::find_if(rows.begin(), rows.end(), [&](const SummaryRow& r) {
      return r.config.policy.kind == PolicyKind::kRandomWalk &&
             BaselineKey(r.config) == key;
    });
    if (rw == rows.end()) continue;
    Pool& pool = pools[{cr.config.generator.kind, cr.config.policy.metric}];
    pool.rw_sum += rw->ticks.mean;
    pool.cr_sum += cr.ticks.mean;
    ++pool.cells;
  }
  std::vector<ReductionRow> out;
  for (const auto& [key, pool] : pools) {
    ReductionRow row;
    row.network = key.first;
    row.metric = key.second;
    row.matched_cells = pool.cells;
    row.rw_mean_ticks = pool.rw_sum / static_cast<double>(pool.cells);
    row.cr_mean_ticks = pool.cr_sum / static_cast<double>(pool.cells);
    row.reduction_pct = TimeReduction(row.rw_mean_ticks, row.cr_mean_ticks);
    out.push_back(row);
  }
  return out;
}

std::string FormatRawCsv(const SweepResult& sweep) {
  std::string out =
      "config_id,run_index,network,nodes,k,p_rewire,m,p_edge,sources,targets,"
      "walkers,policy,metric,avoid_visited,dead_end,seed,ticks,delivered,"
      "total_targets,delivery_rate_pct,status\n";
  auto it = std::back_inserter(out);
  for (std::size_t id = 0; id < sweep.configs.size(); ++id) {
    const std::string cols = ConfigColumns(sweep.configs[id]);
    for (const RunResult& r : sweep.runs[id]) {
      fmt::format_to(it, "{},{},{},{},{},{},{},{},{}\n", id, r.run_index, cols,
                     r.derived_seed, r.ticks, r.delivered_targets,
                     r.total_targets, r.delivery_rate_pct,
                     StatusName(r.status, r.stall_reason));
    }
  }
  return out;
}

std::string FormatSummaryCsv(const std::vector<SummaryRow>& rows) {
  std::string out =
      "config_id,network,nodes,k,p_rewire,m,p_edge,sources,targets,walkers,"
      "policy,metric,avoid_visited,dead_end,master_seed,repetitions,max_ticks,"
      "runs,ticks_mean,ticks_min,ticks_max,ticks_stddev,delivery_mean,"
      "delivery_min,delivery_max,delivery_stddev,stall_count\n";
  auto it = std::back_inserter(out);
  for (const SummaryRow& row : rows) {
    const ExperimentConfig& c = row.config;
    fmt::format_to(it, "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                   row.config_id, ConfigColumns(c), c.master_seed,
                   c.repetitions, c.EffectiveMaxTicks(), row.runs,
                   row.ticks.mean, row.ticks.min, row.ticks.max,
                   row.ticks.stddev, row.delivery_rate_pct.mean,
                   row.delivery_rate_pct.min, row.delivery_rate_pct.max,
                   row.delivery_rate_pct.stddev, row.stall_count);
  }
  return out;
}

std::string FormatReductionCsv(const std::vector<ReductionRow>& rows) {
  std::string out = "network,metric,reduction_pct\n";
  auto it = std::back_inserter(out);
  for (const ReductionRow& row : rows) {
    fmt::format_to(it, "{},{},{}\n", NetworkKindName(row.network),
                   MetricName(row.metric), row.reduction_pct);
  }
  return out;
}

std::string FormatSeriesCsv(const std::vector<TickRecord>& series) {
  std::string out = "tick,visited_nodes,visited_targets\n";
  auto it = std::back_inserter(out);
  for (std::size_t t = 0; t < series.size(); ++t) {
    fmt::format_to(it, "{},{},{}\n", t + 1, series[t].visited_nodes,
                   series[t].visited_targets);
  }
  return out;
}

std::string FormatRunLog(const SweepResult& sweep) {
  std::string out = fmt::format("rng: {}\n", kRngAlgorithm);
  auto it = std::back_inserter(out);
  for (std::size_t id = 0; id < sweep.configs.size(); ++id) {
    const std::size_t nodes = sweep.configs[id].generator.nodes;
    for (const RunResult& r : sweep.runs[id]) {
      if (r.placement_component < nodes) {
        fmt::format_to(it,
                       "config {} run {}: placement restricted to largest "
                       "component ({} of {} nodes)\n",
                       id, r.run_index, r.placement_component, nodes);
      }
    }
  }
  return out;
}

}  // namespace gridwalk
