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

#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "gridwalk/error.h"
#include "test_graphs.h"

namespace gridwalk {
namespace {

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kIo;
}

ExperimentConfig SmallConfig(PolicyKind kind = PolicyKind::kRandomWalk,
                             Metric metric = Metric::kDegree) {
  ExperimentConfig cfg;
  cfg.generator = {.kind = NetworkKind::kSmallWorld, .nodes = 120};
  cfg.sources = 3;
  cfg.targets = 15;
  cfg.walkers = 3;
  cfg.policy = {kind, metric, true, DeadEnd::kDie};
  cfg.repetitions = 4;
  cfg.master_seed = 7;
  return cfg;
}

// Single-edge network: random graph on two nodes with p = 1.
ExperimentConfig SingleEdgeConfig(PolicyKind kind, Metric metric) {
  ExperimentConfig cfg;
  cfg.generator = {.kind = NetworkKind::kRandom, .nodes = 2, .p_edge = 1.0};
  cfg.sources = 1;
  cfg.targets = 1;
  cfg.walkers = 1;
  cfg.policy = {kind, metric, true, DeadEnd::kDie};
  cfg.repetitions = 3;
  return cfg;
}

TEST(PlaceRoles, DistinctRolesInComponent) {
  const Graph g = PlaceRoles(testing::CompleteGraph(4), 1, 1, 3);
  EXPECT_EQ(g.NodesWithRole(Role::kSource).size(), 1u);
  EXPECT_EQ(g.NodesWithRole(Role::kTarget).size(), 1u);
  EXPECT_NE(g.NodesWithRole(Role::kSource)[0], g.NodesWithRole(Role::kTarget)[0]);
}

TEST(PlaceRoles, ComponentTooSmall) {
  // Largest component is the triangle {0,1,2}.
  const Graph g = testing::FromEdges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
  EXPECT_EQ(CodeOf([&] { PlaceRoles(g, 2, 2, 1); }), ErrorCode::kComponentTooSmall);
  const Graph placed = PlaceRoles(g, 1, 2, 1);
  for (NodeId v : {3, 4, 5}) EXPECT_EQ(placed.role(v), Role::kPlain);
}

TEST(PlaceRoles, Deterministic) {
  const Graph g = GenerateSmallWorld(100, 4, 0.1, 2);
  const Graph a = PlaceRoles(g, 5, 20, 11);
  const Graph b = PlaceRoles(g, 5, 20, 11);
  EXPECT_EQ(a.NodesWithRole(Role::kSource), b.NodesWithRole(Role::kSource));
  EXPECT_EQ(a.NodesWithRole(Role::kTarget), b.NodesWithRole(Role::kTarget));
  const Graph c = PlaceRoles(g, 5, 20, 12);
  EXPECT_NE(a.NodesWithRole(Role::kTarget), c.NodesWithRole(Role::kTarget));
}

// Each node of K6 lands in the 2-element role sample with probability 1/3.
TEST(PlaceRoles, UniformSample) {
  std::vector<int> hits(6, 0);
  const int trials = 6000;
  for (int t = 0; t < trials; ++t) {
    const Graph g = PlaceRoles(testing::CompleteGraph(6), 1, 1, t);
    for (NodeId v = 0; v < 6; ++v) hits[v] += g.role(v) != Role::kPlain;
  }
  // Binomial(6000, 1/3): sd ~ 36.5.
  for (int h : hits) EXPECT_NEAR(h, trials / 3.0, 4 * 36.5);
}

TEST(DeliveryRate, Examples) {
  EXPECT_DOUBLE_EQ(DeliveryRate(50, 50), 100.0);
  EXPECT_DOUBLE_EQ(DeliveryRate(25, 50), 50.0);
  EXPECT_DOUBLE_EQ(DeliveryRate(0, 50), 0.0);
  EXPECT_EQ(CodeOf([] { DeliveryRate(0, 0); }), ErrorCode::kZeroTargets);
}

TEST(TimeReduction, Examples) {
  EXPECT_DOUBLE_EQ(TimeReduction(100, 45), 55.0);
  EXPECT_DOUBLE_EQ(TimeReduction(100, 100), 0.0);
  EXPECT_DOUBLE_EQ(TimeReduction(100, 182.5), -82.5);
  EXPECT_EQ(CodeOf([] { TimeReduction(0, 10); }), ErrorCode::kDivisionByZero);
}

TEST(Summarize, Moments) {
  const Stats s = Summarize({2, 4, 4, 4, 5, 5, 7, 9});
  EXPECT_DOUBLE_EQ(s.mean, 5.0);
  EXPECT_DOUBLE_EQ(s.min, 2.0);
  EXPECT_DOUBLE_EQ(s.max, 9.0);
  EXPECT_DOUBLE_EQ(s.stddev, std::sqrt(32.0 / 7.0));
  const Stats one = Summarize({3.5});
  EXPECT_DOUBLE_EQ(one.mean, 3.5);
  EXPECT_DOUBLE_EQ(one.stddev, 0.0);
  const Stats constant = Summarize(std::vector<double>(7, 0.1));
  EXPECT_GE(constant.mean, constant.min);
  EXPECT_LE(constant.mean, constant.max);
}

TEST(RunConfig, RepetitionsAndOrder) {
  ExperimentConfig cfg = SmallConfig();
  cfg.repetitions = 1;
  EXPECT_EQ(RunConfig(cfg).size(), 1u);
  cfg.repetitions = 10;
  const std::vector<RunResult> a = RunConfig(cfg, 3);
  ASSERT_EQ(a.size(), 10u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].run_index, i);
    EXPECT_EQ(a[i].derived_seed, RunSeed(cfg.master_seed, i));
  }
  EXPECT_EQ(a, RunConfig(cfg, 1));
  EXPECT_EQ(a, RunConfig(cfg, 4));
}

TEST(RunConfig, SingleEdgeDeliversInOneTick) {
  std::vector<std::pair<PolicyKind, Metric>> policies{{PolicyKind::kRandomWalk, Metric::kDegree}};
  for (Metric m : kAllMetrics) policies.emplace_back(PolicyKind::kCentralityWalk, m);
  for (auto [kind, metric] : policies) {
    for (const RunResult& r : RunConfig(SingleEdgeConfig(kind, metric))) {
      EXPECT_EQ(r.ticks, 1u);
      EXPECT_DOUBLE_EQ(r.delivery_rate_pct, 100.0);
      EXPECT_EQ(r.status, SimStatus::kComplete);
    }
  }
}

TEST(RunConfig, ResultInvariants) {
  for (PolicyKind kind : {PolicyKind::kRandomWalk, PolicyKind::kCentralityWalk}) {
    for (NetworkKind net :
         {NetworkKind::kSmallWorld, NetworkKind::kScaleFree, NetworkKind::kRandom}) {
      ExperimentConfig cfg = SmallConfig(kind, Metric::kBetweenness);
      cfg.generator.kind = net;
      cfg.repetitions = 8;
      for (const RunResult& r : RunConfig(cfg)) {
        EXPECT_GE(r.delivery_rate_pct, 0.0);
        EXPECT_LE(r.delivery_rate_pct, 100.0);
        EXPECT_NE(r.status, SimStatus::kRunning);
        if (r.status == SimStatus::kComplete) {
          EXPECT_EQ(r.delivered_targets, r.total_targets);
          EXPECT_DOUBLE_EQ(r.delivery_rate_pct, 100.0);
        }
        // Under Die every tick either enters a fresh node or loses walkers,
        // so a run cannot outlast its placement component.
        EXPECT_LE(r.ticks, r.placement_component);
        EXPECT_EQ(r.ticks, r.series.size());
      }
    }
  }
}

TEST(RunConfig, SharesGraphAcrossPolicies) {
  const ExperimentConfig rw = SmallConfig();
  const ExperimentConfig cr = SmallConfig(PolicyKind::kCentralityWalk, Metric::kCloseness);
  for (std::size_t i = 0; i < 3; ++i) {
    const Graph a = BuildRunGraph(rw, i);
    const Graph b = BuildRunGraph(cr, i);
    EXPECT_EQ(a.Edges(), b.Edges());
    EXPECT_EQ(a.NodesWithRole(Role::kTarget), b.NodesWithRole(Role::kTarget));
  }
}

TEST(RunConfig, ErrorsNameTheRun) {
  ExperimentConfig cfg = SmallConfig();
  cfg.generator = {.kind = NetworkKind::kRandom, .nodes = 60, .p_edge = 0.0};
  try {
    RunConfig(cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kComponentTooSmall);
    EXPECT_NE(std::string(e.what()).find("run 0:"), std::string::npos) << e.what();
  }
}

SweepGrid TwoByTwoGrid() {
  SweepGrid grid;
  grid.networks = {NetworkKind::kSmallWorld, NetworkKind::kScaleFree};
  grid.nodes = {100};
  grid.sources = {3};
  grid.targets = {10};
  grid.policies = {PolicyKind::kRandomWalk, PolicyKind::kCentralityWalk};
  grid.metrics = {Metric::kDegree};
  grid.repetitions = {10};
  grid.seed = 5;
  return grid;
}

TEST(Sweep, CountsRunsAndRows) {
  const SweepResult sweep = RunSweep(ExpandGrid(TwoByTwoGrid()));
  ASSERT_EQ(sweep.summary.size(), 4u);
  std::size_t runs = 0;
  for (const auto& r : sweep.runs) runs += r.size();
  EXPECT_EQ(runs, 40u);
  for (const SummaryRow& row : sweep.summary) {
    EXPECT_GE(row.ticks.mean, row.ticks.min);
    EXPECT_LE(row.ticks.mean, row.ticks.max);
    EXPECT_GE(row.delivery_rate_pct.mean, row.delivery_rate_pct.min);
    EXPECT_LE(row.delivery_rate_pct.mean, row.delivery_rate_pct.max);
  }
  std::istringstream raw(FormatRawCsv(sweep));
  std::string line;
  std::getline(raw, line);
  EXPECT_EQ(line,
            "config_id,run_index,network,nodes,k,p_rewire,m,p_edge,sources,"
            "targets,walkers,policy,metric,avoid_visited,dead_end,seed,ticks,"
            "delivered,total_targets,delivery_rate_pct,status");
  int rows = 0;
  while (std::getline(raw, line)) ++rows;
  EXPECT_EQ(rows, 40);
}

TEST(Sweep, EmptyGrid) {
  SweepGrid grid = TwoByTwoGrid();
  grid.sources.clear();
  EXPECT_EQ(CodeOf([&] { ExpandGrid(grid); }), ErrorCode::kEmptyGrid);
  EXPECT_EQ(CodeOf([] { RunSweep({}); }), ErrorCode::kEmptyGrid);
}

TEST(Sweep, IrrelevantAxesCollapse) {
  SweepGrid grid;
  grid.networks = {NetworkKind::kRandom};
  grid.nodes = {50};
  grid.k = {4, 6};
  grid.m = {1, 2};
  grid.sources = {2, 4};
  grid.targets = {5};
  grid.policies = {PolicyKind::kRandomWalk};
  grid.metrics = {Metric::kDegree, Metric::kCloseness};
  const std::vector<ExperimentConfig> cells = ExpandGrid(grid);
  ASSERT_EQ(cells.size(), 2u);
  EXPECT_EQ(cells[0].walkers, 2u);
  EXPECT_EQ(cells[1].walkers, 4u);
}

TEST(Sweep, ReductionsPairMatchingCells) {
  const SweepResult sweep = RunSweep(ExpandGrid(TwoByTwoGrid()));
  const std::vector<ReductionRow> rows = ComputeReductions(sweep.summary);
  ASSERT_EQ(rows.size(), 2u);
  for (const ReductionRow& row : rows) {
    EXPECT_EQ(row.matched_cells, 1u);
    EXPECT_EQ(row.metric, Metric::kDegree);
    const auto find = [&](PolicyKind kind) {
      for (const SummaryRow& s : sweep.summary) {
        if (s.config.generator.kind == row.network && s.config.policy.kind == kind) {
          return s.ticks.mean;
        }
      }
      return -1.0;
    };
    EXPECT_DOUBLE_EQ(row.reduction_pct,
                     TimeReduction(find(PolicyKind::kRandomWalk),
                                   find(PolicyKind::kCentralityWalk)));
  }
  SweepGrid no_baseline = TwoByTwoGrid();
  no_baseline.policies = {PolicyKind::kCentralityWalk};
  no_baseline.repetitions = {1};
  EXPECT_TRUE(ComputeReductions(RunSweep(ExpandGrid(no_baseline)).summary).empty());
}

TEST(Sweep, Deterministic) {
  const std::vector<ExperimentConfig> cells = ExpandGrid(TwoByTwoGrid());
  const SweepResult a = RunSweep(cells, 1);
  const SweepResult b = RunSweep(cells, 3);
  EXPECT_EQ(FormatRawCsv(a), FormatRawCsv(b));
  EXPECT_EQ(FormatSummaryCsv(a.summary), FormatSummaryCsv(b.summary));
  EXPECT_EQ(FormatReductionCsv(ComputeReductions(a.summary)),
            FormatReductionCsv(ComputeReductions(b.summary)));
}

TEST(Sweep, RunLogRecordsRestrictedPlacement) {
  SweepGrid grid;
  grid.networks = {NetworkKind::kRandom};
  grid.nodes = {200};
  grid.p_edge = {1.5 / 199.0};
  grid.sources = {2};
  grid.targets = {5};
  grid.repetitions = {2};
  const SweepResult sweep = RunSweep(ExpandGrid(grid));
  const std::string log = FormatRunLog(sweep);
  EXPECT_EQ(log.rfind("rng: ", 0), 0u);
  EXPECT_NE(log.find("placement restricted to largest component"), std::string::npos);
}

TEST(Formatters, SeriesCsv) {
  EXPECT_EQ(FormatSeriesCsv({{2, 0}, {3, 1}}),
            "tick,visited_nodes,visited_targets\n1,2,0\n2,3,1\n");
}

}  // namespace
}  // namespace gridwalk
