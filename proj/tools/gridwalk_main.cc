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

// gridwalk: generate networks, compute centrality, and run walker
// simulations and sweeps from a config file plus flag overrides.
//
// Exit codes: 0 success, 1 usage or config error, 2 runtime error.

#include <fmt/format.h>

#include <cstdio>
#include <exception>
#include <functional>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gridwalk/centrality.h"
#include "gridwalk/config.h"
#include "gridwalk/error.h"
#include "gridwalk/experiments.h"
#include "gridwalk/generators.h"
#include "gridwalk/graph.h"
#include "gridwalk/graph_io.h"
#include "gridwalk/rng.h"
#include "gridwalk/svg.h"

namespace gridwalk {
namespace {

namespace fs = std::filesystem;

constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;

struct Invocation {
  std::string config_path;
  std::string out_dir = ".";
  unsigned threads = 0;
  std::size_t run_index = 0;
  std::map<std::string, std::string> flags;
};

// Thrown for problems with the invocation itself, as opposed to failures
// while producing outputs.
struct UsageError {
  std::string message;
};

void AddConfigFlags(CLI::App* cmd, Invocation& inv) {
  cmd->add_option("--config", inv.config_path, "key=value config file");
  cmd->add_option("--out", inv.out_dir, "output directory")
      ->capture_default_str();
  for (std::string_view key : ConfigKeys()) {
    const std::string name(key);
    cmd->add_option("--" + name, inv.flags[name],
                    fmt::format("override config key '{}'", name));
  }
}

SweepGrid LoadGrid(const CLI::App* cmd, const Invocation& inv) {
  std::vector<ConfigEntry> entries;
  if (!inv.config_path.empty()) {
    std::string text;
    try {
      text = ReadTextFile(inv.config_path);
    } catch (const Error& e) {
      throw UsageError{e.what()};
    }
    entries = ParseConfigEntries(text);
  }
  std::vector<ConfigEntry> overrides;
  for (std::string_view key : ConfigKeys()) {
    const std::string name(key);
    if (cmd->get_option("--" + name)->count() > 0) {
      overrides.push_back({name, inv.flags.at(name), "flag --" + name});
    }
  }
  return BuildGrid(ApplyOverrides(std::move(entries), overrides));
}

bool SameGenerator(const GeneratorSpec& a, const GeneratorSpec& b) {
  return a.kind == b.kind && a.nodes == b.nodes && a.k == b.k &&
         a.p_rewire == b.p_rewire && a.m == b.m && a.p_edge == b.p_edge;
}

// Graph-only commands accept exactly one generator configuration.
GeneratorSpec SingleGenerator(const SweepGrid& grid) {
  const std::vector<ExperimentConfig> cells = ExpandGrid(grid);
  GeneratorSpec spec = cells.front().generator;
  for (const ExperimentConfig& c : cells) {
    if (!SameGenerator(c.generator, spec)) {
      throw UsageError{"config describes more than one network; "
                       "this command takes a single one"};
    }
  }
  spec.seed = grid.seed.value_or(0);
  return spec;
}

ExperimentConfig SingleCell(const SweepGrid& grid) {
  const std::vector<ExperimentConfig> cells = ExpandGrid(grid);
  if (cells.size() != 1) {
    throw UsageError{fmt::format(
        "config expands to {} cells; this command takes a single one "
        "(use sweep)",
        cells.size())};
  }
  return cells.front();
}

fs::path OutPath(const Invocation& inv, std::string_view name) {
  return fs::path(inv.out_dir) / name;
}

void EnsureOutDir(const Invocation& inv) {
  std::error_code ec;
  fs::create_directories(inv.out_dir, ec);
  if (ec) {
    throw Error(ErrorCode::kIo,
                fmt::format("cannot create {}: {}", inv.out_dir, ec.message()));
  }
}

// Each command is split into a prepare step (config errors, exit 1) and a
// returned action (runtime errors, exit 2).
using Action = std::function<void()>;

Action PrepareGenerate(const CLI::App* cmd, const Invocation& inv) {
  const GeneratorSpec spec = SingleGenerator(LoadGrid(cmd, inv));
  return [spec, &inv] {
    const Graph g = Generate(spec);
    EnsureOutDir(inv);
    WriteTextFile(OutPath(inv, "graph.edges"), FormatEdgeList(g));
    WriteTextFile(OutPath(inv, "graph.graphml"), FormatGraphML(g));
    fmt::print("nodes={} edges={} mean_clustering={:.6g}\n", g.node_count(),
               g.edge_count(), MeanClusteringCoefficient(g));
  };
}

Action PrepareCentrality(const CLI::App* cmd, const Invocation& inv) {
  const SweepGrid grid = LoadGrid(cmd, inv);
  const GeneratorSpec spec = SingleGenerator(grid);
  const EigenvectorOptions eigen = grid.eigen;
  return [spec, eigen, &inv] {
    const Graph g = Generate(spec);
    const std::string csv = FormatCentralityCsv(g, eigen);
    EnsureOutDir(inv);
    WriteTextFile(OutPath(inv, "centrality.csv"), csv);
    fmt::print("nodes={} edges={}\n", g.node_count(), g.edge_count());
  };
}

Action PrepareSimulate(const CLI::App* cmd, const Invocation& inv) {
  const SweepGrid grid = LoadGrid(cmd, inv);
  CheckRoleCounts(grid);
  const ExperimentConfig cfg = SingleCell(grid);
  return [cfg, &inv] {
    const RunResult r = RunOnce(cfg, inv.run_index);
    const std::string svg = RenderSeriesSvg(
        r.series, fmt::format("{} run {}", cfg.policy.Label(), r.run_index));
    EnsureOutDir(inv);
    WriteTextFile(OutPath(inv, "series.csv"), FormatSeriesCsv(r.series));
    WriteTextFile(OutPath(inv, "series.svg"), svg);
    fmt::print("run={} seed={} ticks={} status={} delivered={}/{} ({:.2f}%)\n",
               r.run_index, r.derived_seed, r.ticks, StatusName(r.status, r.stall_reason),
               r.delivered_targets, r.total_targets, r.delivery_rate_pct);
  };
}

Action PrepareSweep(const CLI::App* cmd, const Invocation& inv) {
  const SweepGrid grid = LoadGrid(cmd, inv);
  if (!grid.seed) {
    throw Error(ErrorCode::kMissingRequired,
                "sweep requires a seed (config key 'seed' or --seed)");
  }
  CheckRoleCounts(grid);
  const std::vector<ExperimentConfig> configs = ExpandGrid(grid);
  const std::string normalized = NormalizeConfig(grid);
  return [configs, normalized, &inv] {
    const SweepResult sweep = RunSweep(configs, inv.threads);
    const std::vector<ReductionRow> reductions = ComputeReductions(sweep.summary);

    EnsureOutDir(inv);
    WriteTextFile(OutPath(inv, "raw.csv"), FormatRawCsv(sweep));
    WriteTextFile(OutPath(inv, "summary.csv"), FormatSummaryCsv(sweep.summary));
    if (reductions.empty()) {
      WriteTextFile(OutPath(inv, "time_reduction.csv"), "");
      fmt::print(stderr,
                 "note: no random-walk baseline matches any centrality cell; "
                 "time_reduction.csv is empty\n");
    } else {
      WriteTextFile(OutPath(inv, "time_reduction.csv"),
                    FormatReductionCsv(reductions));
    }
    for (std::size_t id = 0; id < sweep.configs.size(); ++id) {
      // Each config is plotted from its first run.
      const RunResult& first = sweep.runs[id].front();
      WriteTextFile(
          OutPath(inv, fmt::format("config_{}.svg", id)),
          RenderSeriesSvg(first.series,
                          fmt::format("config {} ({} on {}), run 0", id,
                                      sweep.configs[id].policy.Label(),
                                      NetworkKindName(
                                          sweep.configs[id].generator.kind))));
    }
    WriteTextFile(OutPath(inv, "config.normalized"), normalized);
    WriteTextFile(OutPath(inv, "run.log"), FormatRunLog(sweep));

    std::size_t runs = 0;
    for (const auto& r : sweep.runs) runs += r.size();
    fmt::print("configs={} runs={} out={}\n", sweep.configs.size(), runs,
               inv.out_dir);
  };
}

Action PrepareExport(const CLI::App* cmd, const Invocation& inv) {
  const SweepGrid grid = LoadGrid(cmd, inv);
  CheckRoleCounts(grid);
  const ExperimentConfig cfg = SingleCell(grid);
  return [cfg, &inv] {
    const Graph g = BuildRunGraph(cfg, inv.run_index);
    const CentralityTable table =
        ComputeCentrality(g, cfg.policy.metric, cfg.eigen);
    EnsureOutDir(inv);
    WriteTextFile(OutPath(inv, "graph.edges"), FormatEdgeList(g));
    WriteTextFile(OutPath(inv, "graph.graphml"), FormatGraphML(g, table.score));
    fmt::print("run={} nodes={} edges={} sources={} targets={} metric={}\n",
               inv.run_index, g.node_count(), g.edge_count(),
               g.NodesWithRole(Role::kSource).size(),
               g.NodesWithRole(Role::kTarget).size(),
               MetricName(table.metric));
  };
}

bool IsConfigError(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownKey:
    case ErrorCode::kBadValue:
    case ErrorCode::kMissingRequired:
    case ErrorCode::kEmptyGrid:
      return true;
    default:
      return false;
  }
}

int Main(int argc, char** argv) {
  CLI::App app{"Walker routing experiments on generated networks"};
  app.require_subcommand(1);
  Invocation inv;

  struct Command {
    const char* name;
    const char* help;
    Action (*prepare)(const CLI::App*, const Invocation&);
    bool takes_run;
  };
  const Command commands[] = {
      {"generate", "write a network as an edge list and GraphML",
       PrepareGenerate, false},
      {"centrality", "write all centrality scores of a network",
       PrepareCentrality, false},
      {"simulate", "run one simulation and plot its tick series",
       PrepareSimulate, true},
      {"sweep", "run every config cell and write CSV summaries and plots",
       PrepareSweep, false},
      {"export", "write the graph of one run with roles and scores",
       PrepareExport, true},
  };
  std::vector<CLI::App*> subs;
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    AddConfigFlags(sub, inv);
    if (c.takes_run) {
      sub->add_option("--run", inv.run_index, "run index")->capture_default_str();
    } else if (std::string_view(c.name) == "sweep") {
      sub->add_option("--threads", inv.threads, "worker threads (0 = all cores)")
          ->capture_default_str();
    }
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  Action action;
  try {
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (subs[i]->parsed()) action = commands[i].prepare(subs[i], inv);
    }
  } catch (const UsageError& e) {
    fmt::print(stderr, "error: {}\n", e.message);
    return kExitUsage;
  } catch (const Error& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return IsConfigError(e.code()) ? kExitUsage : kExitRuntime;
  }

  try {
    action();
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitRuntime;
  }
  return 0;
}

}  // namespace
}  // namespace gridwalk

int main(int argc, char** argv) { return gridwalk::Main(argc, argv); }
