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

#ifndef GRIDWALK_ROUTING_H_
#define GRIDWALK_ROUTING_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gridwalk/centrality.h"
#include "gridwalk/graph.h"
#include "gridwalk/rng.h"

namespace gridwalk {

enum class PolicyKind { kRandomWalk, kCentralityWalk };
enum class DeadEnd { kDie, kRandomAnyNeighbor };

std::string_view PolicyKindName(PolicyKind kind);
std::optional<PolicyKind> ParsePolicyKind(std::string_view name);
std::string_view DeadEndName(DeadEnd dead_end);
std::optional<DeadEnd> ParseDeadEnd(std::string_view name);

struct RoutingPolicy {
  PolicyKind kind = PolicyKind::kRandomWalk;
  Metric metric = Metric::kDegree;  // CentralityWalk only
  bool avoid_visited = true;
  DeadEnd dead_end = DeadEnd::kDie;

  // "random-walk" or "centrality-<metric>".
  std::string Label() const;
};

struct Walker {
  std::size_t id = 0;
  NodeId location = 0;
  bool finished = false;  // set when the walker dies at a dead end
  std::vector<NodeId> trail;

  bool alive() const { return !finished; }
};

// Walker i starts on source (i mod #sources), sources taken in ascending id
// order. Every occupied source is marked visited. Throws Error{kNoSources} or
// Error{kInvalidArgument} for zero walkers.
std::vector<Walker> InitWalkers(Graph& g, std::size_t n_walkers);

// One move of a walker. Both return true when the walker moved and false when
// it died. Candidates are the unvisited neighbors (avoid_visited) or all of
// them; an empty candidate set falls back to policy.dead_end, and a node with
// no neighbors at all always kills the walker.
bool StepRandomWalk(Graph& g, Walker& walker, const RoutingPolicy& policy,
                    Rng& rng);
// Moves to the candidate with the highest score; exact ties are broken
// uniformly at random. The table is read-only: no centrality is ever computed
// inside the walk loop.
bool StepCentralityWalk(Graph& g, Walker& walker, const RoutingPolicy& policy,
                        const CentralityTable& table, Rng& rng);

enum class SimStatus { kRunning, kComplete, kStalled };
enum class StallReason { kNone, kNoWalkers, kBudget };

struct TickRecord {
  std::size_t visited_nodes = 0;
  std::size_t visited_targets = 0;

  friend bool operator==(const TickRecord&, const TickRecord&) = default;
};

struct RunOutcome {
  std::size_t ticks = 0;
  SimStatus status = SimStatus::kRunning;
  StallReason stall_reason = StallReason::kNone;
  std::vector<TickRecord> series;
  std::size_t alive_walkers = 0;
  std::size_t visited_targets = 0;
  std::size_t total_targets = 0;

  friend bool operator==(const RunOutcome&, const RunOutcome&) = default;
};

// Single-owner state of one simulation run. Owns its graph copy, whose visited
// flags are the only thing the run mutates.
class Simulation {
 public:
  // Throws Error{kMissingCentrality} when a CentralityWalk policy comes
  // without a table for its metric, plus the InitWalkers errors.
  Simulation(Graph graph, RoutingPolicy policy,
             std::optional<CentralityTable> centrality, std::size_t n_walkers,
             std::uint64_t seed);

  // Steps every alive walker once in ascending id order, appends the tick
  // record and recomputes the status. Throws Error{kNotRunning} once terminal.
  void Tick();

  // Ticks until terminal or max_ticks ticks have elapsed in total; a run that
  // is still going at that point becomes Stalled with reason kBudget.
  RunOutcome Run(std::size_t max_ticks);

  const Graph& graph() const { return graph_; }
  const std::vector<Walker>& walkers() const { return walkers_; }
  const RoutingPolicy& policy() const { return policy_; }
  std::size_t ticks() const { return series_.size(); }
  const std::vector<TickRecord>& series() const { return series_; }
  SimStatus status() const { return status_; }
  StallReason stall_reason() const { return stall_reason_; }
  std::size_t total_targets() const { return targets_.size(); }
  std::size_t VisitedTargets() const;
  std::size_t AliveWalkers() const;

 private:
  void UpdateStatus();
  RunOutcome Outcome() const;

  Graph graph_;
  RoutingPolicy policy_;
  std::optional<CentralityTable> centrality_;
  std::vector<NodeId> targets_;
  std::vector<Walker> walkers_;
  Rng rng_;
  std::vector<TickRecord> series_;
  SimStatus status_ = SimStatus::kRunning;
  StallReason stall_reason_ = StallReason::kNone;
};

std::string_view StatusName(SimStatus status, StallReason reason);

}  // namespace gridwalk

#endif  // GRIDWALK_ROUTING_H_
