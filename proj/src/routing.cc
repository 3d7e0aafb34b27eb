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

#include "gridwalk/routing.h"

#include <algorithm>
#include <utility>

#include "gridwalk/error.h"

namespace gridwalk {
namespace {

void MoveTo(Graph& g, Walker& walker, NodeId dest) {
  walker.location = dest;
  g.MarkVisited(dest);
  walker.trail.push_back(dest);
}

std::vector<NodeId> Candidates(const Graph& g, const Walker& walker,
                               const RoutingPolicy& policy) {
  const auto nbrs = g.Neighbors(walker.location);
  std::vector<NodeId> out;
  if (!policy.avoid_visited) {
    out.assign(nbrs.begin(), nbrs.end());
    return out;
  }
  for (NodeId w : nbrs) {
    if (!g.visited(w)) out.push_back(w);
  }
  return out;
}

// Handles an empty candidate set. Returns true if the walker moved.
bool ApplyDeadEnd(Graph& g, Walker& walker, const RoutingPolicy& policy,
                  Rng& rng) {
  const auto nbrs = g.Neighbors(walker.location);
  if (nbrs.empty() || policy.dead_end == DeadEnd::kDie) {
    walker.finished = true;
    return false;
  }
  MoveTo(g, walker, nbrs[rng.UniformIndex(nbrs.size())]);
  return true;
}

}  // namespace

std::string_view PolicyKindName(PolicyKind kind) {
  return kind == PolicyKind::kRandomWalk ? "random-walk" : "centrality";
}

std::optional<PolicyKind> ParsePolicyKind(std::string_view name) {
  if (name == "random-walk") return PolicyKind::kRandomWalk;
  if (name == "centrality") return PolicyKind::kCentralityWalk;
  return std::nullopt;
}

std::string_view DeadEndName(DeadEnd dead_end) {
  return dead_end == DeadEnd::kDie ? "die" : "random-any-neighbor";
}

std::optional<DeadEnd> ParseDeadEnd(std::string_view name) {
  if (name == "die") return DeadEnd::kDie;
  if (name == "random-any-neighbor") return DeadEnd::kRandomAnyNeighbor;
  return std::nullopt;
}

std::string RoutingPolicy::Label() const {
  if (kind == PolicyKind::kRandomWalk) return "random-walk";
  return "centrality-" + std::string(MetricName(metric));
}

std::string_view StatusName(SimStatus status, StallReason reason) {
  switch (status) {
    case SimStatus::kRunning: return "running";
    case SimStatus::kComplete: return "complete";
    case SimStatus::kStalled:
      return reason == StallReason::kBudget ? "stalled-budget" : "stalled";
  }
  return "running";
}

std::vector<Walker> InitWalkers(Graph& g, std::size_t n_walkers) {
  const std::vector<NodeId> sources = g.NodesWithRole(Role::kSource);
  if (sources.empty()) throw Error(ErrorCode::kNoSources, "graph has no source nodes");
  if (n_walkers == 0) throw Error(ErrorCode::kInvalidArgument, "need at least one walker");
  std::vector<Walker> walkers(n_walkers);
  for (std::size_t i = 0; i < n_walkers; ++i) {
    walkers[i].id = i;
    walkers[i].location = sources[i % sources.size()];
    walkers[i].trail = {walkers[i].location};
    g.MarkVisited(walkers[i].location);
  }
  return walkers;
}

bool StepRandomWalk(Graph& g, Walker& walker, const RoutingPolicy& policy,
                    Rng& rng) {
  if (!policy.avoid_visited) {
    const auto nbrs = g.Neighbors(walker.location);
    if (nbrs.empty()) {
      walker.finished = true;
      return false;
    }
    MoveTo(g, walker, nbrs[rng.UniformIndex(nbrs.size())]);
    return true;
  }
  const std::vector<NodeId> candidates = Candidates(g, walker, policy);
  if (candidates.empty()) return ApplyDeadEnd(g, walker, policy, rng);
  MoveTo(g, walker, candidates[rng.UniformIndex(candidates.size())]);
  return true;
}

bool StepCentralityWalk(Graph& g, Walker& walker, const RoutingPolicy& policy,
                        const CentralityTable& table, Rng& rng) {
  if (table.score.size() != g.node_count()) {
    throw Error(ErrorCode::kInvalidArgument, "centrality table does not match graph");
  }
  std::vector<NodeId> candidates = Candidates(g, walker, policy);
  if (candidates.empty()) return ApplyDeadEnd(g, walker, policy, rng);

  double best = table.score[candidates.front()];
  for (NodeId c : candidates) best = std::max(best, table.score[c]);
  // Keep only the maximizers, in place.
  std::erase_if(candidates, [&](NodeId c) { return table.score[c] != best; });
  const NodeId dest = candidates.size() == 1
                          ? candidates.front()
                          : candidates[rng.UniformIndex(candidates.size())];
  MoveTo(g, walker, dest);
  return true;
}

Simulation::Simulation(Graph graph, RoutingPolicy policy,
                       std::optional<CentralityTable> centrality,
                       std::size_t n_walkers, std::uint64_t seed)
    : graph_(std::move(graph)),
      policy_(policy),
      centrality_(std::move(centrality)),
      rng_(seed, "walk") {
  if (policy_.kind == PolicyKind::kCentralityWalk) {
    if (!centrality_ || centrality_->metric != policy_.metric) {
      throw Error(ErrorCode::kMissingCentrality,
                  "centrality walk needs a precomputed " +
                      std::string(MetricName(policy_.metric)) + " table");
    }
    if (centrality_->score.size() != graph_.node_count()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "centrality table does not match graph");
    }
  }
  targets_ = graph_.NodesWithRole(Role::kTarget);
  walkers_ = InitWalkers(graph_, n_walkers);
  UpdateStatus();
}

std::size_t Simulation::VisitedTargets() const {
  return static_cast<std::size_t>(std::count_if(
      targets_.begin(), targets_.end(),
      [&](NodeId t) { return graph_.visited(t); }));
}

std::size_t Simulation::AliveWalkers() const {
  return static_cast<std::size_t>(std::count_if(
      walkers_.begin(), walkers_.end(),
      [](const Walker& w) { return w.alive(); }));
}

void Simulation::UpdateStatus() {
  if (VisitedTargets() == targets_.size()) {
    status_ = SimStatus::kComplete;
  } else if (AliveWalkers() == 0) {
    status_ = SimStatus::kStalled;
    stall_reason_ = StallReason::kNoWalkers;
  }
}

void Simulation::Tick() {
  if (status_ != SimStatus::kRunning) {
    throw Error(ErrorCode::kNotRunning, "tick on a finished simulation");
  }
  for (Walker& walker : walkers_) {
    if (!walker.alive()) continue;
    if (policy_.kind == PolicyKind::kRandomWalk) {
      StepRandomWalk(graph_, walker, policy_, rng_);
    } else {
      StepCentralityWalk(graph_, walker, policy_, *centrality_, rng_);
    }
  }
  series_.push_back({graph_.VisitedCount(), VisitedTargets()});
  UpdateStatus();
}

RunOutcome Simulation::Run(std::size_t max_ticks) {
  if (max_ticks < 1) throw Error(ErrorCode::kInvalidArgument, "max_ticks must be >= 1");
  while (status_ == SimStatus::kRunning && series_.size() < max_ticks) Tick();
  if (status_ == SimStatus::kRunning) {
    status_ = SimStatus::kStalled;
    stall_reason_ = StallReason::kBudget;
  }
  return Outcome();
}

RunOutcome Simulation::Outcome() const {
  RunOutcome out;
  out.ticks = series_.size();
  out.status = status_;
  out.stall_reason = stall_reason_;
  out.series = series_;
  out.alive_walkers = AliveWalkers();
  out.visited_targets = VisitedTargets();
  out.total_targets = targets_.size();
  return out;
}

}  // namespace gridwalk
