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

#ifndef GRIDWALK_CENTRALITY_H_
#define GRIDWALK_CENTRALITY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gridwalk/graph.h"

namespace gridwalk {

enum class Metric { kDegree, kCloseness, kBetweenness, kEigenvector };

inline constexpr Metric kAllMetrics[] = {Metric::kDegree, Metric::kCloseness,
                                         Metric::kBetweenness,
                                         Metric::kEigenvector};

std::string_view MetricName(Metric metric);
std::optional<Metric> ParseMetric(std::string_view name);

struct CentralityTable {
  Metric metric = Metric::kDegree;
  std::vector<double> score;  // one finite, non-negative entry per node
};

struct EigenvectorOptions {
  double tol = 1e-10;
  int max_iter = 1000;
};

// score(v) = deg(v).
CentralityTable DegreeCentrality(const Graph& g);

// Harmonic form: score(i) = sum over reachable t != i of 1 / dist(i, t).
CentralityTable ClosenessCentrality(const Graph& g);

// Raw sum over unordered pairs {s, t} not containing i of sigma_st(i) /
// sigma_st. Accumulated over BFS DAGs (Brandes) in O(|V||E|).
CentralityTable BetweennessCentrality(const Graph& g);

// Dominant adjacency eigenvector, L2-normalized, by power iteration from the
// uniform vector. The iteration runs on A + I: same eigenvectors, but the
// dominant eigenvalue is strictly largest in modulus even for bipartite
// graphs, where plain A-iteration oscillates forever.
// Throws Error{kNoEdges} on an edgeless graph and Error{kNotConverged} when
// max_iter iterations leave the max-norm step >= tol.
CentralityTable EigenvectorCentrality(const Graph& g,
                                      const EigenvectorOptions& options = {});

// Dispatches on `metric` and bumps CentralityComputationCount().
CentralityTable ComputeCentrality(const Graph& g, Metric metric,
                                  const EigenvectorOptions& options = {});

// Process-wide count of ComputeCentrality calls. Instrumentation used to check
// that a simulation run precomputes its table once and never in the walk loop.
std::uint64_t CentralityComputationCount();

// node_id,degree,closeness,betweenness,eigenvector with 12 significant digits.
std::string FormatCentralityCsv(const Graph& g,
                                const EigenvectorOptions& options = {});

}  // namespace gridwalk

#endif  // GRIDWALK_CENTRALITY_H_
