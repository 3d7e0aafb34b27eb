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

#ifndef GRIDWALK_GRAPH_H_
#define GRIDWALK_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace gridwalk {

using NodeId = std::uint32_t;

// Producers are Source nodes, consumers are Target nodes.
enum class Role : std::uint8_t { kPlain, kSource, kTarget };

// Undirected simple graph over dense node ids 0..n-1.
//
// Each adjacency list is kept sorted, which makes edge iteration order (and
// therefore every seeded computation driven by it) independent of insertion
// history. Besides the topology the graph carries a role tag and a visited
// flag per node; the visited flags are the only state a simulation mutates.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t node_count);

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  // Throws Error{kSelfLoop, kDuplicateEdge, kOutOfRange}.
  void AddEdge(NodeId u, NodeId v);
  // Throws Error{kOutOfRange} on bad ids or kInvalidArgument if absent.
  void RemoveEdge(NodeId u, NodeId v);
  bool HasEdge(NodeId u, NodeId v) const;

  // Sorted, never contains v. Throws Error{kOutOfRange}.
  std::span<const NodeId> Neighbors(NodeId v) const;
  std::size_t Degree(NodeId v) const { return Neighbors(v).size(); }

  Role role(NodeId v) const;
  void set_role(NodeId v, Role role);
  void ClearRoles();
  std::vector<NodeId> NodesWithRole(Role role) const;

  bool visited(NodeId v) const;
  // Visited flags are monotone within a run; there is deliberately no way to
  // unset a single flag.
  void MarkVisited(NodeId v);
  void ClearVisited();
  std::size_t VisitedCount() const { return visited_count_; }

  // Edges as (u, v) with u < v in ascending order.
  std::vector<std::pair<NodeId, NodeId>> Edges() const;

  void CheckNode(NodeId v) const;

 private:
  std::vector<std::vector<NodeId>> adjacency_;
  std::vector<Role> roles_;
  std::vector<std::uint8_t> visited_;
  std::size_t edge_count_ = 0;
  std::size_t visited_count_ = 0;
};

// Hop distances from one origin. Unreachable nodes hold std::nullopt.
struct DistanceVector {
  NodeId origin = 0;
  std::vector<std::optional<std::uint32_t>> hops;

  bool reachable(NodeId v) const { return hops[v].has_value(); }
};

DistanceVector BfsDistances(const Graph& g, NodeId source);

struct PathCounts {
  // sigma[v] is the number of distinct shortest source->v paths (0 when v is
  // unreachable). sigma[source] == 1.
  std::vector<std::uint64_t> sigma;
  DistanceVector distance;
};

PathCounts ShortestPathCounts(const Graph& g, NodeId source);

// Local clustering: links among neighbors over deg*(deg-1)/2, 0 for deg < 2.
double ClusteringCoefficient(const Graph& g, NodeId v);
double MeanClusteringCoefficient(const Graph& g);

// Node set (ascending) of a maximum-cardinality connected component; among
// equally large components the one holding the smallest node id wins.
std::vector<NodeId> LargestComponent(const Graph& g);

// Mean hop distance over all ordered reachable pairs (s != t).
double MeanShortestPathLength(const Graph& g);

}  // namespace gridwalk

#endif  // GRIDWALK_GRAPH_H_
