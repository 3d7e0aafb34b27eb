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

#include "gridwalk/graph.h"

#include <algorithm>
#include <string>

#include "gridwalk/error.h"

namespace gridwalk {

Graph::Graph(std::size_t node_count)
    : adjacency_(node_count),
      roles_(node_count, Role::kPlain),
      visited_(node_count, 0) {}

void Graph::CheckNode(NodeId v) const {
  if (v >= adjacency_.size()) {
    throw Error(ErrorCode::kOutOfRange,
                "node " + std::to_string(v) + " >= node_count " +
                    std::to_string(adjacency_.size()));
  }
}

void Graph::AddEdge(NodeId u, NodeId v) {
  CheckNode(u);
  CheckNode(v);
  if (u == v) {
    throw Error(ErrorCode::kSelfLoop, "node " + std::to_string(u));
  }
  auto& adj_u = adjacency_[u];
  auto pos_u = std::lower_bound(adj_u.begin(), adj_u.end(), v);
  if (pos_u != adj_u.end() && *pos_u == v) {
    throw Error(ErrorCode::kDuplicateEdge,
                std::to_string(u) + "-" + std::to_string(v));
  }
  adj_u.insert(pos_u, v);
  auto& adj_v = adjacency_[v];
  adj_v.insert(std::lower_bound(adj_v.begin(), adj_v.end(), u), u);
  ++edge_count_;
}

void Graph::RemoveEdge(NodeId u, NodeId v) {
  CheckNode(u);
  CheckNode(v);
  auto& adj_u = adjacency_[u];
  auto pos_u = std::lower_bound(adj_u.begin(), adj_u.end(), v);
  if (pos_u == adj_u.end() || *pos_u != v) {
    throw Error(ErrorCode::kInvalidArgument,
                "no edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  adj_u.erase(pos_u);
  auto& adj_v = adjacency_[v];
  adj_v.erase(std::lower_bound(adj_v.begin(), adj_v.end(), u));
  --edge_count_;
}

bool Graph::HasEdge(NodeId u, NodeId v) const {
  CheckNode(u);
  CheckNode(v);
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::span<const NodeId> Graph::Neighbors(NodeId v) const {
  CheckNode(v);
  return adjacency_[v];
}

Role Graph::role(NodeId v) const {
  CheckNode(v);
  return roles_[v];
}

void Graph::set_role(NodeId v, Role role) {
  CheckNode(v);
  roles_[v] = role;
}

void Graph::ClearRoles() { std::fill(roles_.begin(), roles_.end(), Role::kPlain); }

std::vector<NodeId> Graph::NodesWithRole(Role role) const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < roles_.size(); ++v) {
    if (roles_[v] == role) out.push_back(v);
  }
  return out;
}

bool Graph::visited(NodeId v) const {
  CheckNode(v);
  return visited_[v] != 0;
}

void Graph::MarkVisited(NodeId v) {
  CheckNode(v);
  if (visited_[v] == 0) {
    visited_[v] = 1;
    ++visited_count_;
  }
}

void Graph::ClearVisited() {
  std::fill(visited_.begin(), visited_.end(), 0);
  visited_count_ = 0;
}

std::vector<std::pair<NodeId, NodeId>> Graph::Edges() const {
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(edge_count_);
  for (NodeId u = 0; u < adjacency_.size(); ++u) {
    for (NodeId v : adjacency_[u]) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return edges;
}

DistanceVector BfsDistances(const Graph& g, NodeId source) {
  return ShortestPathCounts(g, source).distance;
}

PathCounts ShortestPathCounts(const Graph& g, NodeId source) {
  g.CheckNode(source);
  const std::size_t n = g.node_count();
  PathCounts out;
  out.sigma.assign(n, 0);
  out.distance.origin = source;
  out.distance.hops.assign(n, std::nullopt);

  std::vector<NodeId> queue;
  queue.reserve(n);
  queue.push_back(source);
  out.distance.hops[source] = 0;
  out.sigma[source] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    const std::uint32_t du = *out.distance.hops[u];
    for (NodeId w : g.Neighbors(u)) {
      auto& dw = out.distance.hops[w];
      if (!dw) {
        dw = du + 1;
        queue.push_back(w);
      }
      if (*dw == du + 1) out.sigma[w] += out.sigma[u];
    }
  }
  return out;
}

double ClusteringCoefficient(const Graph& g, NodeId v) {
  const auto nbrs = g.Neighbors(v);
  const std::size_t deg = nbrs.size();
  if (deg < 2) return 0.0;
  std::size_t links = 0;
  for (std::size_t i = 0; i < deg; ++i) {
    const auto adj_i = g.Neighbors(nbrs[i]);
    // Both lists are sorted; count common members greater than nbrs[i] so that
    // every neighbor pair is seen once.
    auto it = std::upper_bound(nbrs.begin(), nbrs.end(), nbrs[i]);
    auto jt = std::upper_bound(adj_i.begin(), adj_i.end(), nbrs[i]);
    while (it != nbrs.end() && jt != adj_i.end()) {
      if (*it < *jt) {
        ++it;
      } else if (*jt < *it) {
        ++jt;
      } else {
        ++links;
        ++it;
        ++jt;
      }
    }
  }
  return static_cast<double>(links) /
         (static_cast<double>(deg) * static_cast<double>(deg - 1) / 2.0);
}

double MeanClusteringCoefficient(const Graph& g) {
  if (g.node_count() == 0) return 0.0;
  double sum = 0.0;
  for (NodeId v = 0; v < g.node_count(); ++v) sum += ClusteringCoefficient(g, v);
  return sum / static_cast<double>(g.node_count());
}

std::vector<NodeId> LargestComponent(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<NodeId> best;
  std::vector<NodeId> current;
  for (NodeId start = 0; start < n; ++start) {
    if (seen[start]) continue;
    current.clear();
    current.push_back(start);
    seen[start] = 1;
    for (std::size_t head = 0; head < current.size(); ++head) {
      for (NodeId w : g.Neighbors(current[head])) {
        if (!seen[w]) {
          seen[w] = 1;
          current.push_back(w);
        }
      }
    }
    // Components are discovered in order of their smallest member, so a strict
    // comparison keeps the earliest one on ties.
    if (current.size() > best.size()) best = current;
  }
  std::sort(best.begin(), best.end());
  return best;
}

double MeanShortestPathLength(const Graph& g) {
  double total = 0.0;
  std::uint64_t pairs = 0;
  for (NodeId s = 0; s < g.node_count(); ++s) {
    const DistanceVector dist = BfsDistances(g, s);
    for (NodeId t = 0; t < g.node_count(); ++t) {
      if (t != s && dist.hops[t]) {
        total += *dist.hops[t];
        ++pairs;
      }
    }
  }
  return pairs == 0 ? 0.0 : total / static_cast<double>(pairs);
}

}  // namespace gridwalk
