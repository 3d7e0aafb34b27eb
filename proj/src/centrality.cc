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

#include "gridwalk/centrality.h"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iterator>

#include "gridwalk/error.h"

namespace gridwalk {
namespace {

std::atomic<std::uint64_t> computation_count{0};

}  // namespace

std::string_view MetricName(Metric metric) {
  switch (metric) {
    case Metric::kDegree: return "degree";
    case Metric::kCloseness: return "closeness";
    case Metric::kBetweenness: return "betweenness";
    case Metric::kEigenvector: return "eigenvector";
  }
  return "degree";
}

std::optional<Metric> ParseMetric(std::string_view name) {
  for (Metric m : kAllMetrics) {
    if (MetricName(m) == name) return m;
  }
  return std::nullopt;
}

CentralityTable DegreeCentrality(const Graph& g) {
  CentralityTable table{Metric::kDegree, std::vector<double>(g.node_count())};
  for (NodeId v = 0; v < g.node_count(); ++v) {
    table.score[v] = static_cast<double>(g.Degree(v));
  }
  return table;
}

CentralityTable ClosenessCentrality(const Graph& g) {
  CentralityTable table{Metric::kCloseness, std::vector<double>(g.node_count())};
  for (NodeId s = 0; s < g.node_count(); ++s) {
    const DistanceVector dist = BfsDistances(g, s);
    double sum = 0.0;
    for (NodeId t = 0; t < g.node_count(); ++t) {
      if (t != s && dist.hops[t]) sum += 1.0 / static_cast<double>(*dist.hops[t]);
    }
    table.score[s] = sum;
  }
  return table;
}

CentralityTable BetweennessCentrality(const Graph& g) {
  const std::size_t n = g.node_count();
  CentralityTable table{Metric::kBetweenness, std::vector<double>(n, 0.0)};
  std::vector<NodeId> order;
  std::vector<std::int64_t> dist(n);
  std::vector<double> sigma(n);
  std::vector<double> delta(n);
  order.reserve(n);

  for (NodeId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    order.clear();
    dist[s] = 0;
    sigma[s] = 1.0;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const NodeId v = order[head];
      for (NodeId w : g.Neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          order.push_back(w);
        }
        if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const NodeId v = *it;
      for (NodeId w : g.Neighbors(v)) {
        if (dist[w] == dist[v] + 1) {
          delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
        }
      }
      if (v != s) table.score[v] += delta[v];
    }
  }
  // Each unordered pair was counted from both ends.
  for (double& score : table.score) score /= 2.0;
  return table;
}

CentralityTable EigenvectorCentrality(const Graph& g,
                                      const EigenvectorOptions& options) {
  if (g.edge_count() == 0) {
    throw Error(ErrorCode::kNoEdges, "eigenvector centrality of an edgeless graph");
  }
  const std::size_t n = g.node_count();
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> next(n);
  for (int iter = 0; iter < options.max_iter; ++iter) {
    double norm_sq = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      double acc = x[v];
      for (NodeId w : g.Neighbors(v)) acc += x[w];
      next[v] = acc;
      norm_sq += acc * acc;
    }
    const double inv_norm = 1.0 / std::sqrt(norm_sq);
    double step = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      next[v] *= inv_norm;
      step = std::max(step, std::abs(next[v] - x[v]));
    }
    x.swap(next);
    if (step < options.tol) return {Metric::kEigenvector, std::move(x)};
  }
  throw Error(ErrorCode::kNotConverged,
              fmt::format("power iteration did not reach tol={} within {} "
                          "iterations",
                          options.tol, options.max_iter));
}

CentralityTable ComputeCentrality(const Graph& g, Metric metric,
                                  const EigenvectorOptions& options) {
  computation_count.fetch_add(1, std::memory_order_relaxed);
  switch (metric) {
    case Metric::kDegree: return DegreeCentrality(g);
    case Metric::kCloseness: return ClosenessCentrality(g);
    case Metric::kBetweenness: return BetweennessCentrality(g);
    case Metric::kEigenvector: return EigenvectorCentrality(g, options);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown metric");
}

std::uint64_t CentralityComputationCount() {
  return computation_count.load(std::memory_order_relaxed);
}

std::string FormatCentralityCsv(const Graph& g,
                                const EigenvectorOptions& options) {
  const auto degree = DegreeCentrality(g);
  const auto closeness = ClosenessCentrality(g);
  const auto betweenness = BetweennessCentrality(g);
  const auto eigenvector = EigenvectorCentrality(g, options);
  std::string out = "node_id,degree,closeness,betweenness,eigenvector\n";
  auto it = std::back_inserter(out);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    fmt::format_to(it, "{},{:.12g},{:.12g},{:.12g},{:.12g}\n", v,
                   degree.score[v], closeness.score[v], betweenness.score[v],
                   eigenvector.score[v]);
  }
  return out;
}

}  // namespace gridwalk
