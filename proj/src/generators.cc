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

#include "gridwalk/generators.h"

#include <algorithm>
#include <string>
#include <vector>

#include "gridwalk/error.h"
#include "gridwalk/rng.h"

namespace gridwalk {

std::string_view NetworkKindName(NetworkKind kind) {
  switch (kind) {
    case NetworkKind::kSmallWorld: return "small-world";
    case NetworkKind::kScaleFree: return "scale-free";
    case NetworkKind::kRandom: return "random";
  }
  return "small-world";
}

std::optional<NetworkKind> ParseNetworkKind(std::string_view name) {
  if (name == "small-world") return NetworkKind::kSmallWorld;
  if (name == "scale-free") return NetworkKind::kScaleFree;
  if (name == "random") return NetworkKind::kRandom;
  return std::nullopt;
}

double GeneratorSpec::EffectivePEdge() const {
  if (p_edge) return *p_edge;
  if (nodes < 2) return 0.0;
  return std::min(1.0, 4.0 / static_cast<double>(nodes - 1));
}

Graph GenerateRandom(std::size_t n, double p_edge, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::kInvalidNodeCount, "random graph needs n >= 1");
  if (!(p_edge >= 0.0 && p_edge <= 1.0)) {
    throw Error(ErrorCode::kInvalidProbability,
                "p_edge=" + std::to_string(p_edge) + " not in [0,1]");
  }
  Graph g(n);
  Rng rng(seed, "gen-random");
  for (NodeId u = 0; u + 1 < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (rng.Bernoulli(p_edge)) g.AddEdge(u, v);
    }
  }
  return g;
}

Graph GenerateScaleFree(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n < 2) throw Error(ErrorCode::kInvalidNodeCount, "scale-free graph needs n >= 2");
  if (m < 1 || m >= n) {
    throw Error(ErrorCode::kInvalidM, "m=" + std::to_string(m) +
                                          " must satisfy 1 <= m < n=" +
                                          std::to_string(n));
  }
  Graph g(n);
  Rng rng(seed, "gen-scale-free");
  // Every edge endpoint appears once here, so a uniform pick from this list is
  // a pick proportional to degree.
  std::vector<NodeId> endpoints;
  endpoints.reserve(2 * m * n);
  g.AddEdge(0, 1);
  endpoints.push_back(0);
  endpoints.push_back(1);

  std::vector<NodeId> chosen;
  for (NodeId fresh = 2; fresh < n; ++fresh) {
    const std::size_t want = std::min<std::size_t>(m, fresh);
    chosen.clear();
    while (chosen.size() < want) {
      const NodeId pick = endpoints[rng.UniformIndex(endpoints.size())];
      if (std::find(chosen.begin(), chosen.end(), pick) == chosen.end()) {
        chosen.push_back(pick);
      }
    }
    for (NodeId old : chosen) {
      g.AddEdge(fresh, old);
      endpoints.push_back(fresh);
      endpoints.push_back(old);
    }
  }
  return g;
}

Graph GenerateSmallWorld(std::size_t n, std::size_t k, double p_rewire,
                         std::uint64_t seed) {
  if (k % 2 != 0 || k < 2 || k >= n) {
    throw Error(ErrorCode::kInvalidK, "k=" + std::to_string(k) +
                                          " must be even with 2 <= k < n=" +
                                          std::to_string(n));
  }
  if (!(p_rewire >= 0.0 && p_rewire <= 1.0)) {
    throw Error(ErrorCode::kInvalidProbability,
                "p_rewire=" + std::to_string(p_rewire) + " not in [0,1]");
  }
  Graph g(n);
  const std::size_t half = k / 2;
  for (std::size_t j = 1; j <= half; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      // k < n keeps every (i, i+j) pair distinct, so this never duplicates.
      g.AddEdge(static_cast<NodeId>(i), static_cast<NodeId>((i + j) % n));
    }
  }

  Rng rng(seed, "gen-small-world");
  for (std::size_t j = 1; j <= half; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto near = static_cast<NodeId>(i);
      const auto far = static_cast<NodeId>((i + j) % n);
      if (!rng.Bernoulli(p_rewire)) continue;
      // The lattice edge may already have been rewired away from its other end.
      if (!g.HasEdge(near, far)) continue;
      if (g.Degree(near) >= n - 1) continue;  // no non-neighbor exists
      NodeId replacement;
      do {
        replacement = static_cast<NodeId>(rng.UniformIndex(n));
      } while (replacement == near || g.HasEdge(near, replacement));
      g.RemoveEdge(near, far);
      g.AddEdge(near, replacement);
    }
  }
  return g;
}

Graph Generate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case NetworkKind::kSmallWorld:
      return GenerateSmallWorld(spec.nodes, spec.k, spec.p_rewire, spec.seed);
    case NetworkKind::kScaleFree:
      return GenerateScaleFree(spec.nodes, spec.m, spec.seed);
    case NetworkKind::kRandom:
      return GenerateRandom(spec.nodes, spec.EffectivePEdge(), spec.seed);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown network kind");
}

}  // namespace gridwalk
