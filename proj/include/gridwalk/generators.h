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

#ifndef GRIDWALK_GENERATORS_H_
#define GRIDWALK_GENERATORS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "gridwalk/graph.h"

namespace gridwalk {

enum class NetworkKind { kSmallWorld, kScaleFree, kRandom };

std::string_view NetworkKindName(NetworkKind kind);
std::optional<NetworkKind> ParseNetworkKind(std::string_view name);

struct GeneratorSpec {
  NetworkKind kind = NetworkKind::kSmallWorld;
  std::size_t nodes = 500;
  std::size_t k = 4;          // small-world ring degree, even
  double p_rewire = 0.1;      // small-world
  std::size_t m = 1;          // scale-free edges per new node
  std::optional<double> p_edge;  // random; unset => mean degree 4
  std::uint64_t seed = 0;

  // p_edge if given, otherwise 4 / (nodes - 1) clamped to [0, 1].
  double EffectivePEdge() const;
};

// Erdos-Renyi G(n, p). Pairs are decided in the order (0,1),(0,2),...,
// (n-2,n-1), one uniform draw each.
Graph GenerateRandom(std::size_t n, double p_edge, std::uint64_t seed);

// Barabasi-Albert growth from the single edge 0-1. Node i >= 2 links to
// min(m, i) distinct earlier nodes, each drawn with probability proportional
// to its degree at the time node i arrives.
Graph GenerateScaleFree(std::size_t n, std::size_t m, std::uint64_t seed);

// Watts-Strogatz: ring lattice with k/2 neighbors on each side, then each
// lattice edge (i, i+j) has its far end rewired with probability p_rewire to a
// uniformly chosen node that is neither i nor already adjacent to i.
Graph GenerateSmallWorld(std::size_t n, std::size_t k, double p_rewire,
                         std::uint64_t seed);

Graph Generate(const GeneratorSpec& spec);

}  // namespace gridwalk

#endif  // GRIDWALK_GENERATORS_H_
