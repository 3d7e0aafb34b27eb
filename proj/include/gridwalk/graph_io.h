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

#ifndef GRIDWALK_GRAPH_IO_H_
#define GRIDWALK_GRAPH_IO_H_

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "gridwalk/graph.h"

namespace gridwalk {

// One "u v" line per edge, u < v, ascending.
std::string FormatEdgeList(const Graph& g);

// GraphML with a `role` attribute on every node and, when `scores` is
// non-empty, a `centrality` attribute (12 significant digits). Edges carry no
// data.
std::string FormatGraphML(const Graph& g, std::span<const double> scores = {});

std::string_view RoleName(Role role);

// Throws Error{kIo} with the offending path in the message.
void WriteTextFile(const std::filesystem::path& path, std::string_view text);
std::string ReadTextFile(const std::filesystem::path& path);

}  // namespace gridwalk

#endif  // GRIDWALK_GRAPH_IO_H_
