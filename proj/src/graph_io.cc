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

#include "gridwalk/graph_io.h"

#include <fmt/format.h>

#include <fstream>
#include <iterator>
#include <sstream>

#include "gridwalk/error.h"

namespace gridwalk {

std::string_view RoleName(Role role) {
  switch (role) {
    case Role::kPlain: return "plain";
    case Role::kSource: return "source";
    case Role::kTarget: return "target";
  }
  return "plain";
}

std::string FormatEdgeList(const Graph& g) {
  std::string out;
  for (const auto& [u, v] : g.Edges()) {
    fmt::format_to(std::back_inserter(out), "{} {}\n", u, v);
  }
  return out;
}

std::string FormatGraphML(const Graph& g, std::span<const double> scores) {
  if (!scores.empty() && scores.size() != g.node_count()) {
    throw Error(ErrorCode::kInvalidArgument,
                "score vector size does not match node count");
  }
  std::string out;
  auto it = std::back_inserter(out);
  fmt::format_to(it,
                 "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
                 "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
                 "  <key id=\"role\" for=\"node\" attr.name=\"role\" "
                 "attr.type=\"string\"/>\n");
  if (!scores.empty()) {
    fmt::format_to(it,
                   "  <key id=\"centrality\" for=\"node\" "
                   "attr.name=\"centrality\" attr.type=\"double\"/>\n");
  }
  fmt::format_to(it, "  <graph id=\"G\" edgedefault=\"undirected\">\n");
  for (NodeId v = 0; v < g.node_count(); ++v) {
    fmt::format_to(it, "    <node id=\"n{}\"><data key=\"role\">{}</data>", v,
                   RoleName(g.role(v)));
    if (!scores.empty()) {
      fmt::format_to(it, "<data key=\"centrality\">{:.12g}</data>", scores[v]);
    }
    fmt::format_to(it, "</node>\n");
  }
  for (const auto& [u, v] : g.Edges()) {
    fmt::format_to(it, "    <edge source=\"n{}\" target=\"n{}\"/>\n", u, v);
  }
  fmt::format_to(it, "  </graph>\n</graphml>\n");
  return out;
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw Error(ErrorCode::kIo, "cannot open " + path.string() + " for writing");
  }
  file.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!file) throw Error(ErrorCode::kIo, "write failed: " + path.string());
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

}  // namespace gridwalk
