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

#ifndef GRIDWALK_CONFIG_H_
#define GRIDWALK_CONFIG_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gridwalk/experiments.h"

namespace gridwalk {

// Config files are line-oriented `key=value`; list-valued keys take
// comma-separated values. Blank lines and lines starting with '#' are
// skipped. Recognized keys:
//
//   network      small-world | scale-free | random        (required, list)
//   nodes        node count                                (required, list)
//   k, p-rewire  small-world ring degree / rewiring prob.  (list)
//   m            scale-free edges per new node             (list)
//   p-edge       random-graph edge probability or `auto`   (list)
//   sources, targets, walkers (`auto` pairs walkers with sources)
//   policy       random-walk | centrality                  (list)
//   metric       degree | closeness | betweenness | eigenvector (list)
//   avoid-visited true | false                             (list)
//   dead-end     die | random-any-neighbor                 (list)
//   repetitions, max-ticks (`auto` = 100 * nodes)          (list)
//   seed         master seed (single value)
//   eigen-tol, eigen-max-iter  power-iteration controls    (single value)
struct ConfigEntry {
  std::string key;
  std::string value;
  std::string origin;  // "line 3" or "flag --nodes", used in error messages
};

// Splits text into entries. Throws Error{kBadValue} for malformed lines and
// duplicate keys.
std::vector<ConfigEntry> ParseConfigEntries(std::string_view text);

// Replaces or appends entries; overrides win over file values.
std::vector<ConfigEntry> ApplyOverrides(std::vector<ConfigEntry> entries,
                                        const std::vector<ConfigEntry>& overrides);

// Validates entries into a grid. Throws Error{kUnknownKey, kBadValue,
// kMissingRequired}; messages name the entry origin.
SweepGrid BuildGrid(const std::vector<ConfigEntry>& entries);

SweepGrid ParseConfig(std::string_view text);

// Throws Error{kBadValue} when a cell asks for more sources + targets than it
// has nodes. Kept apart from BuildGrid because graph-only commands ignore the
// role counts.
void CheckRoleCounts(const SweepGrid& grid);

// Every key, in a fixed order, with defaults filled in. ParseConfig of the
// result reproduces the same grid.
std::string NormalizeConfig(const SweepGrid& grid);

bool IsKnownConfigKey(std::string_view key);
const std::vector<std::string_view>& ConfigKeys();

}  // namespace gridwalk

#endif  // GRIDWALK_CONFIG_H_
