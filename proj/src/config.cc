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

#include "gridwalk/config.h"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <iterator>
#include <optional>

#include "gridwalk/error.h"

namespace gridwalk {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> SplitList(std::string_view value) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = value.find(',', start);
    parts.push_back(Trim(value.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

[[noreturn]] void BadValue(const ConfigEntry& e, std::string_view why) {
  throw Error(ErrorCode::kBadValue,
              fmt::format("{}: {}={}: {}", e.origin, e.key, e.value, why));
}

std::optional<std::uint64_t> ParseU64(std::string_view s) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

std::optional<double> ParseDouble(std::string_view s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  if (!std::isfinite(v)) return std::nullopt;
  return v;
}

template <typename T, typename Fn>
std::vector<T> ParseList(const ConfigEntry& e, Fn&& parse_one) {
  std::vector<T> out;
  for (std::string_view item : SplitList(e.value)) {
    if (item.empty()) BadValue(e, "empty list element");
    out.push_back(parse_one(item));
  }
  return out;
}

std::size_t CountAtLeast(const ConfigEntry& e, std::string_view item,
                         std::uint64_t min) {
  const auto v = ParseU64(item);
  if (!v) BadValue(e, fmt::format("'{}' is not a non-negative integer", item));
  if (*v < min) BadValue(e, fmt::format("must be >= {}", min));
  return static_cast<std::size_t>(*v);
}

double Probability(const ConfigEntry& e, std::string_view item) {
  const auto v = ParseDouble(item);
  if (!v) BadValue(e, fmt::format("'{}' is not a number", item));
  if (*v < 0.0 || *v > 1.0) BadValue(e, "probability must lie in [0,1]");
  return *v;
}

bool Boolean(const ConfigEntry& e, std::string_view item) {
  if (item == "true") return true;
  if (item == "false") return false;
  BadValue(e, "expected true or false");
}

template <typename T>
std::string JoinList(const std::vector<T>& values,
                     const std::function<std::string(const T&)>& fmt_one) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += fmt_one(values[i]);
  }
  return out;
}

}  // namespace

const std::vector<std::string_view>& ConfigKeys() {
  static const std::vector<std::string_view> keys = {
      "network", "nodes",       "k",          "p-rewire",      "m",
      "p-edge",  "sources",     "targets",    "walkers",       "policy",
      "metric",  "avoid-visited", "dead-end", "repetitions",   "max-ticks",
      "seed",    "eigen-tol",   "eigen-max-iter"};
  return keys;
}

bool IsKnownConfigKey(std::string_view key) {
  const auto& keys = ConfigKeys();
  return std::find(keys.begin(), keys.end(), key) != keys.end();
}

std::vector<ConfigEntry> ParseConfigEntries(std::string_view text) {
  std::vector<ConfigEntry> entries;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    const std::string_view raw =
        text.substr(start, nl == std::string_view::npos ? text.size() - start
                                                        : nl - start);
    ++line_no;
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

    const std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    const std::string origin = fmt::format("line {}", line_no);
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kBadValue,
                  fmt::format("{}: expected key=value, got '{}'", origin, line));
    }
    ConfigEntry entry{std::string(Trim(line.substr(0, eq))),
                      std::string(Trim(line.substr(eq + 1))), origin};
    for (const ConfigEntry& prior : entries) {
      if (prior.key == entry.key) {
        throw Error(ErrorCode::kBadValue,
                    fmt::format("{}: duplicate key '{}' (first at {})", origin,
                                entry.key, prior.origin));
      }
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<ConfigEntry> ApplyOverrides(std::vector<ConfigEntry> entries,
                                        const std::vector<ConfigEntry>& overrides) {
  for (const ConfigEntry& o : overrides) {
    auto it = std::find_if(entries.begin(), entries.end(),
                           [&](const ConfigEntry& e) { return e.key == o.key; });
    if (it != entries.end()) {
      *it = o;
    } else {
      entries.push_back(o);
    }
  }
  return entries;
}

SweepGrid BuildGrid(const std::vector<ConfigEntry>& entries) {
  SweepGrid grid;
  bool has_network = false;
  bool has_nodes = false;
  for (const ConfigEntry& e : entries) {
    if (!IsKnownConfigKey(e.key)) {
      throw Error(ErrorCode::kUnknownKey,
                  fmt::format("{}: unknown key '{}'", e.origin, e.key));
    }
    if (e.value.empty()) BadValue(e, "empty value");
    const std::string_view key = e.key;
    if (key == "network") {
      has_network = true;
      grid.networks = ParseList<NetworkKind>(e, [&](std::string_view s) {
        const auto kind = ParseNetworkKind(s);
        if (!kind) BadValue(e, fmt::format("unknown network '{}'", s));
        return *kind;
      });
    } else if (key == "nodes") {
      has_nodes = true;
      grid.nodes = ParseList<std::size_t>(
          e, [&](std::string_view s) { return CountAtLeast(e, s, 1); });
    } else if (key == "k") {
      grid.k = ParseList<std::size_t>(e, [&](std::string_view s) {
        const std::size_t k = CountAtLeast(e, s, 2);
        if (k % 2 != 0) BadValue(e, "k must be even");
        return k;
      });
    } else if (key == "p-rewire") {
      grid.p_rewire = ParseList<double>(
          e, [&](std::string_view s) { return Probability(e, s); });
    } else if (key == "m") {
      grid.m = ParseList<std::size_t>(
          e, [&](std::string_view s) { return CountAtLeast(e, s, 1); });
    } else if (key == "p-edge") {
      grid.p_edge = ParseList<std::optional<double>>(
          e, [&](std::string_view s) -> std::optional<double> {
            if (s == "auto") return std::nullopt;
            return Probability(e, s);
          });
    } else if (key == "sources") {
      grid.sources = ParseList<std::size_t>(
          e, [&](std::string_view s) { return CountAtLeast(e, s, 1); });
    } else if (key == "targets") {
      grid.targets = ParseList<std::size_t>(
          e, [&](std::string_view s) { return CountAtLeast(e, s, 1); });
    } else if (key == "walkers") {
      if (e.value == "auto") {
        grid.walkers.clear();
      } else {
        grid.walkers = ParseList<std::size_t>(
            e, [&](std::string_view s) { return CountAtLeast(e, s, 1); });
      }
    } else if (key == "policy") {
      grid.policies = ParseList<PolicyKind>(e, [&](std::string_view s) {
        const auto p = ParsePolicyKind(s);
        if (!p) BadValue(e, fmt::format("unknown policy '{}'", s));
        return *p;
      });
    } else if (key == "metric") {
      grid.metrics = ParseList<Metric>(e, [&](std::string_view s) {
        const auto m = ParseMetric(s);
        if (!m) BadValue(e, fmt::format("unknown metric '{}'", s));
        return *m;
      });
    } else if (key == "avoid-visited") {
      grid.avoid_visited = ParseList<bool>(
          e, [&](std::string_view s) { return Boolean(e, s); });
    } else if (key == "dead-end") {
      grid.dead_ends = ParseList<DeadEnd>(e, [&](std::string_view s) {
        const auto d = ParseDeadEnd(s);
        if (!d) BadValue(e, fmt::format("unknown dead-end policy '{}'", s));
        return *d;
      });
    } else if (key == "repetitions") {
      grid.repetitions = ParseList<std::size_t>(
          e, [&](std::string_view s) { return CountAtLeast(e, s, 1); });
    } else if (key == "max-ticks") {
      grid.max_ticks = ParseList<std::optional<std::size_t>>(
          e, [&](std::string_view s) -> std::optional<std::size_t> {
            if (s == "auto") return std::nullopt;
            return CountAtLeast(e, s, 1);
          });
    } else if (key == "seed") {
      const auto v = ParseU64(e.value);
      if (!v) BadValue(e, "seed must be a 64-bit unsigned integer");
      grid.seed = *v;
    } else if (key == "eigen-tol") {
      const auto v = ParseDouble(e.value);
      if (!v || *v <= 0.0) BadValue(e, "tolerance must be a positive number");
      grid.eigen.tol = *v;
    } else if (key == "eigen-max-iter") {
      const auto v = ParseU64(e.value);
      if (!v || *v < 1 || *v > 1'000'000'000) BadValue(e, "must be in [1, 1e9]");
      grid.eigen.max_iter = static_cast<int>(*v);
    }
  }
  if (!has_network) throw Error(ErrorCode::kMissingRequired, "missing key 'network'");
  if (!has_nodes) throw Error(ErrorCode::kMissingRequired, "missing key 'nodes'");

  // Cross-field checks, per expanded cell.
  for (const ExperimentConfig& c : ExpandGrid(grid)) {
    const auto& g = c.generator;
    std::string why;
    if (g.kind == NetworkKind::kSmallWorld && g.k >= g.nodes) {
      why = fmt::format("small-world needs k={} < nodes={}", g.k, g.nodes);
    } else if (g.kind == NetworkKind::kScaleFree && g.m >= g.nodes) {
      why = fmt::format("scale-free needs m={} < nodes={}", g.m, g.nodes);
    }
    if (!why.empty()) throw Error(ErrorCode::kBadValue, "config: " + why);
  }
  return grid;
}

void CheckRoleCounts(const SweepGrid& grid) {
  for (const ExperimentConfig& c : ExpandGrid(grid)) {
    if (c.sources + c.targets > c.generator.nodes) {
      throw Error(ErrorCode::kBadValue,
                  fmt::format("config: sources={} + targets={} exceed nodes={}",
                              c.sources, c.targets, c.generator.nodes));
    }
  }
}

SweepGrid ParseConfig(std::string_view text) {
  return BuildGrid(ParseConfigEntries(text));
}

std::string NormalizeConfig(const SweepGrid& grid) {
  auto num = [](const auto& v) { return fmt::format("{}", v); };
  std::string out;
  auto it = std::back_inserter(out);
  fmt::format_to(it, "network={}\n",
                 JoinList<NetworkKind>(grid.networks, [](const NetworkKind& k) {
                   return std::string(NetworkKindName(k));
                 }));
  fmt::format_to(it, "nodes={}\n", JoinList<std::size_t>(grid.nodes, num));
  fmt::format_to(it, "k={}\n", JoinList<std::size_t>(grid.k, num));
  fmt::format_to(it, "p-rewire={}\n", JoinList<double>(grid.p_rewire, num));
  fmt::format_to(it, "m={}\n", JoinList<std::size_t>(grid.m, num));
  fmt::format_to(it, "p-edge={}\n",
                 JoinList<std::optional<double>>(
                     grid.p_edge, [](const std::optional<double>& p) {
                       return p ? fmt::format("{}", *p) : std::string("auto");
                     }));
  fmt::format_to(it, "sources={}\n", JoinList<std::size_t>(grid.sources, num));
  fmt::format_to(it, "targets={}\n", JoinList<std::size_t>(grid.targets, num));
  fmt::format_to(it, "walkers={}\n",
                 grid.walkers.empty() ? std::string("auto")
                                      : JoinList<std::size_t>(grid.walkers, num));
  fmt::format_to(it, "policy={}\n",
                 JoinList<PolicyKind>(grid.policies, [](const PolicyKind& p) {
                   return std::string(PolicyKindName(p));
                 }));
  fmt::format_to(it, "metric={}\n",
                 JoinList<Metric>(grid.metrics, [](const Metric& m) {
                   return std::string(MetricName(m));
                 }));
  fmt::format_to(it, "avoid-visited={}\n",
                 JoinList<bool>(grid.avoid_visited, [](const bool& b) {
                   return std::string(b ? "true" : "false");
                 }));
  fmt::format_to(it, "dead-end={}\n",
                 JoinList<DeadEnd>(grid.dead_ends, [](const DeadEnd& d) {
                   return std::string(DeadEndName(d));
                 }));
  fmt::format_to(it, "repetitions={}\n",
                 JoinList<std::size_t>(grid.repetitions, num));
  fmt::format_to(it, "max-ticks={}\n",
                 JoinList<std::optional<std::size_t>>(
                     grid.max_ticks, [](const std::optional<std::size_t>& t) {
                       return t ? fmt::format("{}", *t) : std::string("auto");
                     }));
  if (grid.seed) fmt::format_to(it, "seed={}\n", *grid.seed);
  fmt::format_to(it, "eigen-tol={}\n", grid.eigen.tol);
  fmt::format_to(it, "eigen-max-iter={}\n", grid.eigen.max_iter);
  return out;
}

}  // namespace gridwalk
