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

#include "gridwalk/svg.h"

#include <fmt/format.h>

#include <algorithm>
#include <iterator>

#include "gridwalk/error.h"

namespace gridwalk {
namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 400;
constexpr double kLeft = 70;
constexpr double kRight = 20;
constexpr double kTop = 40;
constexpr double kBottom = 50;

std::string Escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string RenderSeriesSvg(std::span<const TickRecord> series,
                            std::string_view title) {
  if (series.empty()) throw Error(ErrorCode::kEmptySeries, "nothing to plot");

  std::size_t y_max = 1;
  for (const TickRecord& r : series) {
    y_max = std::max({y_max, r.visited_nodes, r.visited_targets});
  }
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const double x_span = series.size() > 1 ? static_cast<double>(series.size() - 1) : 1.0;
  auto x_of = [&](std::size_t i) {
    // A lone point sits in the middle of the x axis.
    if (series.size() == 1) return kLeft + plot_w / 2;
    return kLeft + plot_w * static_cast<double>(i) / x_span;
  };
  auto y_of = [&](std::size_t v) {
    return kTop + plot_h * (1.0 - static_cast<double>(v) / static_cast<double>(y_max));
  };

  std::string out;
  auto it = std::back_inserter(out);
  fmt::format_to(it,
                 "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" "
                 "height=\"{1}\" viewBox=\"0 0 {0} {1}\">\n"
                 "<rect width=\"{0}\" height=\"{1}\" fill=\"white\"/>\n",
                 kWidth, kHeight);
  if (!title.empty()) {
    fmt::format_to(it,
                   "<text x=\"{:.2f}\" y=\"24\" text-anchor=\"middle\" "
                   "font-family=\"sans-serif\" font-size=\"14\">{}</text>\n",
                   kWidth / 2, Escape(title));
  }
  // Axes.
  fmt::format_to(it,
                 "<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{0:.2f}\" y2=\"{2:.2f}\" "
                 "stroke=\"black\"/>\n"
                 "<line x1=\"{0:.2f}\" y1=\"{2:.2f}\" x2=\"{3:.2f}\" y2=\"{2:.2f}\" "
                 "stroke=\"black\"/>\n",
                 kLeft, kTop, kTop + plot_h, kLeft + plot_w);
  // Tick labels at both ends of each axis.
  fmt::format_to(it,
                 "<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"end\" "
                 "font-family=\"sans-serif\" font-size=\"11\">{}</text>\n"
                 "<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"end\" "
                 "font-family=\"sans-serif\" font-size=\"11\">0</text>\n",
                 kLeft - 6, kTop + 4, y_max, kLeft - 6, kTop + plot_h + 4);
  fmt::format_to(it,
                 "<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\" "
                 "font-family=\"sans-serif\" font-size=\"11\">1</text>\n"
                 "<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\" "
                 "font-family=\"sans-serif\" font-size=\"11\">{}</text>\n",
                 x_of(0), kTop + plot_h + 16, x_of(series.size() - 1),
                 kTop + plot_h + 16, series.size());
  fmt::format_to(it,
                 "<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\" "
                 "font-family=\"sans-serif\" font-size=\"12\">tick</text>\n"
                 "<text x=\"16\" y=\"{:.2f}\" text-anchor=\"middle\" "
                 "font-family=\"sans-serif\" font-size=\"12\" "
                 "transform=\"rotate(-90 16 {:.2f})\">count</text>\n",
                 kLeft + plot_w / 2, kHeight - 12, kTop + plot_h / 2,
                 kTop + plot_h / 2);

  struct Line {
    const char* label;
    const char* color;
    std::size_t TickRecord::*field;
  };
  const Line lines[] = {{"visited nodes", "#1f77b4", &TickRecord::visited_nodes},
                        {"visited targets", "#d62728", &TickRecord::visited_targets}};
  for (const Line& line : lines) {
    if (series.size() == 1) {
      fmt::format_to(it,
                     "<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"4\" fill=\"{}\"/>\n",
                     x_of(0), y_of(series[0].*line.field), line.color);
      continue;
    }
    fmt::format_to(it, "<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" points=\"",
                   line.color);
    for (std::size_t i = 0; i < series.size(); ++i) {
      fmt::format_to(it, "{}{:.2f},{:.2f}", i ? " " : "", x_of(i),
                     y_of(series[i].*line.field));
    }
    fmt::format_to(it, "\"/>\n");
  }

  // Legend.
  for (std::size_t i = 0; i < std::size(lines); ++i) {
    const double y = kTop + 10 + 16 * static_cast<double>(i);
    fmt::format_to(it,
                   "<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"12\" height=\"4\" "
                   "fill=\"{}\"/>\n"
                   "<text x=\"{:.2f}\" y=\"{:.2f}\" font-family=\"sans-serif\" "
                   "font-size=\"11\">{}</text>\n",
                   kLeft + plot_w - 120, y - 2, lines[i].color,
                   kLeft + plot_w - 102, y + 3, lines[i].label);
  }
  out += "</svg>\n";
  return out;
}

}  // namespace gridwalk
