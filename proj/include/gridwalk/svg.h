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

#ifndef GRIDWALK_SVG_H_
#define GRIDWALK_SVG_H_

#include <span>
#include <string>
#include <string_view>

#include "gridwalk/routing.h"

namespace gridwalk {

// Line chart of tick vs (visited nodes, visited targets) with axes, labels
// and a legend. A one-tick series is drawn as a marker per line. Output is a
// pure function of the inputs. Throws Error{kEmptySeries}.
std::string RenderSeriesSvg(std::span<const TickRecord> series,
                            std::string_view title = "");

}  // namespace gridwalk

#endif  // GRIDWALK_SVG_H_
