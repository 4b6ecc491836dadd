// Copyright 2026 The crossgame Authors.
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

#ifndef CROSSGAME_SVG_PLOT_H_
#define CROSSGAME_SVG_PLOT_H_

#include <string>
#include <vector>

namespace crossgame {

struct PlotSeries {
  std::string label;
  std::vector<double> values;  // y at x = 0, 1, 2, ...
};

struct PlotOptions {
  std::string title = "Relative distance to the stationary point";
  std::string x_label = "iteration";
  std::string y_label = "log10 ||w_t - w*|| / ||w_0 - w*||";
  double floor = 1e-16;  // values below (or non-positive) are drawn here
};

inline constexpr int kSvgWidth = 900;
inline constexpr int kSvgHeight = 600;

// Self-contained SVG (no external assets): one polyline per series on a
// log10 y-axis clamped at options.floor, with axes, ticks and a legend.
std::string RenderLogPlotSvg(const std::vector<PlotSeries>& series,
                             const PlotOptions& options = {});

}  // namespace crossgame

#endif  // CROSSGAME_SVG_PLOT_H_
