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

#include "crossgame/svg_plot.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace crossgame {
namespace {

constexpr std::array<const char*, 8> kPalette = {
    "#1f4e9c", "#e08a1e", "#7b3fa0", "#2e8b3a",
    "#8b5a2b", "#d62728", "#17becf", "#7f7f7f"};

constexpr double kLeft = 90, kRight = 220, kTop = 50, kBottom = 70;

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string Escape(const std::string& s) {
  std::string out;
  for (char c : s) {
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

double Log10Clamped(double v, double floor) {
  if (!(v > floor) || !std::isfinite(v)) {
    return std::isinf(v) && v > 0 ? HUGE_VAL : std::log10(floor);
  }
  return std::log10(v);
}

}  // namespace

std::string RenderLogPlotSvg(const std::vector<PlotSeries>& series,
                             const PlotOptions& options) {
  const double plot_w = kSvgWidth - kLeft - kRight;
  const double plot_h = kSvgHeight - kTop - kBottom;

  std::size_t max_len = 1;
  double y_min = 0.0, y_max = 0.0;
  bool any = false;
  for (const PlotSeries& s : series) {
    max_len = std::max(max_len, s.values.size());
    for (double v : s.values) {
      const double y = Log10Clamped(v, options.floor);
      if (!std::isfinite(y)) continue;
      if (!any) {
        y_min = y_max = y;
        any = true;
      }
      y_min = std::min(y_min, y);
      y_max = std::max(y_max, y);
    }
  }
  y_min = std::floor(y_min);
  y_max = std::ceil(y_max);
  if (y_max <= y_min) y_max = y_min + 1.0;
  const double x_max = std::max<double>(1.0, static_cast<double>(max_len - 1));

  auto map_x = [&](double x) { return kLeft + x / x_max * plot_w; };
  auto map_y = [&](double y) {
    y = std::clamp(y, y_min, y_max);
    return kTop + (1.0 - (y - y_min) / (y_max - y_min)) * plot_h;
  };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSvgWidth
      << "\" height=\"" << kSvgHeight << "\" viewBox=\"0 0 " << kSvgWidth << ' '
      << kSvgHeight << "\" font-family=\"sans-serif\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << Num(kLeft + plot_w / 2) << "\" y=\"28\" font-size=\"16\" "
      << "text-anchor=\"middle\">" << Escape(options.title) << "</text>\n";

  // Grid and ticks.
  const int y_span = static_cast<int>(y_max - y_min);
  const int y_every = std::max(1, y_span / 10);
  for (int k = static_cast<int>(y_min); k <= static_cast<int>(y_max); k += y_every) {
    const double py = map_y(k);
    svg << "<line x1=\"" << Num(kLeft) << "\" y1=\"" << Num(py) << "\" x2=\""
        << Num(kLeft + plot_w) << "\" y2=\"" << Num(py)
        << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n"
        << "<text x=\"" << Num(kLeft - 8) << "\" y=\"" << Num(py + 4)
        << "\" font-size=\"12\" text-anchor=\"end\">" << k << "</text>\n";
  }
  const double x_step = std::pow(10.0, std::floor(std::log10(x_max / 2.0)));
  const double x_tick = x_max / x_step > 8 ? x_step * 2 : x_step;
  for (double x = 0.0; x <= x_max + 1e-9; x += x_tick) {
    const double px = map_x(x);
    svg << "<line x1=\"" << Num(px) << "\" y1=\"" << Num(kTop) << "\" x2=\"" << Num(px)
        << "\" y2=\"" << Num(kTop + plot_h) << "\" stroke=\"#eeeeee\" stroke-width=\"1\"/>\n"
        << "<text x=\"" << Num(px) << "\" y=\"" << Num(kTop + plot_h + 18)
        << "\" font-size=\"12\" text-anchor=\"middle\">" << static_cast<long>(x)
        << "</text>\n";
  }
  svg << "<rect x=\"" << Num(kLeft) << "\" y=\"" << Num(kTop) << "\" width=\""
      << Num(plot_w) << "\" height=\"" << Num(plot_h)
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n"
      << "<text x=\"" << Num(kLeft + plot_w / 2) << "\" y=\"" << (kSvgHeight - 25)
      << "\" font-size=\"14\" text-anchor=\"middle\">" << Escape(options.x_label)
      << "</text>\n"
      << "<text x=\"24\" y=\"" << Num(kTop + plot_h / 2)
      << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 24 "
      << Num(kTop + plot_h / 2) << ")\">" << Escape(options.y_label) << "</text>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const PlotSeries& s = series[i];
    const char* color = kPalette[i % kPalette.size()];
    svg << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.6\" points=\"";
    for (std::size_t t = 0; t < s.values.size(); ++t) {
      double y = Log10Clamped(s.values[t], options.floor);
      if (!std::isfinite(y)) y = y_max;
      svg << Num(map_x(static_cast<double>(t))) << ',' << Num(map_y(y)) << ' ';
    }
    svg << "\"/>\n";
    const double ly = kTop + 14 + 22.0 * i;
    const double lx = kLeft + plot_w + 16;
    svg << "<line x1=\"" << Num(lx) << "\" y1=\"" << Num(ly) << "\" x2=\"" << Num(lx + 28)
        << "\" y2=\"" << Num(ly) << "\" stroke=\"" << color << "\" stroke-width=\"3\"/>\n"
        << "<text x=\"" << Num(lx + 36) << "\" y=\"" << Num(ly + 4)
        << "\" font-size=\"13\">" << Escape(s.label) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace crossgame
