// Copyright 2026 The qhom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qhom/export.hpp"
#include "qhom/scenarios.hpp"

namespace qhom {
namespace svg {

// Static vector-graphics output; intentionally minimal. Bar charts serve the
// collision traces, log-capable line charts the deterioration series.

inline std::string num(double v) {
  std::ostringstream out;
  out.precision(2);
  out << std::fixed << v;
  return out.str();
}

struct Canvas {
  std::ostringstream body;
  double width, height;

  Canvas(double w, double h) : width(w), height(h) {}

  void line(double x1, double y1, double x2, double y2,
            const std::string& stroke, double stroke_width = 1.0,
            const std::string& dash = "") {
    body << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\""
         << num(x2) << "\" y2=\"" << num(y2) << "\" stroke=\"" << stroke
         << "\" stroke-width=\"" << num(stroke_width) << "\"";
    if (!dash.empty()) body << " stroke-dasharray=\"" << dash << "\"";
    body << "/>\n";
  }

  void rect(double x, double y, double w, double h, const std::string& fill) {
    body << "<rect x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\""
         << num(w) << "\" height=\"" << num(h) << "\" fill=\"" << fill
         << "\"/>\n";
  }

  void polyline(const std::vector<std::pair<double, double>>& pts,
                const std::string& stroke, double stroke_width = 1.5,
                const std::string& dash = "") {
    body << "<polyline fill=\"none\" stroke=\"" << stroke
         << "\" stroke-width=\"" << num(stroke_width) << "\"";
    if (!dash.empty()) body << " stroke-dasharray=\"" << dash << "\"";
    body << " points=\"";
    for (const auto& [x, y] : pts) body << num(x) << "," << num(y) << " ";
    body << "\"/>\n";
  }

  void text(double x, double y, const std::string& s, double size = 11,
            const std::string& anchor = "start") {
    body << "<text x=\"" << num(x) << "\" y=\"" << num(y)
         << "\" font-family=\"sans-serif\" font-size=\"" << num(size)
         << "\" text-anchor=\"" << anchor << "\">" << s << "</text>\n";
  }

  void save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open " + path.string() + " for writing");
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width)
        << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width)
        << " " << num(height) << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << body.str() << "</svg>\n";
    if (!out) throw io_error("failed while writing " + path.string());
  }
};

inline const std::vector<std::string>& palette() {
  static const std::vector<std::string> colors = {
      "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
      "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  return colors;
}

inline std::string dash_for_mode(RestMode mode) {
  switch (mode) {
    case RestMode::entangled: return "";
    case RestMode::separable: return "6,3";
    case RestMode::analytic_approx: return "2,3";
    case RestMode::diagonal_correlated: return "8,2,2,2";
  }
  return "";
}

/// Grouped bars of the substrate populations per collision, one panel per
/// trace record.
inline void plot_traces(const SweepResult& result,
                        const std::filesystem::path& path) {
  const int panels = static_cast<int>(result.traces.size());
  const double panel_w = 300, panel_h = 240, margin = 48, gap = 24;
  Canvas canvas(margin + panels * (panel_w + gap), panel_h + 2 * margin);

  for (int p = 0; p < panels; ++p) {
    const TraceRecord& record = result.traces[p];
    const double x0 = margin + p * (panel_w + gap);
    const double y0 = margin, y1 = margin + panel_h;
    canvas.line(x0, y1, x0 + panel_w, y1, "#000");
    canvas.line(x0, y0, x0, y1, "#000");
    canvas.text(x0, y0 - 10, scenario_id(record.config), 11);

    const int steps = static_cast<int>(record.trace.errors.size());
    const double group_w = panel_w / steps;
    const double bar_w = group_w * 0.32;
    for (int k = 0; k < steps; ++k) {
      const double rho00 = record.trace.marginals[k].population(0);
      const double rho11 = record.trace.marginals[k].population(1);
      const double gx = x0 + k * group_w + group_w * 0.15;
      canvas.rect(gx, y1 - rho00 * panel_h, bar_w, rho00 * panel_h, "#1f77b4");
      canvas.rect(gx + bar_w * 1.2, y1 - rho11 * panel_h, bar_w,
                  rho11 * panel_h, "#ff7f0e");
      canvas.text(x0 + k * group_w + group_w / 2, y1 + 14, "k=" + std::to_string(k),
                  10, "middle");
    }
    for (double tick : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const double y = y1 - tick * panel_h;
      canvas.line(x0 - 3, y, x0, y, "#000");
      canvas.text(x0 - 6, y + 4, format_number(tick), 9, "end");
    }
  }
  canvas.text(margin, canvas.height - 10,
              "population of |0> (blue) and |1> (orange) after collision k", 10);
  canvas.save(path);
}

/// Deterioration curves, one panel per eta, one curve per
/// (direction, mode, N). The delta axis switches to log scale when the
/// plotted values span more than two decades.
inline void plot_series(const SweepResult& result,
                        const std::filesystem::path& path) {
  std::set<double> etas;
  int n_max = 1;
  double dmin = std::numeric_limits<double>::infinity(), dmax = 0.0;
  for (const SeriesRecord& record : result.series) {
    etas.insert(record.config.eta);
    for (const UsageRecord& u : record.series.records) {
      const double d = detail::cap_delta(u.delta).value;
      n_max = std::max(n_max, u.n);
      if (d > 0) dmin = std::min(dmin, d);
      dmax = std::max(dmax, d);
    }
  }
  if (dmax <= 0.0) dmax = 1.0;
  if (!std::isfinite(dmin) || dmin <= 0.0) dmin = dmax / 10;
  const bool log_scale = dmax / dmin > 100.0;

  const double panel_w = 360, panel_h = 280, margin = 56, gap = 32;
  const int panels = std::max<int>(1, static_cast<int>(etas.size()));
  Canvas canvas(margin + panels * (panel_w + gap), panel_h + 2 * margin + 40);

  auto y_of = [&](double delta, double y1) {
    if (log_scale) {
      const double lo = std::log10(dmin), hi = std::log10(dmax);
      const double t = (std::log10(std::max(delta, dmin)) - lo) / (hi - lo);
      return y1 - t * panel_h;
    }
    return y1 - (delta / dmax) * panel_h;
  };

  int p = 0;
  for (double eta : etas) {
    const double x0 = margin + p * (panel_w + gap);
    const double y0 = margin, y1 = margin + panel_h;
    canvas.line(x0, y1, x0 + panel_w, y1, "#000");
    canvas.line(x0, y0, x0, y1, "#000");
    canvas.text(x0 + panel_w / 2, y0 - 10, "eta = " + format_number(eta), 12,
                "middle");
    canvas.text(x0 + panel_w / 2, y1 + 28, "usages n", 10, "middle");

    if (log_scale) {
      for (int e = static_cast<int>(std::floor(std::log10(dmin)));
           e <= static_cast<int>(std::ceil(std::log10(dmax))); ++e) {
        const double v = std::pow(10.0, e);
        if (v < dmin || v > dmax) continue;
        const double y = y_of(v, y1);
        canvas.line(x0 - 3, y, x0, y, "#000");
        canvas.text(x0 - 6, y + 4, "1e" + std::to_string(e), 9, "end");
      }
    } else {
      for (double t : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const double y = y1 - t * panel_h;
        canvas.line(x0 - 3, y, x0, y, "#000");
        canvas.text(x0 - 6, y + 4, format_number(t * dmax), 9, "end");
      }
    }

    int color_index = 0;
    for (const SeriesRecord& record : result.series) {
      if (record.config.eta != eta) continue;
      std::vector<std::pair<double, double>> pts;
      pts.reserve(record.series.records.size());
      for (const UsageRecord& u : record.series.records) {
        const double x = x0 + (n_max > 1 ? (u.n - 1) * panel_w / (n_max - 1)
                                         : panel_w / 2);
        pts.emplace_back(x, y_of(detail::cap_delta(u.delta).value, y1));
      }
      const std::string color =
          palette()[color_index++ % palette().size()];
      canvas.polyline(pts, color, 1.4, dash_for_mode(record.config.mode));
    }
    ++p;
  }
  canvas.text(margin, canvas.height - 12,
              "relative deterioration vs usages; one curve per "
              "(direction, mode, N); dash pattern encodes the mode",
              10);
  canvas.save(path);
}

}  // namespace svg

/// Emits one SVG per result kind present: "<stem>.svg" for whichever of the
/// trace/series payloads the result carries (trace variant gets the plain
/// name when both exist is not a case the presets produce). Refuses empty
/// results.
inline std::vector<std::filesystem::path> plot_result(
    const SweepResult& result, const std::filesystem::path& dir,
    std::string_view stem) {
  if (result.empty())
    throw std::invalid_argument("plot_result: refusing to plot an empty result");
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec)
    throw io_error("cannot create output directory " + dir.string() + ": " +
                   ec.message());

  std::vector<std::filesystem::path> written;
  if (!result.traces.empty()) {
    const auto path = result.series.empty()
                          ? dir / (std::string(stem) + ".svg")
                          : dir / (std::string(stem) + "_trace.svg");
    svg::plot_traces(result, path);
    written.push_back(path);
  }
  if (!result.series.empty()) {
    const auto path = dir / (std::string(stem) + ".svg");
    svg::plot_series(result, path);
    written.push_back(path);
  }
  return written;
}

}  // namespace qhom
