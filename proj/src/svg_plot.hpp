#pragma once

#include <string>
#include <vector>

namespace lipkin::svg {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "#1f77b4";
  bool dashed = false;
};

struct ChartSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  int width = 720;
  int height = 480;
};

/// Self-contained SVG line chart: axes with 1-2-5 ticks, legend, one
/// polyline per series.
void write_line_chart(const std::string& path, const ChartSpec& spec,
                      const std::vector<Series>& series);

}  // namespace lipkin::svg
