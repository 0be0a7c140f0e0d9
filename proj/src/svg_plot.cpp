#include "svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace lipkin::svg {

namespace {

struct Range {
  double lo = 0.0;
  double hi = 1.0;
};

Range data_range(const std::vector<Series>& series, bool use_y) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const Series& s : series)
    for (double v : use_y ? s.y : s.x) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  if (!(lo < hi)) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double pad = 0.04 * (hi - lo);
  return {lo - pad, hi + pad};
}

// tick spacing on the 1-2-5 ladder giving 4..8 ticks
double tick_step(const Range& r) {
  const double span = r.hi - r.lo;
  double step = std::pow(10.0, std::floor(std::log10(span / 5.0)));
  for (double mult : {1.0, 2.0, 5.0, 10.0})
    if (span / (step * mult) <= 8.0) return step * mult;
  return step * 10.0;
}

std::string trim_number(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

void write_line_chart(const std::string& path, const ChartSpec& spec,
                      const std::vector<Series>& series) {
  if (series.empty())
    throw std::invalid_argument("write_line_chart: no series");
  const Range rx = data_range(series, false);
  const Range ry = data_range(series, true);

  const double ml = 72, mr = 18, mt = 36, mb = 52;  // margins
  const double pw = spec.width - ml - mr;
  const double ph = spec.height - mt - mb;
  auto px = [&](double x) { return ml + pw * (x - rx.lo) / (rx.hi - rx.lo); };
  auto py = [&](double y) { return mt + ph * (ry.hi - y) / (ry.hi - ry.lo); };

  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("write_line_chart: cannot open '" + path + "'");

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width
      << "\" height=\"" << spec.height << "\" viewBox=\"0 0 " << spec.width
      << " " << spec.height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // grid + ticks
  const double sx = tick_step(rx), sy = tick_step(ry);
  out << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
  for (double t = std::ceil(rx.lo / sx) * sx; t <= rx.hi + 1e-12 * sx; t += sx) {
    const double X = px(t);
    out << "<line x1=\"" << X << "\" y1=\"" << mt << "\" x2=\"" << X
        << "\" y2=\"" << mt + ph << "\" stroke=\"#e0e0e0\"/>\n"
        << "<text x=\"" << X << "\" y=\"" << mt + ph + 16
        << "\" text-anchor=\"middle\">" << trim_number(t) << "</text>\n";
  }
  for (double t = std::ceil(ry.lo / sy) * sy; t <= ry.hi + 1e-12 * sy; t += sy) {
    const double Y = py(t);
    out << "<line x1=\"" << ml << "\" y1=\"" << Y << "\" x2=\"" << ml + pw
        << "\" y2=\"" << Y << "\" stroke=\"#e0e0e0\"/>\n"
        << "<text x=\"" << ml - 6 << "\" y=\"" << Y + 4
        << "\" text-anchor=\"end\">" << trim_number(t) << "</text>\n";
  }
  out << "</g>\n";

  // frame
  out << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << pw
      << "\" height=\"" << ph << "\" fill=\"none\" stroke=\"#444\"/>\n";

  // series
  for (const Series& s : series) {
    if (s.x.size() != s.y.size())
      throw std::invalid_argument("write_line_chart: series size mismatch");
    out << "<polyline fill=\"none\" stroke=\"" << s.color
        << "\" stroke-width=\"1.6\"";
    if (s.dashed) out << " stroke-dasharray=\"6 4\"";
    out << " points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      out << px(s.x[i]) << ',' << py(s.y[i]) << ' ';
    }
    out << "\"/>\n";
  }

  // labels
  out << "<g font-family=\"sans-serif\" font-size=\"13\" fill=\"#111\">\n"
      << "<text x=\"" << ml + pw / 2 << "\" y=\"18\" text-anchor=\"middle\" "
         "font-size=\"15\">"
      << spec.title << "</text>\n"
      << "<text x=\"" << ml + pw / 2 << "\" y=\"" << spec.height - 12
      << "\" text-anchor=\"middle\">" << spec.x_label << "</text>\n"
      << "<text x=\"16\" y=\"" << mt + ph / 2
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " << mt + ph / 2
      << ")\">" << spec.y_label << "</text>\n</g>\n";

  // legend
  out << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#111\">\n";
  double ly = mt + 10;
  for (const Series& s : series) {
    const double lx = ml + pw - 150;
    out << "<line x1=\"" << lx << "\" y1=\"" << ly - 4 << "\" x2=\""
        << lx + 24 << "\" y2=\"" << ly - 4 << "\" stroke=\"" << s.color
        << "\" stroke-width=\"2\"";
    if (s.dashed) out << " stroke-dasharray=\"6 4\"";
    out << "/>\n<text x=\"" << lx + 30 << "\" y=\"" << ly << "\">" << s.label
        << "</text>\n";
    ly += 16;
  }
  out << "</g>\n</svg>\n";
  if (!out) throw std::runtime_error("write_line_chart: write failed");
}

}  // namespace lipkin::svg
