#include "lipkin/figures.hpp"

#include "svg_plot.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace lipkin {

namespace {

const char* palette(int i) {
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                 "#ff7f0e", "#8c564b"};
  return colors[i % 6];
}

bool two_level_figure(FigureId id) {
  return id == FigureId::f1 || id == FigureId::f2 || id == FigureId::f3 ||
         id == FigureId::f4;
}

// records grouped by N, preserving sweep order (N outer, chi inner)
std::vector<std::pair<int, std::vector<const SweepRecord*>>> group_by_n(
    const std::vector<SweepRecord>& records) {
  std::vector<std::pair<int, std::vector<const SweepRecord*>>> groups;
  for (const SweepRecord& r : records) {
    if (groups.empty() || groups.back().first != r.n_particles)
      groups.push_back({r.n_particles, {}});
    groups.back().second.push_back(&r);
  }
  return groups;
}

}  // namespace

std::optional<FigureId> parse_figure_id(std::string_view name) {
  static const std::map<std::string_view, FigureId> ids = {
      {"f1", FigureId::f1}, {"f2", FigureId::f2}, {"f3", FigureId::f3},
      {"f4", FigureId::f4}, {"f5", FigureId::f5}, {"f6", FigureId::f6},
      {"f7", FigureId::f7}, {"f8", FigureId::f8}};
  auto it = ids.find(name);
  if (it == ids.end()) return std::nullopt;
  return it->second;
}

std::string to_string(FigureId id) {
  return "f" + std::to_string(static_cast<int>(id) + 1);
}

SweepConfig default_figure_config(FigureId id) {
  SweepConfig c;
  c.steps = 400;
  c.chi_min = 0.05;
  c.chi_max = 6.0;
  if (two_level_figure(id)) {
    c.model = Model::two_level;
    c.particle_numbers = {5, 10, 20, 50};
  } else {
    c.model = Model::three_level;
    c.particle_numbers = {5, 10, 20};
  }
  if (id == FigureId::f8) c.chi_max = 8.0;
  return c;
}

void emit_figure(FigureId id, const std::vector<SweepRecord>& records,
                 const std::string& path) {
  if (records.empty()) throw std::invalid_argument("emit_figure: no records");
  const Model want =
      two_level_figure(id) ? Model::two_level : Model::three_level;
  if (records.front().model != want) {
    std::ostringstream os;
    os << "emit_figure: figure " << to_string(id) << " needs "
       << to_string(want) << "-level records; missing columns: "
       << (want == Model::two_level ? "delta_pm,phi"
                                    : "delta_01,delta_02,delta_12,delta_sum");
    throw std::invalid_argument(os.str());
  }

  auto groups = group_by_n(records);
  std::vector<svg::Series> series;
  svg::ChartSpec spec;

  switch (id) {
    case FigureId::f1:
    case FigureId::f5: {
      spec.title = "Relative correlation energy vs overall entropy";
      spec.x_label = "S_ov";
      spec.y_label = "eps_corr";
      int i = 0;
      for (auto& [n, rs] : groups) {
        svg::Series s;
        s.label = "N = " + std::to_string(n);
        s.color = palette(i++);
        for (auto* r : rs) {
          s.x.push_back(r->s_ov);
          s.y.push_back(r->eps_corr);
        }
        series.push_back(std::move(s));
      }
      break;
    }
    case FigureId::f2:
    case FigureId::f6: {
      spec.title = "Second derivative of the relative correlation energy";
      spec.x_label = "S_ov";
      spec.y_label = "d2(eps_corr)/dS_ov2";
      int i = 0;
      for (auto& [n, rs] : groups) {
        std::vector<double> x, y;
        for (auto* r : rs) {
          x.push_back(r->s_ov);
          y.push_back(r->eps_corr);
        }
        const std::vector<double> d2 = second_derivative_series(x, y);
        svg::Series s;
        s.label = "N = " + std::to_string(n);
        s.color = palette(i++);
        s.x.assign(x.begin() + 1, x.end() - 1);
        s.y = d2;
        series.push_back(std::move(s));
      }
      break;
    }
    case FigureId::f3:
    case FigureId::f7: {
      spec.title = "Overall entropy per particle";
      spec.x_label = "chi";
      spec.y_label = "S_ov / N";
      int i = 0;
      for (auto& [n, rs] : groups) {
        svg::Series s;
        s.label = "N = " + std::to_string(n);
        s.color = palette(i++);
        for (auto* r : rs) {
          s.x.push_back(r->chi);
          s.y.push_back(r->s_ov_per_particle);
        }
        series.push_back(std::move(s));
      }
      break;
    }
    case FigureId::f4: {
      spec.title = "Mean-field pair discord (two levels)";
      spec.x_label = "chi";
      spec.y_label = "discord";
      svg::Series computed{"computed", {}, {}, palette(0), false};
      svg::Series closed{"closed form", {}, {}, palette(1), true};
      for (auto* r : groups.front().second) {
        computed.x.push_back(r->chi);
        computed.y.push_back(r->discord[0]);
        closed.x.push_back(r->chi);
        closed.y.push_back(hf_discord_closed_form_two_level(r->chi));
      }
      series = {std::move(computed), std::move(closed)};
      break;
    }
    case FigureId::f8: {
      spec.title = "Mean-field pair discords (three levels)";
      spec.x_label = "chi";
      spec.y_label = "discord";
      const char* labels[3] = {"pair 0-1", "pair 0-2", "pair 1-2"};
      for (int k = 0; k < 3; ++k) {
        svg::Series s{labels[k], {}, {}, palette(k), false};
        for (auto* r : groups.front().second) {
          s.x.push_back(r->chi);
          s.y.push_back(r->discord[k]);
        }
        series.push_back(std::move(s));
      }
      svg::Series sum{"sum", {}, {}, palette(3), false};
      for (auto* r : groups.front().second) {
        sum.x.push_back(r->chi);
        sum.y.push_back(r->discord_sum);
      }
      series.push_back(std::move(sum));
      break;
    }
  }

  svg::write_line_chart(path, spec, series);
}

}  // namespace lipkin
