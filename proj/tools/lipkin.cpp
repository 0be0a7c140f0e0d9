// Command-line driver: chi sweeps with CSV output, figure rendering and the
// analytic self-check suite.

#include "lipkin/figures.hpp"
#include "lipkin/self_check.hpp"
#include "lipkin/sweep.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

lipkin::Model parse_model(const std::string& name) {
  if (name == "two") return lipkin::Model::two_level;
  if (name == "three") return lipkin::Model::three_level;
  throw CLI::ValidationError("--model must be 'two' or 'three'");
}

int run_sweep_command(const std::string& model_name,
                      const std::vector<int>& particles, double chi_min,
                      double chi_max, int steps, bool log_grid_flag,
                      double epsilon, const std::string& out, bool serial) {
  lipkin::SweepConfig cfg;
  cfg.model = parse_model(model_name);
  cfg.particle_numbers = particles;
  cfg.chi_min = chi_min;
  cfg.chi_max = chi_max;
  cfg.steps = steps;
  cfg.log_grid = log_grid_flag;
  cfg.epsilon = epsilon;

  const auto records = lipkin::run_sweep(
      cfg, serial ? lipkin::ExecutionPolicy::serial
                  : lipkin::ExecutionPolicy::parallel);
  lipkin::write_csv(records, out);
  std::cout << "wrote " << records.size() << " records to " << out << "\n";
  return 0;
}

int run_figure_command(const std::string& figure_name, const std::string& out,
                       int steps_override) {
  const auto id = lipkin::parse_figure_id(figure_name);
  if (!id) throw CLI::ValidationError("figure must be one of f1..f8");
  lipkin::SweepConfig cfg = lipkin::default_figure_config(*id);
  if (steps_override > 0) cfg.steps = steps_override;
  const auto records = lipkin::run_sweep(cfg);
  lipkin::emit_figure(*id, records, out);
  std::cout << "wrote figure " << lipkin::to_string(*id) << " to " << out
            << "\n";
  return 0;
}

int run_check_command() {
  int failures = 0;
  for (const lipkin::CheckResult& r : lipkin::run_self_checks()) {
    std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name << " — "
              << r.detail << "\n";
    if (!r.passed) ++failures;
  }
  if (failures > 0) {
    std::cout << failures << " self-check(s) failed\n";
    return 1;
  }
  std::cout << "all self-checks passed\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and mean-field solutions of the two- and three-level "
               "Lipkin models with quantum-information correlation measures"};
  app.require_subcommand(1);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "run a chi sweep and write a CSV");
  std::string model_name;
  std::vector<int> particles;
  double chi_min = 0.0, chi_max = 0.0, epsilon = 1.0;
  int steps = 400;
  bool log_grid_flag = false, serial = false;
  std::string out_csv;
  sweep->add_option("--model", model_name, "two | three")->required();
  sweep->add_option("--particles", particles, "particle numbers N (comma separated)")
      ->required()
      ->delimiter(',');
  sweep->add_option("--chi-min", chi_min, "smallest chi")->required();
  sweep->add_option("--chi-max", chi_max, "largest chi")->required();
  sweep->add_option("--steps", steps, "grid points (default 400)");
  sweep->add_flag("--log-grid", log_grid_flag, "log-spaced chi grid");
  sweep->add_option("--epsilon", epsilon, "level spacing (default 1)");
  sweep->add_option("--out", out_csv, "output CSV path")->required();
  sweep->add_flag("--serial", serial, "disable the OpenMP execution path");

  // figure
  auto* figure = app.add_subcommand("figure", "render a standard figure (SVG)");
  std::string figure_name, out_fig;
  int fig_steps = 0;
  figure->add_option("id", figure_name, "f1..f8")->required();
  figure->add_option("--out", out_fig, "output SVG path")->required();
  figure->add_option("--steps", fig_steps, "override the default grid size");

  // check
  app.add_subcommand("check", "run the analytic-oracle self-test suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sweep->parsed())
      return run_sweep_command(model_name, particles, chi_min, chi_max, steps,
                               log_grid_flag, epsilon, out_csv, serial);
    if (figure->parsed())
      return run_figure_command(figure_name, out_fig, fig_steps);
    return run_check_command();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
