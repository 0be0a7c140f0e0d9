#pragma once

#include "lipkin/correlations.hpp"
#include "lipkin/mean_field.hpp"
#include "lipkin/model.hpp"

#include <string>
#include <vector>

namespace lipkin {

struct SweepConfig {
  Model model = Model::two_level;
  std::vector<int> particle_numbers;
  double chi_min = 0.0;
  double chi_max = 0.0;
  int steps = 400;
  bool log_grid = false;
  double epsilon = 1.0;

  void validate() const;
};

/// The chi grid of a sweep: `steps` points including both endpoints,
/// linearly or log spaced.
std::vector<double> chi_grid(const SweepConfig& c);

struct SweepRecord {
  Model model = Model::two_level;
  int n_particles = 0;
  double chi = 0.0;
  double e_exact = 0.0;
  double e_hf = 0.0;
  double eps_corr = 0.0;
  double s_ov = 0.0;
  double s_ov_per_particle = 0.0;
  double s_gamma = 0.0;
  /// Mean-field pair discords (occupation-basis measurement). Two-level:
  /// [0] = delta(+,p;-,p), rest zero. Three-level: pairs 01, 02, 12.
  std::array<double, 3> discord{0.0, 0.0, 0.0};
  double discord_sum = 0.0;
  /// {phi, 0} or {alpha, beta}.
  std::array<double, 2> hf_angles{0.0, 0.0};
};

/// Everything recorded at one (N, chi) grid point.
SweepRecord compute_record(Model model, int n_particles, double chi_value,
                           double epsilon);

enum class ExecutionPolicy { serial, parallel };

/// One record per (N, chi) grid point, N outer, chi inner ascending. Grid
/// points are independent; the parallel policy distributes them over OpenMP
/// threads and stores results by grid index, so both policies produce
/// identical output. Per-point failures abort with the offending (N, chi).
std::vector<SweepRecord> run_sweep(const SweepConfig& c,
                                   ExecutionPolicy policy = ExecutionPolicy::parallel);

std::string csv_header(Model model);
std::string csv_row(const SweepRecord& r);

/// CSV with a model-specific header, 17-significant-digit floats, ','
/// separators and '\n' line endings; identical configs produce
/// byte-identical files.
void write_csv(const std::vector<SweepRecord>& records,
               const std::string& path);

/// Three-point central second difference on a strictly monotone (possibly
/// nonuniform) grid; exact for quadratics; endpoints omitted, so the output
/// has length |x| - 2.
std::vector<double> second_derivative_series(const std::vector<double>& x,
                                             const std::vector<double>& y);

struct Transition {
  double chi = 0.0;
  double jump = 0.0;  ///< |step| in the second-derivative series
};

/// Locate discontinuities of d^2(eps_corr)/d(S_ov)^2 across a single-(model,
/// N) sweep: neighbor differences of the second-derivative series are
/// flagged where they exceed 5x a windowed median, adjacent flags merge
/// into one detection, and clusters touching the series boundary are
/// discarded. Returns the chi of each detected jump.
std::vector<Transition> detect_transitions(const std::vector<SweepRecord>& records);

}  // namespace lipkin
