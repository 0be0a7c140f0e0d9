#include "lipkin/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lipkin {

void SweepConfig::validate() const {
  if (particle_numbers.empty())
    throw std::invalid_argument("SweepConfig: no particle numbers");
  for (int n : particle_numbers)
    if (n < 2)
      throw std::invalid_argument(
          "SweepConfig: chi parametrization requires every N >= 2");
  if (!(chi_min < chi_max))
    throw std::invalid_argument("SweepConfig: requires chi_min < chi_max");
  if (steps < 2) throw std::invalid_argument("SweepConfig: requires steps >= 2");
  if (!(epsilon > 0.0))
    throw std::invalid_argument("SweepConfig: requires epsilon > 0");
  if (log_grid && !(chi_min > 0.0))
    throw std::invalid_argument("SweepConfig: log grid requires chi_min > 0");
}

std::vector<double> chi_grid(const SweepConfig& c) {
  c.validate();
  std::vector<double> grid(c.steps);
  if (c.log_grid) {
    const double lo = std::log(c.chi_min), hi = std::log(c.chi_max);
    for (int i = 0; i < c.steps; ++i)
      grid[i] = std::exp(lo + (hi - lo) * i / (c.steps - 1));
  } else {
    for (int i = 0; i < c.steps; ++i)
      grid[i] = c.chi_min + (c.chi_max - c.chi_min) * i / (c.steps - 1);
  }
  grid.front() = c.chi_min;
  grid.back() = c.chi_max;
  return grid;
}

SweepRecord compute_record(Model model, int n_particles, double chi_value,
                           double epsilon) {
  const ModelParams params =
      params_from_chi(model, n_particles, chi_value, epsilon);

  const GroundState gs = ground_state(build_hamiltonian(params));
  const HFSolution hf = hf_solve(params);

  SweepRecord r;
  r.model = model;
  r.n_particles = n_particles;
  r.chi = chi_value;
  r.e_exact = gs.energy;
  r.e_hf = hf.energy;
  r.eps_corr = relative_correlation_energy(gs.energy, hf.energy);
  const EntropyReport ent = entropies(exact_one_body_density(gs), n_particles);
  r.s_ov = ent.overall_entropy;
  r.s_ov_per_particle = ent.overall_entropy_per_particle;
  r.s_gamma = ent.one_body_entropy;
  r.hf_angles = hf.angles;

  // mean-field pair discords under the superselection-allowed measurement
  if (model == Model::two_level) {
    r.discord[0] = quantum_discord(hf_pair_state_two_level(hf),
                                   MeasurementSet::ssr_restricted);
    r.discord_sum = r.discord[0];
  } else {
    const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (int k = 0; k < 3; ++k)
      r.discord[k] =
          quantum_discord(hf_pair_state_three_level(hf, pairs[k][0], pairs[k][1]),
                          MeasurementSet::ssr_restricted);
    r.discord_sum = r.discord[0] + r.discord[1] + r.discord[2];
  }
  return r;
}

std::vector<SweepRecord> run_sweep(const SweepConfig& c,
                                   ExecutionPolicy policy) {
  c.validate();
  const std::vector<double> grid = chi_grid(c);
  const int n_groups = static_cast<int>(c.particle_numbers.size());
  const int total = n_groups * c.steps;
  std::vector<SweepRecord> records(total);
  std::string first_error;

  auto point = [&](int k) {
    const int n = c.particle_numbers[k / c.steps];
    const double chi_value = grid[k % c.steps];
    try {
      records[k] = compute_record(c.model, n, chi_value, c.epsilon);
      return std::string();
    } catch (const std::exception& e) {
      std::ostringstream os;
      os << "run_sweep: failure at (N = " << n << ", chi = " << chi_value
         << "): " << e.what();
      return os.str();
    }
  };

  if (policy == ExecutionPolicy::serial) {
    for (int k = 0; k < total; ++k) {
      const std::string err = point(k);
      if (!err.empty()) throw std::runtime_error(err);
    }
    return records;
  }

#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < total; ++k) {
    const std::string err = point(k);
    if (!err.empty()) {
#pragma omp critical
      if (first_error.empty()) first_error = err;
    }
  }
  if (!first_error.empty()) throw std::runtime_error(first_error);
  return records;
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string csv_header(Model model) {
  if (model == Model::two_level)
    return "model,N,chi,E_exact,E_HF,eps_corr,S_ov,S_ov_per_particle,"
           "S_gamma,delta_pm,phi";
  return "model,N,chi,E_exact,E_HF,eps_corr,S_ov,S_ov_per_particle,"
         "S_gamma,delta_01,delta_02,delta_12,delta_sum,alpha,beta";
}

std::string csv_row(const SweepRecord& r) {
  std::ostringstream os;
  os << to_string(r.model) << ',' << r.n_particles << ','
     << format_double(r.chi) << ',' << format_double(r.e_exact) << ','
     << format_double(r.e_hf) << ',' << format_double(r.eps_corr) << ','
     << format_double(r.s_ov) << ',' << format_double(r.s_ov_per_particle)
     << ',' << format_double(r.s_gamma);
  if (r.model == Model::two_level) {
    os << ',' << format_double(r.discord[0]) << ','
       << format_double(r.hf_angles[0]);
  } else {
    os << ',' << format_double(r.discord[0]) << ','
       << format_double(r.discord[1]) << ',' << format_double(r.discord[2])
       << ',' << format_double(r.discord_sum) << ','
       << format_double(r.hf_angles[0]) << ','
       << format_double(r.hf_angles[1]);
  }
  return os.str();
}

void write_csv(const std::vector<SweepRecord>& records,
               const std::string& path) {
  if (records.empty())
    throw std::invalid_argument("write_csv: no records");
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("write_csv: cannot open '" + path +
                             "' for writing");
  out << csv_header(records.front().model) << '\n';
  for (const SweepRecord& r : records) out << csv_row(r) << '\n';
  out.flush();
  if (!out)
    throw std::runtime_error("write_csv: write failed for '" + path + "'");
}

// ---------------------------------------------------------------------------
// Second differences and jump detection
// ---------------------------------------------------------------------------

std::vector<double> second_derivative_series(const std::vector<double>& x,
                                             const std::vector<double>& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("second_derivative_series: size mismatch");
  if (x.size() < 5)
    throw std::invalid_argument(
        "second_derivative_series: needs at least 5 points");
  const bool increasing = x[1] > x[0];
  for (std::size_t i = 1; i < x.size(); ++i) {
    const bool step_up = x[i] > x[i - 1];
    if (x[i] == x[i - 1] || step_up != increasing)
      throw std::invalid_argument(
          "second_derivative_series: x must be strictly monotone");
  }
  std::vector<double> d2(x.size() - 2);
  for (std::size_t i = 1; i + 1 < x.size(); ++i) {
    const double h1 = x[i] - x[i - 1];
    const double h2 = x[i + 1] - x[i];
    d2[i - 1] = 2.0 * (h1 * y[i + 1] - (h1 + h2) * y[i] + h2 * y[i - 1]) /
                (h1 * h2 * (h1 + h2));
  }
  return d2;
}

namespace {

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + mid, v.end());
  double m = v[mid];
  if (v.size() % 2 == 0) {
    std::nth_element(v.begin(), v.begin() + mid - 1, v.begin() + mid);
    m = 0.5 * (m + v[mid - 1]);
  }
  return m;
}

}  // namespace

std::vector<Transition> detect_transitions(
    const std::vector<SweepRecord>& records) {
  if (records.size() < 20)
    throw std::invalid_argument(
        "detect_transitions: needs at least 20 grid points");
  for (const SweepRecord& r : records)
    if (r.model != records.front().model ||
        r.n_particles != records.front().n_particles)
      throw std::invalid_argument(
          "detect_transitions: records must share one (model, N)");

  std::vector<double> s_ov(records.size()), eps_corr(records.size()),
      chis(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    s_ov[i] = records[i].s_ov;
    eps_corr[i] = records[i].eps_corr;
    chis[i] = records[i].chi;
  }
  const std::vector<double> d2 = second_derivative_series(s_ov, eps_corr);

  const int m = static_cast<int>(d2.size()) - 1;
  std::vector<double> dd(m);
  for (int j = 0; j < m; ++j) dd[j] = std::abs(d2[j + 1] - d2[j]);

  // 5x the median absolute neighbor difference, taken over a sliding window
  // (floored by the global median) so that smooth-but-steep stretches of the
  // series do not drown a localized jump.
  constexpr double factor = 5.0;
  constexpr int window = 12;
  const double global_med = median(dd);
  std::vector<char> flags(m, 0);
  for (int j = 0; j < m; ++j) {
    std::vector<double> neighborhood;
    for (int i = std::max(0, j - window); i < std::min(m, j + window + 1); ++i)
      if (std::abs(i - j) > 1) neighborhood.push_back(dd[i]);
    const double local_med = median(std::move(neighborhood));
    flags[j] = dd[j] > factor * std::max(local_med, global_med) ? 1 : 0;
  }

  // merge flags separated by <= 2 points into one cluster; a cluster
  // touching the series boundary has no two-sided neighborhood and is not a
  // certifiable jump
  constexpr int merge_gap = 2;
  std::vector<Transition> found;
  int j = 0;
  while (j < m) {
    if (!flags[j]) {
      ++j;
      continue;
    }
    int last = j, k = j;
    while (k < m) {
      if (flags[k]) {
        last = k;
        ++k;
      } else if (k - last <= merge_gap) {
        ++k;
      } else {
        break;
      }
    }
    if (j > 0 && last < m - 1) {
      int peak = j;
      for (int i = j; i <= last; ++i)
        if (flags[i] && dd[i] > dd[peak]) peak = i;
      // dd[peak] compares d2[peak] and d2[peak+1], i.e. grid points
      // peak+1 and peak+2; report the first of the two
      found.push_back({chis[peak + 1], dd[peak]});
    }
    j = last + 1;
  }
  return found;
}

}  // namespace lipkin
