#include "lipkin/self_check.hpp"

#include "lipkin/correlations.hpp"
#include "lipkin/figures.hpp"
#include "lipkin/mean_field.hpp"
#include "lipkin/model.hpp"
#include "lipkin/sweep.hpp"

#include <cmath>
#include <sstream>

namespace lipkin {

namespace {

struct Check {
  std::string name;
  double worst = 0.0;
  double tol = 0.0;
  bool ok = true;

  Check(std::string n, double tolerance) : name(std::move(n)), tol(tolerance) {}

  void observe(double error) {
    worst = std::max(worst, std::abs(error));
    ok = ok && std::abs(error) <= tol;
  }

  CheckResult result() const {
    std::ostringstream os;
    os << "max |err| = " << worst << " (tol " << tol << ")";
    return {name, ok, os.str()};
  }
};

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i)
    g[i] = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (n - 1));
  return g;
}

}  // namespace

std::vector<CheckResult> run_self_checks() {
  std::vector<CheckResult> results;

  {
    Check c("chi definition", 0.0);
    c.observe(chi({5, 1.0, 0.0, Model::two_level}) - 0.0);
    c.observe(chi({2, 1.0, 1.0, Model::two_level}) - 1.0);
    c.observe(chi({11, 1.0, 0.1, Model::two_level}) - 1.0);
    results.push_back(c.result());
  }

  {
    Check c("N=2 exact energy is -sqrt(eps^2 + V^2)", 1e-12);
    for (double v : {0.0, 0.3, 1.0, 2.5, 10.0}) {
      const ModelParams p{2, 1.0, v, Model::two_level};
      const GroundState gs = ground_state(build_two_level_hamiltonian(p));
      c.observe(gs.energy + std::sqrt(1.0 + v * v));
    }
    results.push_back(c.result());
  }

  {
    Check c("non-interacting ground states", 1e-12);
    for (int n : {1, 3, 8}) {
      const GroundState g2 =
          ground_state(build_two_level_hamiltonian({n, 1.0, 0.0, Model::two_level}));
      c.observe(g2.energy + 0.5 * n);
      const GroundState g3 = ground_state(
          build_three_level_hamiltonian({n, 1.0, 0.0, Model::three_level}));
      c.observe(g3.energy + n);
    }
    results.push_back(c.result());
  }

  {
    Check c("mean-field angles match the piecewise closed forms", 1e-6);
    for (double x : log_grid(0.05, 20.0, 40)) {
      const HFSolution h2 =
          hf_two_level(params_from_chi(Model::two_level, 12, x));
      c.observe(std::cos(h2.angles[0]) - hf_cos_phi_closed_form(x));
      const HFSolution h3 =
          hf_three_level(params_from_chi(Model::three_level, 12, x));
      c.observe(std::cos(h3.angles[0]) * std::cos(h3.angles[0]) -
                hf_cos2_alpha_closed_form(x));
      c.observe(std::cos(h3.angles[1]) * std::cos(h3.angles[1]) -
                hf_cos2_beta_closed_form(x));
    }
    results.push_back(c.result());
  }

  {
    Check c("mean-field energies match the piecewise closed forms", 1e-10);
    for (double x : log_grid(0.05, 20.0, 40)) {
      const int n = 12;
      const HFSolution h2 = hf_two_level(params_from_chi(Model::two_level, n, x));
      const double ref =
          x <= 1.0 ? -0.5 * n : -0.25 * n * (x + 1.0 / x);
      c.observe((h2.energy - ref) / n);
    }
    results.push_back(c.result());
  }

  {
    Check c("pair discord matches the closed forms (occupation measurement)",
            1e-9);
    for (double x : {0.5, 1.5, 2.0, 2.9, 3.5, 4.0, 6.0, 12.0}) {
      const HFSolution h2 =
          hf_two_level(params_from_chi(Model::two_level, 10, x));
      c.observe(quantum_discord(hf_pair_state_two_level(h2),
                                MeasurementSet::ssr_restricted) -
                hf_discord_closed_form_two_level(x));
      const HFSolution h3 =
          hf_three_level(params_from_chi(Model::three_level, 10, x));
      const ThreeLevelPair pairs[3] = {ThreeLevelPair::p01, ThreeLevelPair::p02,
                                       ThreeLevelPair::p12};
      const int idx[3][2] = {{0, 1}, {0, 2}, {1, 2}};
      for (int k = 0; k < 3; ++k)
        c.observe(
            quantum_discord(hf_pair_state_three_level(h3, idx[k][0], idx[k][1]),
                            MeasurementSet::ssr_restricted) -
            hf_discord_closed_form_three_level(x, pairs[k]));
    }
    results.push_back(c.result());
  }

  {
    Check c("unrestricted discord equals closed form on pure pair states",
            1e-7);
    for (double x : {1.5, 2.0, 2.9}) {
      const HFSolution h2 =
          hf_two_level(params_from_chi(Model::two_level, 10, x));
      c.observe(quantum_discord(hf_pair_state_two_level(h2),
                                MeasurementSet::unrestricted) -
                hf_discord_closed_form_two_level(x));
      const HFSolution h3 =
          hf_three_level(params_from_chi(Model::three_level, 10, x));
      c.observe(quantum_discord(hf_pair_state_three_level(h3, 0, 1),
                                MeasurementSet::unrestricted) -
                hf_discord_closed_form_three_level(x, ThreeLevelPair::p01));
    }
    results.push_back(c.result());
  }

  {
    Check c("overall entropy equals twice the one-body entropy (two levels)",
            1e-12);
    for (double x : {0.3, 1.0, 1.7, 3.0}) {
      const GroundState gs = ground_state(
          build_hamiltonian(params_from_chi(Model::two_level, 14, x)));
      const EntropyReport e = entropies(exact_one_body_density(gs), 14);
      c.observe(e.overall_entropy - 2.0 * e.one_body_entropy);
    }
    results.push_back(c.result());
  }

  {
    Check c("variational bound and eps_corr >= 0", 0.0);
    SweepConfig cfg;
    cfg.model = Model::two_level;
    cfg.particle_numbers = {10};
    cfg.chi_min = 0.1;
    cfg.chi_max = 4.0;
    cfg.steps = 25;
    for (const SweepRecord& r : run_sweep(cfg, ExecutionPolicy::serial)) {
      c.observe(std::min(0.0, r.e_hf - r.e_exact));
      c.observe(std::min(0.0, r.eps_corr));
      c.observe(std::min(0.0, r.s_ov));
    }
    results.push_back(c.result());
  }

  {
    Check c("parity selection rules", 1e-12);
    const GroundState g2 =
        ground_state(build_hamiltonian(params_from_chi(Model::two_level, 9, 2.0)));
    c.observe(expectation_k(g2, TwoLevelOp::k_plus));
    c.observe(expectation_k(g2, TwoLevelOp::k_minus));
    const GroundState g3 = ground_state(
        build_hamiltonian(params_from_chi(Model::three_level, 6, 2.0)));
    c.observe(expectation_k(g3, 1, 0));
    c.observe(expectation_k(g3, 2, 0));
    c.observe(expectation_k(g3, 2, 1));
    results.push_back(c.result());
  }

  {
    Check c("second difference exact on quadratics", 1e-8);
    std::vector<double> x, y;
    double t = 0.3;
    for (int i = 0; i < 30; ++i) {
      x.push_back(t);
      y.push_back(3.0 * t * t - 2.0 * t + 7.0);
      t += 0.05 + 0.013 * (i % 5);
    }
    for (double v : second_derivative_series(x, y)) c.observe(v - 6.0);
    results.push_back(c.result());
  }

  return results;
}

}  // namespace lipkin
