#include "lipkin/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace lipkin {

double entropy_g(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log(x);
}

double entropy_f(double x) { return entropy_g(x) + entropy_g(1.0 - x); }

OneBodyDensityBlock exact_one_body_density(const GroundState& gs) {
  const double n = gs.basis.n_particles;
  OneBodyDensityBlock block;
  block.multiplicity = gs.basis.n_particles;
  if (gs.basis.model == Model::two_level) {
    const double k0 = expectation_k(gs, TwoLevelOp::k0);
    const double kp = expectation_k(gs, TwoLevelOp::k_plus);
    const double km = expectation_k(gs, TwoLevelOp::k_minus);
    block.matrix = Eigen::Matrix2d();
    // rows/cols ordered (-, +); gamma_ij = <c+_j c_i> per p
    block.matrix << 0.5 - k0 / n, kp / n,  //
        km / n, 0.5 + k0 / n;
  } else {
    block.matrix = Eigen::Matrix3d();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        block.matrix(i, j) = expectation_k(gs, j, i) / n;
  }
  return block;
}

std::vector<double> natural_occupations(const OneBodyDensityBlock& block) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(block.matrix);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("natural_occupations: eigensolve failed");
  std::vector<double> occ(solver.eigenvalues().data(),
                          solver.eigenvalues().data() +
                              solver.eigenvalues().size());
  std::sort(occ.begin(), occ.end(), std::greater<double>());
  return occ;
}

EntropyReport entropies(const OneBodyDensityBlock& block, int n_particles) {
  EntropyReport report;
  report.natural_occupations = natural_occupations(block);
  double f_sum = 0.0, g_sum = 0.0;
  for (double lambda : report.natural_occupations) {
    f_sum += entropy_f(lambda);
    g_sum += entropy_g(lambda);
  }
  report.overall_entropy = n_particles * f_sum;
  report.overall_entropy_per_particle = f_sum;
  report.one_body_entropy = n_particles * g_sum;
  return report;
}

// ---------------------------------------------------------------------------
// Two-mode states
// ---------------------------------------------------------------------------

TwoModeState two_mode_state_from_correlators(double n_a, double n_b,
                                             double n_ab,
                                             std::complex<double> coherence) {
  const double p00 = 1.0 - n_a - n_b + n_ab;
  const double p10 = n_a - n_ab;
  const double p01 = n_b - n_ab;
  const double p11 = n_ab;
  constexpr double tol = 1e-10;
  auto bad = [&](const char* what) {
    std::ostringstream os;
    os << "two_mode_state_from_correlators: non-physical correlators (" << what
       << "): n_a=" << n_a << " n_b=" << n_b << " n_ab=" << n_ab
       << " |coh|=" << std::abs(coherence);
    return std::invalid_argument(os.str());
  };
  if (p00 < -tol || p10 < -tol || p01 < -tol || p11 < -tol)
    throw bad("negative probability");
  if (std::norm(coherence) > p10 * p01 + tol) throw bad("coherence too large");

  TwoModeState s;
  s.rho = Eigen::Matrix4cd::Zero();
  s.rho(0, 0) = p00;
  s.rho(1, 1) = p10;
  s.rho(2, 2) = p01;
  s.rho(3, 3) = p11;
  s.rho(1, 2) = coherence;
  s.rho(2, 1) = std::conj(coherence);
  return s;
}

Eigen::Matrix2cd reduced_mode_a(const TwoModeState& s) {
  Eigen::Matrix2cd r;
  r << s.rho(0, 0) + s.rho(2, 2), s.rho(0, 1) + s.rho(2, 3),  //
      s.rho(1, 0) + s.rho(3, 2), s.rho(1, 1) + s.rho(3, 3);
  return r;
}

Eigen::Matrix2cd reduced_mode_b(const TwoModeState& s) {
  Eigen::Matrix2cd r;
  r << s.rho(0, 0) + s.rho(1, 1), s.rho(0, 2) + s.rho(1, 3),  //
      s.rho(2, 0) + s.rho(3, 1), s.rho(2, 2) + s.rho(3, 3);
  return r;
}

double von_neumann_entropy(const Eigen::MatrixXcd& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("von_neumann_entropy: eigensolve failed");
  double s = 0.0;
  for (int i = 0; i < solver.eigenvalues().size(); ++i)
    s += entropy_g(std::max(solver.eigenvalues()[i], 0.0));
  return s;
}

double mutual_information(const TwoModeState& s) {
  const double info = von_neumann_entropy(reduced_mode_a(s)) +
                      von_neumann_entropy(reduced_mode_b(s)) -
                      von_neumann_entropy(s.rho);
  return std::max(info, 0.0);
}

double purity(const TwoModeState& s) {
  return (s.rho * s.rho).trace().real();
}

namespace {

// Entropy of a 2x2 Hermitian PSD matrix normalized to unit trace.
double entropy_2x2_normalized(const Eigen::Matrix2cd& m, double trace) {
  const double t = m.trace().real();
  const double det =
      (m(0, 0) * m(1, 1)).real() - std::norm(m(0, 1));
  const double disc = std::sqrt(std::max(t * t - 4.0 * det, 0.0));
  const double l1 = 0.5 * (t + disc) / trace;
  const double l2 = 0.5 * (t - disc) / trace;
  return entropy_g(std::max(l1, 0.0)) + entropy_g(std::max(l2, 0.0));
}

// sum_k p_k S(Pi_k rho Pi_k / p_k) for the rank-1 measurement basis
// {|v>, |v_perp>} on mode B, |v> = cos(theta)|0> + e^{i mu} sin(theta)|1>.
// The projected total state equals (conditional 2x2 block) x |v_k><v_k|, so
// its entropy is that of the block.
double conditional_entropy(const Eigen::Matrix4cd& rho, double theta,
                           double mu) {
  const std::complex<double> phase(std::cos(mu), std::sin(mu));
  const Eigen::Vector2cd v0(std::cos(theta), phase * std::sin(theta));
  const Eigen::Vector2cd v1(std::sin(theta), -phase * std::cos(theta));
  double total = 0.0;
  for (const auto& v : {v0, v1}) {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    for (int a = 0; a < 2; ++a)
      for (int ap = 0; ap < 2; ++ap)
        for (int b = 0; b < 2; ++b)
          for (int bp = 0; bp < 2; ++bp)
            m(a, ap) += std::conj(v[b]) * rho(a + 2 * b, ap + 2 * bp) * v[bp];
    const double p = m.trace().real();
    if (p > 1e-14) total += p * entropy_2x2_normalized(m, p);
  }
  return total;
}

}  // namespace

double quantum_discord(const TwoModeState& s, MeasurementSet set) {
  const double s_a = von_neumann_entropy(reduced_mode_a(s));
  const double info = von_neumann_entropy(reduced_mode_b(s)) -
                      von_neumann_entropy(s.rho) + s_a;

  double best;
  if (set == MeasurementSet::ssr_restricted) {
    best = conditional_entropy(s.rho, 0.0, 0.0);
  } else {
    constexpr int grid = 64;
    constexpr double theta_max = std::numbers::pi / 2.0;
    constexpr double mu_max = 2.0 * std::numbers::pi;
    double best_theta = 0.0, best_mu = 0.0;
    best = conditional_entropy(s.rho, 0.0, 0.0);
    for (int i = 0; i < grid; ++i) {
      const double theta = theta_max * i / (grid - 1);
      for (int j = 0; j < grid; ++j) {
        const double mu = mu_max * j / grid;
        const double c = conditional_entropy(s.rho, theta, mu);
        if (c < best) {
          best = c;
          best_theta = theta;
          best_mu = mu;
        }
      }
    }
    // compass refinement down to 1e-9 in the angles
    double step = theta_max / (grid - 1);
    while (step > 1e-9) {
      bool improved = false;
      const double cand[4][2] = {{best_theta - step, best_mu},
                                 {best_theta + step, best_mu},
                                 {best_theta, best_mu - step},
                                 {best_theta, best_mu + step}};
      for (const auto& c : cand) {
        const double theta = std::clamp(c[0], 0.0, theta_max);
        double mu = std::fmod(c[1] + mu_max, mu_max);
        const double val = conditional_entropy(s.rho, theta, mu);
        if (val < best - 1e-16) {
          best = val;
          best_theta = theta;
          best_mu = mu;
          improved = true;
        }
      }
      if (!improved) step *= 0.5;
    }
  }

  const double j_classical = s_a - best;
  return std::max(info - j_classical, 0.0);
}

// ---------------------------------------------------------------------------
// Pair states of one degeneracy slot
// ---------------------------------------------------------------------------

namespace {

// Same-p pair state from a one-particle-per-p one-body density block:
// <n_A n_B> follows from Wick, n_a*n_b - |gamma_AB|^2 (identically zero
// for the states in this library).
TwoModeState pair_state_from_density(const Eigen::MatrixXd& gamma, int a,
                                     int b) {
  const double n_a = gamma(a, a);
  const double n_b = gamma(b, b);
  const double coh = gamma(a, b);  // <c+_B c_A>
  const double n_ab = std::max(n_a * n_b - coh * coh, 0.0);
  return two_mode_state_from_correlators(n_a, n_b, n_ab, coh);
}

}  // namespace

TwoModeState hf_pair_state_two_level(const HFSolution& hf) {
  if (hf.model != Model::two_level)
    throw std::invalid_argument("hf_pair_state_two_level: wrong model");
  return pair_state_from_density(hf.density_block, 0, 1);
}

TwoModeState hf_pair_state_three_level(const HFSolution& hf, int level_a,
                                       int level_b) {
  if (hf.model != Model::three_level)
    throw std::invalid_argument("hf_pair_state_three_level: wrong model");
  if (level_a < 0 || level_b < 0 || level_a > 2 || level_b > 2 ||
      level_a == level_b)
    throw std::invalid_argument("hf_pair_state_three_level: bad level pair");
  return pair_state_from_density(hf.density_block, level_a, level_b);
}

TwoModeState exact_pair_state_two_level(const GroundState& gs) {
  if (gs.basis.model != Model::two_level)
    throw std::invalid_argument("exact_pair_state_two_level: wrong model");
  const OneBodyDensityBlock block = exact_one_body_density(gs);
  // every collective basis state carries exactly one particle per p, so the
  // same-p double occupation vanishes identically
  return two_mode_state_from_correlators(block.matrix(0, 0),
                                         block.matrix(1, 1), 0.0,
                                         block.matrix(0, 1));
}

TwoModeState exact_pair_state_three_level(const GroundState& gs, int level_a,
                                          int level_b) {
  if (gs.basis.model != Model::three_level)
    throw std::invalid_argument("exact_pair_state_three_level: wrong model");
  if (level_a < 0 || level_b < 0 || level_a > 2 || level_b > 2 ||
      level_a == level_b)
    throw std::invalid_argument("exact_pair_state_three_level: bad level pair");
  const OneBodyDensityBlock block = exact_one_body_density(gs);
  return two_mode_state_from_correlators(
      block.matrix(level_a, level_a), block.matrix(level_b, level_b), 0.0,
      block.matrix(level_a, level_b));
}

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

double hf_discord_h(double x) {
  return entropy_g(0.5 * (1.0 - 1.0 / x)) + entropy_g(0.5 * (1.0 + 1.0 / x));
}

double hf_discord_closed_form_two_level(double chi_value) {
  if (chi_value < 0.0)
    throw std::invalid_argument("hf_discord_closed_form_two_level: chi < 0");
  return chi_value <= 1.0 ? 0.0 : hf_discord_h(chi_value);
}

double hf_discord_closed_form_three_level(double chi_value,
                                          ThreeLevelPair pair) {
  if (chi_value < 0.0)
    throw std::invalid_argument("hf_discord_closed_form_three_level: chi < 0");
  const auto s = [](double x) { return entropy_g(x); };
  const double inv = chi_value > 0.0 ? 1.0 / chi_value : 0.0;
  switch (pair) {
    case ThreeLevelPair::p01:
      if (chi_value <= 1.0) return 0.0;
      if (chi_value <= 3.0)
        return s(0.5 * (1.0 + inv)) + s(0.5 * (1.0 - inv));
      return -s(2.0 / 3.0 + inv) + s(1.0 / 3.0 + inv) + s(1.0 / 3.0);
    case ThreeLevelPair::p02:
      if (chi_value <= 3.0) return 0.0;
      return s(1.0 / 3.0 + inv) + s(1.0 / 3.0 - inv) - s(2.0 / 3.0);
    case ThreeLevelPair::p12:
      if (chi_value <= 3.0) return 0.0;
      return -s(2.0 / 3.0 - inv) + s(1.0 / 3.0 - inv) + s(1.0 / 3.0);
  }
  throw std::invalid_argument("hf_discord_closed_form_three_level: bad pair");
}

}  // namespace lipkin
