#include "lipkin/mean_field.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace lipkin {

namespace {

constexpr double half_pi = std::numbers::pi / 2.0;

// Golden-section search for the minimum of f on [lo, hi].
double golden_min(const std::function<double(double)>& f, double lo, double hi,
                  double tol) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }
  const double mid = 0.5 * (a + b);
  // prefer exact interval ends when they win (boundary minima)
  if (f(lo) <= f(mid) && f(lo) <= f(hi)) return lo;
  if (f(hi) < f(mid)) return hi;
  return mid;
}

}  // namespace

double hf_energy_two_level(double phi, const ModelParams& p) {
  const double x = chi(p);
  const double s = std::sin(phi);
  return -0.5 * p.n_particles * p.epsilon *
         (std::cos(phi) + 0.5 * x * s * s);
}

double hf_energy_three_level(double alpha, double beta, const ModelParams& p) {
  const double x = chi(p);
  const double c2a = std::cos(alpha) * std::cos(alpha);
  const double s2a = 1.0 - c2a;
  const double c2b = std::cos(beta) * std::cos(beta);
  const double s2b = 1.0 - c2b;
  const double e = s2a * s2b - c2a - x * (c2a * s2a + s2a * s2a * c2b * s2b);
  return p.n_particles * p.epsilon * e;
}

double hf_cos_phi_closed_form(double chi_value) {
  return chi_value <= 1.0 ? 1.0 : 1.0 / chi_value;
}

double hf_cos2_alpha_closed_form(double chi_value) {
  if (chi_value <= 1.0) return 1.0;
  if (chi_value <= 3.0) return 0.5 * (1.0 + 1.0 / chi_value);
  return (chi_value + 3.0) / (3.0 * chi_value);
}

double hf_cos2_beta_closed_form(double chi_value) {
  if (chi_value <= 3.0) return 1.0;
  return 0.5 * (3.0 / (2.0 * chi_value - 3.0) + 1.0);
}

Eigen::Matrix3d hf_rotation_three_level(double alpha, double beta) {
  const double ca = std::cos(alpha), sa = std::sin(alpha);
  const double cb = std::cos(beta), sb = std::sin(beta);
  Eigen::Matrix3d u;
  u << ca, cb * sa, sb * sa,                                   //
      -cb * sa, 1.0 + cb * cb * (ca - 1.0), sb * cb * (ca - 1.0),  //
      -sb * sa, sb * cb * (ca - 1.0), 1.0 + sb * sb * (ca - 1.0);
  return u;
}

HFSolution hf_two_level(const ModelParams& p) {
  p.validate();
  if (p.model != Model::two_level)
    throw std::invalid_argument("hf_two_level: wrong model");
  if (p.n_particles < 2)
    throw std::invalid_argument("hf_two_level: requires N >= 2");

  auto e = [&](double phi) { return hf_energy_two_level(phi, p); };
  double phi = golden_min(e, 0.0, half_pi, 1e-12);
  if (phi < 1e-9) phi = 0.0;

  HFSolution sol;
  sol.model = Model::two_level;
  sol.angles = {phi, 0.0};
  sol.energy = e(phi);
  const double c = std::cos(0.5 * phi), s = std::sin(0.5 * phi);
  sol.rotation = Eigen::Matrix2d();
  sol.rotation << c, -s, s, c;
  sol.density_block =
      sol.rotation.transpose() * Eigen::Vector2d(1.0, 0.0).asDiagonal() *
      sol.rotation;
  return sol;
}

HFSolution hf_three_level(const ModelParams& p) {
  p.validate();
  if (p.model != Model::three_level)
    throw std::invalid_argument("hf_three_level: wrong model");
  if (p.n_particles < 2)
    throw std::invalid_argument("hf_three_level: requires N >= 2");

  auto e = [&](double a, double b) { return hf_energy_three_level(a, b, p); };

  // 16 deterministic starts on a 4x4 grid, then coordinate descent with a
  // shrinking local window per axis.
  double best_a = 0.0, best_b = 0.0, best_f = e(0.0, 0.0);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      double a = (i + 0.5) / 4.0 * half_pi;
      double b = (j + 0.5) / 4.0 * half_pi;
      double w = half_pi;
      double f = e(a, b);
      while (w > 1e-10) {
        a = golden_min([&](double t) { return e(t, b); },
                       std::max(0.0, a - w), std::min(half_pi, a + w), 1e-13);
        b = golden_min([&](double t) { return e(a, t); },
                       std::max(0.0, b - w), std::min(half_pi, b + w), 1e-13);
        f = e(a, b);
        w *= 0.6;
      }
      if (f < best_f - 1e-14 ||
          (f < best_f + 1e-14 && (a < best_a || (a == best_a && b < best_b)))) {
        best_f = f;
        best_a = a;
        best_b = b;
      }
    }
  }
  if (best_a < 1e-8) {
    best_a = 0.0;
    best_b = 0.0;  // beta has no effect in the spherical phase
  }
  if (best_b < 1e-8) best_b = 0.0;

  const double x = chi(p);
  const double c2a = std::cos(best_a) * std::cos(best_a);
  const double c2b = std::cos(best_b) * std::cos(best_b);
  const double c2a_ref = hf_cos2_alpha_closed_form(x);
  const double c2b_ref = hf_cos2_beta_closed_form(x);
  if (std::abs(c2a - c2a_ref) > 1e-6 || std::abs(c2b - c2b_ref) > 1e-6) {
    std::ostringstream os;
    os << "hf_three_level: minimizer disagrees with the closed-form angles "
          "at chi = "
       << x << " (cos^2 alpha " << c2a << " vs " << c2a_ref << ", cos^2 beta "
       << c2b << " vs " << c2b_ref << ")";
    throw std::runtime_error(os.str());
  }

  HFSolution sol;
  sol.model = Model::three_level;
  sol.angles = {best_a, best_b};
  sol.energy = e(best_a, best_b);
  sol.rotation = hf_rotation_three_level(best_a, best_b);
  sol.density_block = sol.rotation.transpose() *
                      Eigen::Vector3d(1.0, 0.0, 0.0).asDiagonal() *
                      sol.rotation;
  return sol;
}

HFSolution hf_solve(const ModelParams& p) {
  return p.model == Model::two_level ? hf_two_level(p) : hf_three_level(p);
}

double relative_correlation_energy(double e_exact, double e_hf) {
  if (e_exact == 0.0)
    throw std::invalid_argument(
        "relative_correlation_energy: e_exact must be nonzero");
  if (!(e_exact < 0.0))
    throw std::invalid_argument(
        "relative_correlation_energy: e_exact must be negative");
  if (e_exact > e_hf + 1e-10 * std::max(1.0, std::abs(e_exact))) {
    std::ostringstream os;
    os << "relative_correlation_energy: variational bound violated "
          "(E_exact = "
       << e_exact << " > E_HF = " << e_hf << ")";
    throw std::runtime_error(os.str());
  }
  return (e_exact - e_hf) / e_exact;
}

}  // namespace lipkin
