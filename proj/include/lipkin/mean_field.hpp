#pragma once

#include "lipkin/model.hpp"

namespace lipkin {

/// Variational mean-field (HF) solution: a Slater determinant of rotated
/// orbitals, one particle per degeneracy slot p.
struct HFSolution {
  Model model = Model::two_level;
  /// {phi, 0} for two levels, {alpha, beta} for three; radians in [0, pi/2].
  std::array<double, 2> angles{0.0, 0.0};
  double energy = 0.0;
  /// Orthogonal orbital rotation, rows = HF orbitals in the original-level
  /// basis; row 0 is the occupied orbital.
  Eigen::MatrixXd rotation;
  /// Per-p one-body density block, rotation^T diag(1,0,..) rotation.
  Eigen::MatrixXd density_block;
};

/// E(phi) = -(N eps / 2) [cos(phi) + (chi/2) sin^2(phi)].
double hf_energy_two_level(double phi, const ModelParams& p);

/// Energy of the determinant built from the alpha/beta-rotated occupied
/// orbital: E/(N eps) = s2a*s2b - c2a - chi*(c2a*s2a + s2a^2 * c2b*s2b)
/// with c2a = cos^2(alpha) etc.
double hf_energy_three_level(double alpha, double beta, const ModelParams& p);

/// Piecewise closed forms for the stationary angles; used as cross-checks
/// of the numerical minimization.
double hf_cos_phi_closed_form(double chi_value);
double hf_cos2_alpha_closed_form(double chi_value);
double hf_cos2_beta_closed_form(double chi_value);

/// Two-angle orbital rotation for the three-level model; row 0 is the
/// occupied orbital (c_a, c_b s_a, s_b s_a).
Eigen::Matrix3d hf_rotation_three_level(double alpha, double beta);

/// Bracketed scalar minimization of E(phi) over [0, pi/2]. Requires N >= 2.
HFSolution hf_two_level(const ModelParams& p);

/// Bounded 2-d minimization of E(alpha, beta) over [0, pi/2]^2 with 16
/// deterministic starts. Requires N >= 2; throws if the minimizer disagrees
/// with the closed-form angles beyond 1e-6 (would signal a functional bug).
HFSolution hf_three_level(const ModelParams& p);

HFSolution hf_solve(const ModelParams& p);

/// (E_exact - E_HF) / E_exact; >= 0 by the variational bound. Rejects
/// e_exact >= 0 and flags e_exact > e_hf as an upstream bug.
double relative_correlation_energy(double e_exact, double e_hf);

}  // namespace lipkin
