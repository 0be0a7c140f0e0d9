#pragma once

#include "lipkin/mean_field.hpp"
#include "lipkin/model.hpp"

#include <complex>
#include <vector>

namespace lipkin {

/// Binary entropy kernels, natural log, 0 log 0 = 0 by explicit branch.
double entropy_f(double x);  ///< -(1-x) ln(1-x) - x ln(x)
double entropy_g(double x);  ///< -x ln(x)

/// Per-p block of the one-body density matrix <c+_j c_i> over the original
/// levels; the full matrix consists of `multiplicity` identical blocks.
struct OneBodyDensityBlock {
  Eigen::MatrixXd matrix;
  int multiplicity = 1;
};

/// One-body density of an exact collective ground state, built from the
/// generator expectation values (off-diagonals vanish by the parity
/// selection rules and are computed anyway).
OneBodyDensityBlock exact_one_body_density(const GroundState& gs);

/// Eigenvalues of the block, descending.
std::vector<double> natural_occupations(const OneBodyDensityBlock& block);

struct EntropyReport {
  double overall_entropy = 0.0;
  double overall_entropy_per_particle = 0.0;
  double one_body_entropy = 0.0;
  std::vector<double> natural_occupations;
};

/// Overall entropy N * sum_i f(lambda_i), one-body entropy N * sum_i
/// g(lambda_i) over the natural occupations of a per-p block repeated N
/// times.
EntropyReport entropies(const OneBodyDensityBlock& block, int n_particles);

/// Reduced state of an ordered orbital pair (A, B) over the occupation basis
/// {|00>, |10>, |01>, |11>}, index = a + 2b. Parity superselection allows
/// coherences only inside the odd block |10><01| and the even block
/// |00><11|; the states produced in this library have no |00><11| element.
struct TwoModeState {
  Eigen::Matrix4cd rho;
};

/// Assemble the pair state from <n_A>, <n_B>, <n_A n_B> and the coherence
/// <c+_B c_A>. Non-physical correlator sets (negative probabilities, or
/// |coh|^2 > p10*p01 beyond 1e-10) are rejected, not clipped.
TwoModeState two_mode_state_from_correlators(double n_a, double n_b,
                                             double n_ab,
                                             std::complex<double> coherence);

Eigen::Matrix2cd reduced_mode_a(const TwoModeState& s);
Eigen::Matrix2cd reduced_mode_b(const TwoModeState& s);

double von_neumann_entropy(const Eigen::MatrixXcd& rho);

/// I(A,B) = S(A) + S(B) - S(A,B), partial traces over the occupation
/// factors (which coincides with the fermionic partial trace for these
/// superselection-blocked states).
double mutual_information(const TwoModeState& s);

/// Tr rho^2.
double purity(const TwoModeState& s);

/// Measurements allowed in the maximization of the classical correlation
/// J(A,B): any rank-1 von Neumann measurement on mode B, or only the
/// occupation-basis measurement permitted by the parity superselection rule.
enum class MeasurementSet { unrestricted, ssr_restricted };

/// delta(A,B) = I(A,B) - max_Pi [S(A) - sum_k p_k S(Pi_k rho Pi_k / p_k)].
/// The unrestricted maximization scans |v> = cos(theta)|0> +
/// e^{i mu} sin(theta)|1> on a 64x64 grid and refines locally to 1e-9.
/// Clamped at zero against -1e-12 numerical noise.
double quantum_discord(const TwoModeState& s, MeasurementSet set);

/// Pair states of one degeneracy slot p (one particle per p, so the double
/// occupation <n_A n_B> vanishes identically for every state handled here).
TwoModeState hf_pair_state_two_level(const HFSolution& hf);
TwoModeState hf_pair_state_three_level(const HFSolution& hf, int level_a,
                                       int level_b);
TwoModeState exact_pair_state_two_level(const GroundState& gs);
TwoModeState exact_pair_state_three_level(const GroundState& gs, int level_a,
                                          int level_b);

/// h(x) entering the two-level mean-field pair discord.
double hf_discord_h(double x);

/// 0 for chi <= 1, h(chi) above.
double hf_discord_closed_form_two_level(double chi_value);

enum class ThreeLevelPair { p01, p02, p12 };

/// Piecewise closed forms for the three-level mean-field pair discords;
/// pair 01 on 1 < chi <= 3 coincides with the two-level h(chi).
double hf_discord_closed_form_three_level(double chi_value,
                                          ThreeLevelPair pair);

}  // namespace lipkin
