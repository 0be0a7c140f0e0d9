#pragma once

#include <Eigen/Dense>

#include <array>
#include <map>
#include <string>
#include <vector>

namespace lipkin {

enum class Model { two_level, three_level };

std::string to_string(Model m);

/// N fermions distributed over 2 or 3 levels of degeneracy N, level spacing
/// epsilon and monopole interaction strength V. The dimensionless coupling
/// chi = (N-1) V / epsilon controls the phase structure.
struct ModelParams {
  int n_particles = 0;
  double epsilon = 1.0;
  double v = 0.0;
  Model model = Model::two_level;

  /// Throws std::invalid_argument unless N >= 1, epsilon > 0, V >= 0.
  void validate() const;
};

double chi(const ModelParams& p);

/// Inverse parametrization used by sweeps: V = chi * epsilon / (N - 1).
/// Requires N >= 2; for N = 1 the chi parametrization is undefined and V
/// must be given directly.
ModelParams params_from_chi(Model model, int n_particles, double chi_value,
                            double epsilon = 1.0);

/// Many-body basis of the maximal symmetric irrep in which the ground state
/// lives. Two-level: |J=N/2, M>, labels {2M, 0} with M ascending (2M kept
/// integer for odd N). Three-level: |n1, n2> with n0 = N - n1 - n2 >= 0,
/// labels {n1, n2} in lexicographic order. Label order is part of the
/// contract because state vectors are exchanged across modules.
struct CollectiveBasis {
  Model model = Model::two_level;
  int n_particles = 0;
  std::vector<std::array<int, 2>> labels;
  std::map<std::array<int, 2>, int> index;

  int dimension() const { return static_cast<int>(labels.size()); }
  int index_of(const std::array<int, 2>& label) const;
};

CollectiveBasis build_two_level_basis(int n_particles);
CollectiveBasis build_three_level_basis(int n_particles);

struct HamiltonianMatrix {
  CollectiveBasis basis;
  Eigen::MatrixXd entries;
};

/// H = eps*K0 - (V/2)(K+^2 + K-^2) in the |J, M> basis. Diagonal eps*M,
/// off-diagonals from the SU(2) ladder convention
/// K+-|J,M> = sqrt(J(J+1) - M(M+-1)) |J,M+-1>.
HamiltonianMatrix build_two_level_hamiltonian(const ModelParams& p);

/// H = eps*(K22 - K00) - (V/2)(K10^2 + K20^2 + K21^2 + h.c.) realized on the
/// symmetric irrep through the three-mode boson mapping K_{ss'} -> b+_s b_s'.
HamiltonianMatrix build_three_level_hamiltonian(const ModelParams& p);

HamiltonianMatrix build_hamiltonian(const ModelParams& p);

/// True if the basis label belongs to the even excitation-parity sector
/// (even M + N/2 for two levels, even n1 and n2 for three).
bool even_parity_label(const CollectiveBasis& basis, const std::array<int, 2>& label);

struct GroundState {
  double energy = 0.0;
  Eigen::VectorXd vector;
  CollectiveBasis basis;
  /// Set when the two lowest eigenvalues differ by less than
  /// 1e-10 * max|H| (even/odd doublet at large chi); the even-parity
  /// member of the doublet is returned.
  bool quasi_degenerate = false;
};

/// Minimal eigenpair of a dense symmetric eigensolve. The vector is
/// normalized, its largest-magnitude amplitude is positive, and its support
/// is verified to lie in the even-parity sector after the fact.
GroundState ground_state(const HamiltonianMatrix& h);

enum class TwoLevelOp { k0, k_plus, k_minus };

/// <gs| K |gs> for the two-level generators, evaluated through the
/// collective-basis ladder action (single steps, not the squared forms).
double expectation_k(const GroundState& gs, TwoLevelOp op);

/// <gs| K_{sigma sigma'} |gs> for the three-level generators,
/// sigma, sigma' in {0, 1, 2}.
double expectation_k(const GroundState& gs, int sigma, int sigma_prime);

}  // namespace lipkin
