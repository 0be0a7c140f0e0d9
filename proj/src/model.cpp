#include "lipkin/model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lipkin {

std::string to_string(Model m) {
  return m == Model::two_level ? "two" : "three";
}

void ModelParams::validate() const {
  if (n_particles < 1)
    throw std::invalid_argument("ModelParams: n_particles must be >= 1");
  if (!(epsilon > 0.0))
    throw std::invalid_argument("ModelParams: epsilon must be > 0");
  if (!(v >= 0.0))
    throw std::invalid_argument("ModelParams: v must be >= 0");
}

double chi(const ModelParams& p) {
  p.validate();
  return (p.n_particles - 1) * p.v / p.epsilon;
}

ModelParams params_from_chi(Model model, int n_particles, double chi_value,
                            double epsilon) {
  if (n_particles < 2)
    throw std::invalid_argument(
        "params_from_chi: chi parametrization requires N >= 2");
  if (!(chi_value >= 0.0))
    throw std::invalid_argument("params_from_chi: chi must be >= 0");
  ModelParams p;
  p.model = model;
  p.n_particles = n_particles;
  p.epsilon = epsilon;
  p.v = chi_value * epsilon / (n_particles - 1);
  p.validate();
  return p;
}

int CollectiveBasis::index_of(const std::array<int, 2>& label) const {
  auto it = index.find(label);
  if (it == index.end()) {
    std::ostringstream os;
    os << "CollectiveBasis: label (" << label[0] << ", " << label[1]
       << ") not in basis";
    throw std::invalid_argument(os.str());
  }
  return it->second;
}

CollectiveBasis build_two_level_basis(int n_particles) {
  if (n_particles < 1)
    throw std::invalid_argument("build_two_level_basis: N must be >= 1");
  CollectiveBasis b;
  b.model = Model::two_level;
  b.n_particles = n_particles;
  // M = -J .. J ascending, stored as 2M
  for (int m2 = -n_particles; m2 <= n_particles; m2 += 2) {
    b.index[{m2, 0}] = static_cast<int>(b.labels.size());
    b.labels.push_back({m2, 0});
  }
  return b;
}

CollectiveBasis build_three_level_basis(int n_particles) {
  if (n_particles < 1)
    throw std::invalid_argument("build_three_level_basis: N must be >= 1");
  CollectiveBasis b;
  b.model = Model::three_level;
  b.n_particles = n_particles;
  for (int n1 = 0; n1 <= n_particles; ++n1)
    for (int n2 = 0; n2 + n1 <= n_particles; ++n2) {
      b.index[{n1, n2}] = static_cast<int>(b.labels.size());
      b.labels.push_back({n1, n2});
    }
  return b;
}

HamiltonianMatrix build_two_level_hamiltonian(const ModelParams& p) {
  p.validate();
  if (p.model != Model::two_level)
    throw std::invalid_argument("build_two_level_hamiltonian: wrong model");
  CollectiveBasis basis = build_two_level_basis(p.n_particles);
  const int dim = basis.dimension();
  const double jj = 0.25 * p.n_particles * (p.n_particles + 2);  // J(J+1)
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const double m = 0.5 * basis.labels[i][0];
    h(i, i) = p.epsilon * m;
    if (i + 2 < dim) {
      // <M+2| K+^2 |M> = sqrt(J(J+1)-M(M+1)) * sqrt(J(J+1)-(M+1)(M+2))
      const double amp =
          std::sqrt(jj - m * (m + 1.0)) * std::sqrt(jj - (m + 1.0) * (m + 2.0));
      h(i + 2, i) += -0.5 * p.v * amp;
      h(i, i + 2) += -0.5 * p.v * amp;
    }
  }
  return {std::move(basis), std::move(h)};
}

HamiltonianMatrix build_three_level_hamiltonian(const ModelParams& p) {
  p.validate();
  if (p.model != Model::three_level)
    throw std::invalid_argument("build_three_level_hamiltonian: wrong model");
  CollectiveBasis basis = build_three_level_basis(p.n_particles);
  const int dim = basis.dimension();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  auto add_sym = [&](int i, int j, double val) {
    h(i, j) += val;
    h(j, i) += val;
  };
  for (int i = 0; i < dim; ++i) {
    const int n1 = basis.labels[i][0];
    const int n2 = basis.labels[i][1];
    const int n0 = p.n_particles - n1 - n2;
    h(i, i) = p.epsilon * (n2 - n0);
    if (n0 >= 2) {
      // K10^2: two particles 0 -> 1
      add_sym(basis.index_of({n1 + 2, n2}), i,
              -0.5 * p.v *
                  std::sqrt(double(n1 + 1) * (n1 + 2) * n0 * (n0 - 1)));
      // K20^2: two particles 0 -> 2
      add_sym(basis.index_of({n1, n2 + 2}), i,
              -0.5 * p.v *
                  std::sqrt(double(n2 + 1) * (n2 + 2) * n0 * (n0 - 1)));
    }
    if (n1 >= 2) {
      // K21^2: two particles 1 -> 2
      add_sym(basis.index_of({n1 - 2, n2 + 2}), i,
              -0.5 * p.v *
                  std::sqrt(double(n2 + 1) * (n2 + 2) * n1 * (n1 - 1)));
    }
  }
  return {std::move(basis), std::move(h)};
}

HamiltonianMatrix build_hamiltonian(const ModelParams& p) {
  return p.model == Model::two_level ? build_two_level_hamiltonian(p)
                                     : build_three_level_hamiltonian(p);
}

bool even_parity_label(const CollectiveBasis& basis,
                       const std::array<int, 2>& label) {
  if (basis.model == Model::two_level) {
    const int excitations = (label[0] + basis.n_particles) / 2;  // M + J
    return excitations % 2 == 0;
  }
  return label[0] % 2 == 0 && label[1] % 2 == 0;
}

namespace {

// Norm of v restricted to the even-parity labels.
double even_sector_norm(const CollectiveBasis& basis, const Eigen::VectorXd& v) {
  double s = 0.0;
  for (int i = 0; i < v.size(); ++i)
    if (even_parity_label(basis, basis.labels[i])) s += v[i] * v[i];
  return std::sqrt(s);
}

Eigen::VectorXd project_even(const CollectiveBasis& basis,
                             const Eigen::VectorXd& v) {
  Eigen::VectorXd out = v;
  for (int i = 0; i < out.size(); ++i)
    if (!even_parity_label(basis, basis.labels[i])) out[i] = 0.0;
  return out;
}

}  // namespace

GroundState ground_state(const HamiltonianMatrix& h) {
  const int dim = h.basis.dimension();
  const double scale = h.entries.cwiseAbs().maxCoeff();
  if (h.entries.rows() != dim || h.entries.cols() != dim)
    throw std::invalid_argument("ground_state: matrix/basis size mismatch");
  if ((h.entries - h.entries.transpose()).cwiseAbs().maxCoeff() >
      1e-12 * std::max(scale, 1.0))
    throw std::invalid_argument("ground_state: matrix is not symmetric");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.entries);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("ground_state: eigensolver did not converge");

  GroundState gs;
  gs.basis = h.basis;
  gs.energy = solver.eigenvalues()[0];

  const double degeneracy_tol = 1e-10 * std::max(scale, 1.0);
  gs.quasi_degenerate =
      dim > 1 && solver.eigenvalues()[1] - solver.eigenvalues()[0] < degeneracy_tol;

  Eigen::VectorXd v = solver.eigenvectors().col(0);
  if (gs.quasi_degenerate) {
    // Within a near-degenerate even/odd doublet the solver may return an
    // arbitrary mixture; the even-parity component of either column is
    // itself a ground state because H never couples the parity sectors.
    Eigen::VectorXd a = project_even(h.basis, solver.eigenvectors().col(0));
    Eigen::VectorXd b = project_even(h.basis, solver.eigenvectors().col(1));
    v = a.norm() >= b.norm() ? a : b;
  }
  v.normalize();

  // Parity support assertion; doubles as a correctness test of the matrix.
  double odd_norm2 = 0.0;
  for (int i = 0; i < dim; ++i)
    if (!even_parity_label(h.basis, h.basis.labels[i])) odd_norm2 += v[i] * v[i];
  if (std::sqrt(odd_norm2) > 1e-8)
    throw std::runtime_error(
        "ground_state: ground state leaks into the odd-parity sector");

  // Sign convention: largest-magnitude amplitude positive.
  int imax = 0;
  for (int i = 1; i < dim; ++i)
    if (std::abs(v[i]) > std::abs(v[imax])) imax = i;
  if (v[imax] < 0.0) v = -v;

  const double residual = (h.entries * v - gs.energy * v).norm();
  if (residual > 1e-10 * std::max(scale, 1.0))
    throw std::runtime_error("ground_state: eigenpair residual too large");

  gs.vector = std::move(v);
  return gs;
}

double expectation_k(const GroundState& gs, TwoLevelOp op) {
  if (gs.basis.model != Model::two_level)
    throw std::invalid_argument("expectation_k: two-level operator on a "
                                "three-level state");
  const int n = gs.basis.n_particles;
  const double jj = 0.25 * n * (n + 2);
  const int dim = gs.basis.dimension();
  double acc = 0.0;
  for (int i = 0; i < dim; ++i) {
    const double m = 0.5 * gs.basis.labels[i][0];
    switch (op) {
      case TwoLevelOp::k0:
        acc += m * gs.vector[i] * gs.vector[i];
        break;
      case TwoLevelOp::k_plus:
        if (i + 1 < dim)
          acc += gs.vector[i + 1] * std::sqrt(jj - m * (m + 1.0)) * gs.vector[i];
        break;
      case TwoLevelOp::k_minus:
        if (i - 1 >= 0)
          acc += gs.vector[i - 1] * std::sqrt(jj - m * (m - 1.0)) * gs.vector[i];
        break;
    }
  }
  return acc;
}

double expectation_k(const GroundState& gs, int sigma, int sigma_prime) {
  if (gs.basis.model != Model::three_level)
    throw std::invalid_argument("expectation_k: three-level operator on a "
                                "two-level state");
  if (sigma < 0 || sigma > 2 || sigma_prime < 0 || sigma_prime > 2)
    throw std::invalid_argument("expectation_k: level index out of range");
  const int n = gs.basis.n_particles;
  const int dim = gs.basis.dimension();
  double acc = 0.0;
  for (int i = 0; i < dim; ++i) {
    std::array<int, 3> occ = {n - gs.basis.labels[i][0] - gs.basis.labels[i][1],
                              gs.basis.labels[i][0], gs.basis.labels[i][1]};
    if (sigma == sigma_prime) {
      acc += occ[sigma] * gs.vector[i] * gs.vector[i];
      continue;
    }
    // b+_sigma b_sigma' moves one particle sigma' -> sigma
    if (occ[sigma_prime] == 0) continue;
    std::array<int, 3> target = occ;
    target[sigma_prime] -= 1;
    target[sigma] += 1;
    const int j = gs.basis.index_of({target[1], target[2]});
    acc += gs.vector[j] *
           std::sqrt(double(occ[sigma_prime]) * (occ[sigma] + 1)) *
           gs.vector[i];
  }
  return acc;
}

}  // namespace lipkin
