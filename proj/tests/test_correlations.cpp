#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lipkin/correlations.hpp"
#include "lipkin/mean_field.hpp"
#include "lipkin/model.hpp"

#include <cmath>
#include <complex>
#include <random>

using namespace lipkin;
using std::complex;

namespace {

constexpr double ln2 = 0.6931471805599453;

// conditional entropy through explicit 4x4 projectors, literally
// sum_k p_k S(Pi_k rho Pi_k / p_k); reference route for the fast 2x2 path
double conditional_entropy_4x4(const Eigen::Matrix4cd& rho, double theta,
                               double mu) {
  const complex<double> phase(std::cos(mu), std::sin(mu));
  const Eigen::Vector2cd v0(std::cos(theta), phase * std::sin(theta));
  const Eigen::Vector2cd v1(std::sin(theta), -phase * std::cos(theta));
  double total = 0.0;
  for (const auto& v : {v0, v1}) {
    Eigen::Matrix4cd proj = Eigen::Matrix4cd::Zero();
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int bp = 0; bp < 2; ++bp)
          proj(a + 2 * b, a + 2 * bp) = v[b] * std::conj(v[bp]);
    const Eigen::Matrix4cd projected = proj * rho * proj;
    const double p = projected.trace().real();
    if (p > 1e-14) total += p * von_neumann_entropy(projected / p);
  }
  return total;
}

TwoModeState random_ssr_state(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double p[4];
  double norm = 0.0;
  for (double& x : p) norm += (x = u(rng));
  for (double& x : p) x /= norm;
  const double n_ab = p[3];
  const double n_a = p[1] + p[3];
  const double n_b = p[2] + p[3];
  const double cap = std::sqrt(p[1] * p[2]);
  const double mag = u(rng) * cap;
  const double arg = u(rng) * 2.0 * M_PI;
  return two_mode_state_from_correlators(
      n_a, n_b, n_ab, std::polar(mag, arg));
}

}  // namespace

TEST_CASE("entropy kernels vanish at the endpoints exactly") {
  CHECK(entropy_f(0.0) == 0.0);
  CHECK(entropy_f(1.0) == 0.0);
  CHECK(entropy_g(0.0) == 0.0);
  CHECK(entropy_g(1.0) == 0.0);
  CHECK(entropy_f(0.5) == doctest::Approx(2.0 * entropy_g(0.5)));
}

TEST_CASE("exact one-body density: non-interacting limit") {
  const GroundState gs =
      ground_state(build_hamiltonian({6, 1.0, 0.0, Model::two_level}));
  const OneBodyDensityBlock block = exact_one_body_density(gs);
  CHECK(block.multiplicity == 6);
  CHECK(block.matrix(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(block.matrix(1, 1) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(std::abs(block.matrix(0, 1)) <= 1e-12);
}

TEST_CASE("exact one-body density: N=2 analytic occupations") {
  // GS = cos(t)|M=-1> + sin(t)|M=+1> with tan(2t) = V/eps = 1
  const GroundState gs =
      ground_state(build_hamiltonian({2, 1.0, 1.0, Model::two_level}));
  const OneBodyDensityBlock block = exact_one_body_density(gs);
  const std::vector<double> occ = natural_occupations(block);
  CHECK(occ[0] == doctest::Approx(0.5 + 0.5 / std::sqrt(2.0)).epsilon(1e-10));
  CHECK(occ[1] == doctest::Approx(0.5 - 0.5 / std::sqrt(2.0)).epsilon(1e-10));
}

TEST_CASE("exact one-body density: three-level off-diagonals vanish") {
  const GroundState gs = ground_state(
      build_hamiltonian(params_from_chi(Model::three_level, 5, 2.0)));
  const OneBodyDensityBlock block = exact_one_body_density(gs);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) CHECK(std::abs(block.matrix(i, j)) <= 1e-12);
  CHECK(block.matrix.trace() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("natural occupations are sorted and physical") {
  OneBodyDensityBlock block;
  block.matrix = Eigen::Matrix2d();
  block.matrix << 1.0, 0.0, 0.0, 0.0;
  CHECK(natural_occupations(block) == std::vector<double>{1.0, 0.0});
  block.matrix << 0.5, 0.0, 0.0, 0.5;
  CHECK(natural_occupations(block) == std::vector<double>{0.5, 0.5});
  const HFSolution hf = hf_two_level(params_from_chi(Model::two_level, 5, 2.0));
  block.matrix = hf.density_block;
  const std::vector<double> occ = natural_occupations(block);
  CHECK(occ[0] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(occ[1] == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("entropies: filled block carries no entropy") {
  OneBodyDensityBlock block;
  block.matrix = Eigen::Matrix2d();
  block.matrix << 1.0, 0.0, 0.0, 0.0;
  const EntropyReport r = entropies(block, 7);
  CHECK(r.overall_entropy == 0.0);
  CHECK(r.one_body_entropy == 0.0);
}

TEST_CASE("entropies: half filling and the 3/4 point") {
  OneBodyDensityBlock block;
  block.matrix = Eigen::Matrix2d();
  block.matrix << 0.5, 0.0, 0.0, 0.5;
  const EntropyReport r = entropies(block, 1);
  CHECK(r.overall_entropy == doctest::Approx(2.0 * ln2).epsilon(1e-14));
  CHECK(r.one_body_entropy == doctest::Approx(ln2).epsilon(1e-14));
  CHECK(r.overall_entropy == doctest::Approx(2.0 * r.one_body_entropy));

  block.matrix << 0.75, 0.0, 0.0, 0.25;
  const EntropyReport r2 = entropies(block, 4);
  const double f34 = -0.75 * std::log(0.75) - 0.25 * std::log(0.25);
  CHECK(r2.overall_entropy == doctest::Approx(8.0 * f34).epsilon(1e-12));
  CHECK(r2.overall_entropy == doctest::Approx(4.4987).epsilon(1e-4));
  CHECK(r2.overall_entropy_per_particle ==
        doctest::Approx(2.0 * f34).epsilon(1e-12));
}

TEST_CASE("overall entropy is twice the one-body entropy for two-level GS") {
  for (double x : {0.2, 0.9, 1.5, 3.0, 8.0}) {
    const GroundState gs = ground_state(
        build_hamiltonian(params_from_chi(Model::two_level, 11, x)));
    const EntropyReport r = entropies(exact_one_body_density(gs), 11);
    CHECK(std::abs(r.overall_entropy - 2.0 * r.one_body_entropy) <= 1e-10);
  }
}

TEST_CASE("two-mode state assembly and validation") {
  const TwoModeState pure = two_mode_state_from_correlators(1.0, 0.0, 0.0, 0.0);
  CHECK(pure.rho(1, 1).real() == doctest::Approx(1.0));
  CHECK(purity(pure) == doctest::Approx(1.0));

  // the mean-field pair state at chi = 2: central block (1/2)[[3/2, -s3/2],
  // [-s3/2, 1/2]], eigenvalues {0, 1}
  const double s3 = std::sqrt(3.0);
  const TwoModeState hf =
      two_mode_state_from_correlators(0.75, 0.25, 0.0, -s3 / 4.0);
  CHECK(hf.rho(1, 1).real() == doctest::Approx(0.75));
  CHECK(hf.rho(2, 2).real() == doctest::Approx(0.25));
  CHECK(hf.rho(1, 2).real() == doctest::Approx(-s3 / 4.0));
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(hf.rho);
  CHECK(es.eigenvalues().maxCoeff() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(es.eigenvalues().minCoeff()) <= 1e-12);

  CHECK_THROWS_AS(two_mode_state_from_correlators(1.2, 0.0, 0.0, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(two_mode_state_from_correlators(0.5, 0.5, 0.4, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(two_mode_state_from_correlators(0.5, 0.5, 0.0, 0.6),
                  std::invalid_argument);
}

TEST_CASE("mutual information examples") {
  // product state
  const TwoModeState prod =
      two_mode_state_from_correlators(0.3, 0.6, 0.18, 0.0);
  CHECK(mutual_information(prod) <= 1e-12);
  // pure state with Schmidt weights {1/2, 1/2}
  const TwoModeState bell =
      two_mode_state_from_correlators(0.5, 0.5, 0.0, 0.5);
  CHECK(purity(bell) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(mutual_information(bell) == doctest::Approx(2.0 * ln2).epsilon(1e-12));
  // mean-field pair state at chi = 2
  const HFSolution hf = hf_two_level(params_from_chi(Model::two_level, 5, 2.0));
  CHECK(mutual_information(hf_pair_state_two_level(hf)) ==
        doctest::Approx(2.0 * hf_discord_h(2.0)).epsilon(1e-9));
}

TEST_CASE("purity examples") {
  TwoModeState mixed;
  mixed.rho = Eigen::Matrix4cd::Identity() * 0.25;
  CHECK(purity(mixed) == doctest::Approx(0.25));
  for (double x : {0.4, 1.3, 2.0, 7.0}) {
    const HFSolution hf = hf_two_level(params_from_chi(Model::two_level, 6, x));
    CHECK(purity(hf_pair_state_two_level(hf)) ==
          doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("discord of a product state vanishes under both measurement sets") {
  const TwoModeState prod = two_mode_state_from_correlators(0.3, 0.6, 0.18, 0.0);
  CHECK(quantum_discord(prod, MeasurementSet::unrestricted) <= 1e-9);
  CHECK(quantum_discord(prod, MeasurementSet::ssr_restricted) <= 1e-12);
}

TEST_CASE("two-level mean-field discord matches h(chi)") {
  const double h2 = hf_discord_h(2.0);
  CHECK(h2 == doctest::Approx(0.5623351446188083).epsilon(1e-14));
  const HFSolution hf = hf_two_level(params_from_chi(Model::two_level, 5, 2.0));
  const TwoModeState state = hf_pair_state_two_level(hf);
  CHECK(std::abs(quantum_discord(state, MeasurementSet::unrestricted) - h2) <=
        1e-6);
  CHECK(std::abs(quantum_discord(state, MeasurementSet::ssr_restricted) - h2) <=
        1e-9);
}

TEST_CASE("three-level mean-field discords at chi = 4 (mixed states)") {
  const HFSolution hf =
      hf_three_level(params_from_chi(Model::three_level, 8, 4.0));
  auto s = [](double x) { return entropy_g(x); };
  const double d01_ref = -s(11.0 / 12.0) + s(7.0 / 12.0) + s(1.0 / 3.0);
  const double d01 = quantum_discord(hf_pair_state_three_level(hf, 0, 1),
                                     MeasurementSet::ssr_restricted);
  CHECK(std::abs(d01 - d01_ref) <= 1e-7);
  CHECK(std::abs(d01 - hf_discord_closed_form_three_level(
                           4.0, ThreeLevelPair::p01)) <= 1e-7);
  const double d12_ref =
      -s(2.0 / 3.0 - 0.25) + s(1.0 / 3.0 - 0.25) + s(1.0 / 3.0);
  CHECK(std::abs(quantum_discord(hf_pair_state_three_level(hf, 1, 2),
                                 MeasurementSet::ssr_restricted) -
                 d12_ref) <= 1e-7);
  // for these mixed states the unrestricted optimum is strictly better for
  // the measuring side, so the resulting discord is smaller
  const double d01_unres = quantum_discord(hf_pair_state_three_level(hf, 0, 1),
                                           MeasurementSet::unrestricted);
  CHECK(d01_unres < d01 + 1e-9);
  CHECK(d01 - d01_unres > 1e-3);
}

TEST_CASE("mixed-state pair purities drop only after the second transition") {
  const HFSolution below =
      hf_three_level(params_from_chi(Model::three_level, 8, 2.0));
  CHECK(purity(hf_pair_state_three_level(below, 0, 1)) ==
        doctest::Approx(1.0).epsilon(1e-10));
  const HFSolution above =
      hf_three_level(params_from_chi(Model::three_level, 8, 4.0));
  for (auto [a, b] : {std::pair{0, 1}, {0, 2}, {1, 2}})
    CHECK(purity(hf_pair_state_three_level(above, a, b)) < 1.0 - 1e-4);
}

TEST_CASE("pure pair states: discord reduces to the reduced-mode entropy") {
  for (double x : {1.5, 2.0, 2.8}) {
    const HFSolution hf2 = hf_two_level(params_from_chi(Model::two_level, 6, x));
    const TwoModeState s2 = hf_pair_state_two_level(hf2);
    REQUIRE(std::abs(purity(s2) - 1.0) <= 1e-10);
    const double ent = von_neumann_entropy(reduced_mode_a(s2));
    CHECK(std::abs(quantum_discord(s2, MeasurementSet::unrestricted) - ent) <=
          1e-8);
    const HFSolution hf3 =
        hf_three_level(params_from_chi(Model::three_level, 6, x));
    const TwoModeState s3 = hf_pair_state_three_level(hf3, 0, 1);
    REQUIRE(std::abs(purity(s3) - 1.0) <= 1e-10);
    CHECK(std::abs(quantum_discord(s3, MeasurementSet::unrestricted) -
                   von_neumann_entropy(reduced_mode_a(s3))) <= 1e-8);
  }
}

TEST_CASE("exact ground-state pair states are classical") {
  const GroundState gs = ground_state(
      build_hamiltonian(params_from_chi(Model::two_level, 8, 2.0)));
  const TwoModeState s = exact_pair_state_two_level(gs);
  CHECK(std::abs(s.rho(1, 2)) <= 1e-12);  // no coherence by parity
  CHECK(quantum_discord(s, MeasurementSet::ssr_restricted) <= 1e-12);
  const GroundState gs3 = ground_state(
      build_hamiltonian(params_from_chi(Model::three_level, 5, 4.0)));
  for (auto [a, b] : {std::pair{0, 1}, {0, 2}, {1, 2}})
    CHECK(quantum_discord(exact_pair_state_three_level(gs3, a, b),
                          MeasurementSet::ssr_restricted) <= 1e-12);
}

TEST_CASE("0 <= discord <= mutual information on random SSR states") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 25; ++trial) {
    const TwoModeState s = random_ssr_state(rng);
    const double info = mutual_information(s);
    for (MeasurementSet set :
         {MeasurementSet::unrestricted, MeasurementSet::ssr_restricted}) {
      const double d = quantum_discord(s, set);
      CHECK(d >= 0.0);
      CHECK(d <= info + 1e-9);
    }
    // the unrestricted maximization can only beat the restricted one
    CHECK(quantum_discord(s, MeasurementSet::unrestricted) <=
          quantum_discord(s, MeasurementSet::ssr_restricted) + 1e-9);
  }
}

TEST_CASE("discord agrees with the literal projected-state route") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 10; ++trial) {
    const TwoModeState s = random_ssr_state(rng);
    const double s_a = von_neumann_entropy(reduced_mode_a(s));
    const double info = mutual_information(s);

    // occupation measurement: the restricted discord must equal the value
    // reconstructed from explicit 4x4 projections
    const double lit0 = conditional_entropy_4x4(s.rho, 0.0, 0.0);
    CHECK(std::abs(quantum_discord(s, MeasurementSet::ssr_restricted) -
                   (info - (s_a - lit0))) <= 1e-10);

    // any fixed measurement bounds the optimized discord from above
    const double d_unres = quantum_discord(s, MeasurementSet::unrestricted);
    for (double theta : {0.0, 0.3, 1.1, M_PI / 2})
      for (double mu : {0.0, 0.9, 4.0}) {
        const double lit = conditional_entropy_4x4(s.rho, theta, mu);
        CHECK(d_unres <= info - s_a + lit + 1e-9);
      }
  }
}

TEST_CASE("closed-form discords: two-level branches") {
  CHECK(hf_discord_closed_form_two_level(0.7) == 0.0);
  CHECK(hf_discord_closed_form_two_level(1.0) == 0.0);
  CHECK(hf_discord_closed_form_two_level(2.0) ==
        doctest::Approx(0.5623351446188083).epsilon(1e-14));
  CHECK(hf_discord_closed_form_two_level(1e8) ==
        doctest::Approx(ln2).epsilon(1e-7));
  CHECK_THROWS_AS(hf_discord_closed_form_two_level(-1.0), std::invalid_argument);
}

TEST_CASE("closed-form discords: three-level branches and continuity") {
  CHECK(hf_discord_closed_form_three_level(2.0, ThreeLevelPair::p02) == 0.0);
  CHECK(hf_discord_closed_form_three_level(2.0, ThreeLevelPair::p12) == 0.0);
  CHECK(hf_discord_closed_form_three_level(2.0, ThreeLevelPair::p01) ==
        doctest::Approx(hf_discord_closed_form_two_level(2.0)).epsilon(1e-14));
  for (ThreeLevelPair pair :
       {ThreeLevelPair::p01, ThreeLevelPair::p02, ThreeLevelPair::p12}) {
    const double below = hf_discord_closed_form_three_level(3.0 - 1e-9, pair);
    const double above = hf_discord_closed_form_three_level(3.0 + 1e-9, pair);
    CHECK(std::abs(below - above) < 1e-6);
  }
  auto s = [](double x) { return entropy_g(x); };
  CHECK(hf_discord_closed_form_three_level(4.0, ThreeLevelPair::p12) ==
        doctest::Approx(-s(2.0 / 3.0 - 0.25) + s(1.0 / 3.0 - 0.25) +
                        s(1.0 / 3.0))
            .epsilon(1e-14));
}

TEST_CASE("coherence sign does not affect any reported measure") {
  for (double sign : {1.0, -1.0}) {
    const TwoModeState s =
        two_mode_state_from_correlators(0.7, 0.2, 0.1, sign * 0.2);
    CHECK(mutual_information(s) ==
          doctest::Approx(mutual_information(two_mode_state_from_correlators(
              0.7, 0.2, 0.1, -sign * 0.2))));
    CHECK(quantum_discord(s, MeasurementSet::ssr_restricted) ==
          doctest::Approx(quantum_discord(
              two_mode_state_from_correlators(0.7, 0.2, 0.1, -sign * 0.2),
              MeasurementSet::ssr_restricted)));
  }
}
