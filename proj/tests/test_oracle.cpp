// The finite-difference eigensolver is exercised against the oscillator,
// whose shifted spectrum {0, 2, 4, ...} is known exactly, and against the
// closed-form deformed states it is meant to cross-check.

#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "isospec/models.hpp"
#include "isospec/oracle.hpp"
#include "isospec/susy.hpp"

namespace models = isospec::models;
namespace oracle = isospec::oracle;
namespace susy = isospec::susy;

namespace {
double ho_base(double x) { return x * x - 1.0; }

doctest::Approx rel(double v, double eps) {
  return doctest::Approx(v).epsilon(eps);
}
}  // namespace

TEST_CASE("grid geometry") {
  const oracle::Grid grid{10.0, 3999};
  CHECK(grid.step() == rel(0.005, 1e-15));
  CHECK(grid.point(0) == rel(-10.0 + 0.005, 1e-14));
  CHECK(grid.point(3998) == rel(10.0 - 0.005, 1e-12));
}

TEST_CASE("discretize validates its inputs") {
  CHECK_THROWS_AS(oracle::discretize(ho_base, {10.0, 1}), oracle::GridMismatch);
  CHECK_THROWS_AS(oracle::discretize(ho_base, {-1.0, 100}),
                  oracle::GridMismatch);
  const auto spiked = [](double x) {
    return x == 0.0 ? std::numeric_limits<double>::infinity() : x * x;
  };
  // L = 5, N = 9 puts a sample exactly at x = 0
  CHECK_THROWS_AS(oracle::discretize(spiked, {5.0, 9}),
                  oracle::NonFinitePotential);
  const auto op = oracle::discretize(ho_base, {5.0, 9});
  CHECK(op.diag.size() == 9);
  CHECK(op.diag[3] == rel(2.0 + ho_base(-1.0), 1e-13));
  REQUIRE(op.off.size() == 8);
  CHECK(op.off[0] == rel(-1.0, 1e-15));
}

TEST_CASE("sturm counts bracket the oscillator spectrum") {
  const auto op = oracle::discretize(ho_base, {8.0, 1200});
  CHECK(oracle::sturm_count(op, -0.5) == 0);
  CHECK(oracle::sturm_count(op, 1.0) == 1);
  CHECK(oracle::sturm_count(op, 5.0) == 3);
  CHECK(oracle::sturm_count(op, 9.0) == 5);
  // exactly one eigenvalue inside (1, 3)
  CHECK(oracle::sturm_count(op, 3.0) - oracle::sturm_count(op, 1.0) == 1);
}

TEST_CASE("lowest eigenpairs of the oscillator") {
  const auto op = oracle::discretize(ho_base, {8.0, 1200});
  const oracle::Spectrum sp = oracle::eigen_lowest(op, 3);
  REQUIRE(sp.energies.size() == 3);
  CHECK(std::abs(sp.energies[0] - 0.0) < 5e-3);
  CHECK(std::abs(sp.energies[1] - 2.0) < 5e-3);
  CHECK(std::abs(sp.energies[2] - 4.0) < 5e-3);
  CHECK(sp.node_counts == std::vector<int>{0, 1, 2});
  const double h = op.grid.step();
  for (const auto& vec : sp.eigenvectors) {
    double s = 0.0;
    for (double v : vec) s += v * v;
    CHECK(h * s == rel(1.0, 1e-12));
  }
  CHECK(oracle::overlap(sp.eigenvectors[0], sp.eigenvectors[1], op.grid) ==
        doctest::Approx(0.0).scale(1.0).epsilon(1e-6));
  CHECK_THROWS_AS(oracle::eigen_lowest(op, 0), oracle::GridMismatch);
}

TEST_CASE("richardson extrapolation") {
  CHECK(oracle::richardson(4.001, 4.00025) == rel((4.0 * 4.00025 - 4.001) / 3.0, 1e-15));
  const auto coarse_op = oracle::discretize(ho_base, {8.0, 600});
  const auto fine_op = oracle::discretize(ho_base, {8.0, 1201});
  const auto coarse = oracle::eigen_lowest(coarse_op, 3);
  const auto fine = oracle::eigen_lowest(fine_op, 3);
  const auto extrapolated = oracle::richardson(coarse, fine);
  for (int k = 0; k < 3; ++k) {
    CHECK(std::abs(extrapolated[k] - 2.0 * k) < 1e-5);
  }
  const auto wrong = oracle::eigen_lowest(oracle::discretize(ho_base, {8.0, 1200}), 3);
  CHECK_THROWS_AS(oracle::richardson(coarse, wrong), oracle::GridMismatch);
}

TEST_CASE("node counting ignores noise near the floor") {
  CHECK(oracle::node_count({1.0, 2.0, -1.0}) == 1);
  CHECK(oracle::node_count({1.0, 1e-12, -1.0}) == 1);
  CHECK(oracle::node_count({0.5, 1.0, 0.5}) == 0);
  const oracle::Grid grid{8.0, 801};
  const models::Model ho = models::Model::harmonic_oscillator();
  std::vector<double> psi3(801);
  for (int i = 0; i < 801; ++i) psi3[i] = ho.psi_jet(3, grid.point(i)).v;
  CHECK(oracle::node_count(psi3) == 3);
}

TEST_CASE("eigenvalue error decays at second order in the step") {
  const susy::PartnerFamily fam(models::Model::harmonic_oscillator(), 0, 1.0);
  const auto pot = [&](double x) { return fam.partner_potential(x); };
  // L = 10 with N = 999, 1999, 3999: steps exactly 0.02, 0.01, 0.005
  std::vector<double> errors, steps;
  for (int n : {999, 1999, 3999}) {
    const oracle::Grid grid{10.0, n};
    const auto sp = oracle::eigen_lowest(oracle::discretize(pot, grid), 1);
    errors.push_back(std::abs(sp.energies[0] - 0.0));
    steps.push_back(grid.step());
  }
  for (int i = 0; i < 2; ++i) {
    const double slope = std::log(errors[i] / errors[i + 1]) /
                         std::log(steps[i] / steps[i + 1]);
    CHECK(std::abs(slope - 2.0) <= 0.1);
  }
}

TEST_CASE("oracle eigenvectors match the closed-form deformed states") {
  const susy::PartnerFamily fam(models::Model::harmonic_oscillator(), 0, 1.0);
  const auto pot = [&](double x) { return fam.partner_potential(x); };
  const oracle::Grid grid{10.0, 4000};
  const auto sp = oracle::eigen_lowest(oracle::discretize(pot, grid), 2);
  const double seed_norm =
      std::sqrt(models::Model::harmonic_oscillator().norm_squared(1));
  std::vector<double> lvl0(4000), lvl1(4000);
  for (int i = 0; i < 4000; ++i) {
    const double x = grid.point(i);
    lvl0[i] = fam.missing_state(x);
    lvl1[i] = fam.mapped_state(1, x) / seed_norm;
  }
  CHECK(std::abs(oracle::overlap(sp.eigenvectors[0], lvl0, grid)) >=
        1.0 - 1e-5);
  CHECK(std::abs(oracle::overlap(sp.eigenvectors[1], lvl1, grid)) >=
        1.0 - 1e-5);
  std::vector<double> short_vec(10, 0.0);
  CHECK_THROWS_AS(oracle::overlap(sp.eigenvectors[0], short_vec, grid),
                  oracle::GridMismatch);
}
