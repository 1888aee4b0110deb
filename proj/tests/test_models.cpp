// Frozen values come from arbitrary-precision evaluation of the explicit
// seed-state definitions (polynomial times gaussian envelope).

#include <doctest.h>

#include <cmath>
#include <vector>

#include "isospec/models.hpp"

using isospec::Jet2;
namespace models = isospec::models;

namespace {
constexpr double kSqrtPi = 1.7724538509055160273;
doctest::Approx rel(double v, double eps) {
  return doctest::Approx(v).epsilon(eps);
}

// residual of -psi'' + V psi = E psi, scaled by the size of its terms
double eigen_residual(const models::Model& m, int n, int k, double x) {
  const Jet2 psi = m.psi_jet(k, x);
  const double v = m.base_potential(n, x);
  const double e = m.energy(k) - m.energy(n);
  const double r = -psi.d2 + v * psi.v - e * psi.v;
  const double scale =
      std::abs(psi.d2) + std::abs(v * psi.v) + std::abs(e * psi.v) + 1e-300;
  return std::abs(r) / scale;
}
}  // namespace

TEST_CASE("index sets and ordinals") {
  const models::Model ho = models::Model::harmonic_oscillator();
  const models::Model cprs = models::Model::cprs();
  CHECK(ho.valid_index(0));
  CHECK(ho.valid_index(7));
  CHECK_FALSE(ho.valid_index(-1));
  CHECK(cprs.valid_index(0));
  CHECK_FALSE(cprs.valid_index(1));
  CHECK_FALSE(cprs.valid_index(2));
  CHECK(cprs.valid_index(3));
  CHECK_FALSE(cprs.valid_index(-2));
  CHECK(ho.ordinal(4) == 4);
  CHECK(cprs.ordinal(0) == 0);
  CHECK(cprs.ordinal(3) == 1);
  CHECK(cprs.ordinal(4) == 2);
  CHECK(cprs.ordinal(5) == 3);
  CHECK(ho.energy(3) == 6.0);
  CHECK(cprs.energy(4) == 8.0);
}

TEST_CASE("rational-well polynomials are exact") {
  CHECK(models::cprs_poly(0).coeffs == std::vector<double>{1.0});
  CHECK(models::cprs_poly(3).coeffs == std::vector<double>{0.0, 12.0, 0.0, 8.0});
  CHECK(models::cprs_poly(4).coeffs ==
        std::vector<double>{-4.0, 0.0, 16.0, 0.0, 16.0});
  CHECK(models::cprs_poly(5).coeffs ==
        std::vector<double>{0.0, -40.0, 0.0, 0.0, 0.0, 32.0});
  CHECK_THROWS_AS(models::cprs_poly(1), models::InvalidIndex);
  CHECK_THROWS_AS(models::cprs_poly(2), models::InvalidIndex);
  CHECK_THROWS_AS(models::cprs_poly(-1), models::InvalidIndex);
}

TEST_CASE("seed states at frozen points") {
  const models::Model ho = models::Model::harmonic_oscillator();
  const models::Model cprs = models::Model::cprs();
  const double x = 1.1;
  CHECK(ho.psi_jet(2, x).v ==
        rel((4.0 * x * x - 2.0) * std::exp(-0.5 * x * x), 1e-14));
  CHECK(cprs.psi_jet(3, 1.0).v == rel(4.0435377314175561574, 1e-13));
  CHECK(cprs.psi_jet(4, 1.1).v == rel(6.1929310765722553879, 1e-13));
  CHECK_THROWS_AS(cprs.psi_jet(2, 0.5), models::InvalidIndex);
}

TEST_CASE("seed jets satisfy their eigenvalue equation") {
  const models::Model ho = models::Model::harmonic_oscillator();
  const models::Model cprs = models::Model::cprs();
  for (double x : {-2.3, -0.7, 0.41, 1.9}) {
    for (int k : {0, 1, 4}) CHECK(eigen_residual(ho, 0, k, x) < 1e-12);
    for (int k : {1, 3}) CHECK(eigen_residual(ho, 2, k, x) < 1e-12);
    for (int k : {0, 3, 4, 5}) CHECK(eigen_residual(cprs, 3, k, x) < 1e-12);
    for (int k : {0, 3}) CHECK(eigen_residual(cprs, 0, k, x) < 1e-12);
  }
}

TEST_CASE("magnitude envelope bounds the state") {
  const models::Model cprs = models::Model::cprs();
  for (double x : {-1.5, 0.0, 0.3, 2.2}) {
    CHECK(std::abs(cprs.psi_jet(4, x).v) <=
          cprs.psi_scale(4, x) * (1.0 + 1e-12));
    CHECK(cprs.psi_scale(4, x) > 0.0);
  }
}

TEST_CASE("base potential and its jet") {
  const models::Model ho = models::Model::harmonic_oscillator();
  const models::Model cprs = models::Model::cprs();
  CHECK(ho.base_potential(0, 2.0) == rel(3.0, 1e-15));
  CHECK(ho.base_potential(1, 2.0) == rel(1.0, 1e-15));
  const Jet2 vj = ho.base_potential_jet(0, -1.3);
  CHECK(vj.d1 == rel(-2.6, 1e-14));
  CHECK(vj.d2 == rel(2.0, 1e-14));

  const double x = 0.8;
  const double u = 2.0 * x * x + 1.0;
  const double core = 8.0 * (2.0 * x * x - 1.0) / (u * u);
  CHECK(cprs.base_potential(3, x) == rel(x * x + core + 3.0 - 6.0, 1e-13));
  const Jet2 cj = cprs.base_potential_jet(3, x);
  const double core1 = 32.0 * x * (3.0 - 2.0 * x * x) / (u * u * u);
  CHECK(cj.d1 == rel(2.0 * x + core1, 1e-12));
}

TEST_CASE("running seed-density integrals at frozen points") {
  const models::Model ho = models::Model::harmonic_oscillator();
  const models::Model cprs = models::Model::cprs();
  CHECK(ho.tail_integral(2, 1.5) == rel(3.3713327384576853755, 1e-12));
  CHECK(ho.tail_integral(3, 0.7) == rel(8.3159070964010244993, 1e-12));
  CHECK(ho.tail_integral(6, 2.0) == rel(16548.20461275816519, 1e-12));
  CHECK(cprs.tail_integral(3, 1.0) == rel(13.018719971879017655, 1e-12));
  CHECK(cprs.tail_integral(4, 1.2) == rel(18.130294386998340712, 1e-12));
  CHECK(cprs.tail_integral(0, 0.9) == rel(0.42952767725288579189, 1e-10));
  // odd in x
  CHECK(ho.tail_integral(2, -1.5) == -ho.tail_integral(2, 1.5));
  CHECK(cprs.tail_integral(0, -0.9) == -cprs.tail_integral(0, 0.9));
  CHECK(ho.tail_integral(4, 0.0) == 0.0);
}

TEST_CASE("half-line norms") {
  const models::Model ho = models::Model::harmonic_oscillator();
  const models::Model cprs = models::Model::cprs();
  CHECK(ho.half_line_norm(0) == rel(0.5 * kSqrtPi, 1e-15));
  CHECK(ho.half_line_norm(1) == rel(kSqrtPi, 1e-15));
  CHECK(ho.half_line_norm(4) == rel(192.0 * kSqrtPi, 1e-15));
  CHECK(cprs.half_line_norm(3) == rel(12.0 * kSqrtPi, 1e-15));
  CHECK(cprs.half_line_norm(4) == rel(32.0 * kSqrtPi, 1e-15));
  CHECK(cprs.half_line_norm(5) == rel(160.0 * kSqrtPi, 1e-15));
  CHECK(cprs.half_line_norm(0) == rel(0.44311346272637900682, 1e-10));
  CHECK(ho.norm_squared(1) == rel(2.0 * kSqrtPi, 1e-15));
  // the running integral saturates at the half-line norm
  CHECK(ho.tail_integral(2, 40.0) == rel(ho.half_line_norm(2), 1e-13));
  CHECK(cprs.tail_integral(3, 40.0) == rel(cprs.half_line_norm(3), 1e-13));
}

TEST_CASE("second-order identity of the rational-well polynomials") {
  CHECK(models::cprs_ode_identity(5, 0.37) == rel(10.0, 1e-10));
  CHECK(models::cprs_ode_identity(8, -1.21) == rel(16.0, 1e-10));
  CHECK_THROWS_AS(models::cprs_ode_identity(3, 0.0), models::PolynomialZero);
  CHECK_THROWS_AS(models::cprs_ode_identity(5, 0.0), models::PolynomialZero);
}
