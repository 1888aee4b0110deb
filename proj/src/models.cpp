#include "isospec/models.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace isospec::models {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

void require_valid(const Model& model, int k, const char* who) {
  if (!model.valid_index(k)) {
    throw InvalidIndex(std::string(who) + ": index " + std::to_string(k) +
                       " is not in the spectrum of this model");
  }
}

// Gaussian factor exp(-x^2/2) as a jet in x.
Jet2 gaussian_jet(double x) {
  return exp(Jet2{-0.5 * x * x, -x, -1.0});
}

// Closed form of int_0^x exp(-s^2) H_n(s)^2 ds as a finite combination of
// 1F1(m+1/2;3/2;-x^2): the coefficient of the m-th term follows from the
// linearization of H_n^2 into even Hermite polynomials.
double hermite_tail(int n, double x) {
  double term = std::ldexp(factorial(n), n);  // 2^n n!
  double sum = 0.0;
  for (int m = 0; m <= n; ++m) {
    if (m > 0) {
      term *= -(2.0 * m) * (2.0 * m - 1.0) * (n - m + 1.0) / (2.0 * m * m * m);
    }
    sum += term * specfun::kummer_half(m, x);
  }
  return x * sum;
}

}  // namespace

CprsPoly cprs_poly(int k) {
  if (k != 0 && k < 3) {
    throw InvalidIndex("cprs_poly: index must be 0 or >= 3");
  }
  using specfun::hermite_poly;
  std::vector<double> c = hermite_poly(k).coeffs;  // enforces k <= 20
  if (k >= 2) {
    const auto lower = hermite_poly(k - 2).coeffs;
    for (std::size_t i = 0; i < lower.size(); ++i) c[i] += 4.0 * k * lower[i];
  }
  if (k >= 4) {
    const auto lower = hermite_poly(k - 4).coeffs;
    for (std::size_t i = 0; i < lower.size(); ++i) {
      c[i] += 4.0 * k * (k - 3.0) * lower[i];
    }
  }
  return {k, std::move(c)};
}

bool Model::valid_index(int k) const {
  if (k < 0) return false;
  if (kind_ == ModelKind::Cprs) return k == 0 || k >= 3;
  return true;
}

int Model::ordinal(int k) const {
  require_valid(*this, k, "ordinal");
  if (kind_ == ModelKind::Cprs && k >= 3) return k - 2;
  return k;
}

double Model::energy(int k) const {
  require_valid(*this, k, "energy");
  return 2.0 * k;
}

Jet2 Model::psi_jet(int k, double x) const {
  require_valid(*this, k, "psi_jet");
  const Jet2 e = gaussian_jet(x);
  if (kind_ == ModelKind::HarmonicOscillator) {
    return specfun::hermite_jet(k, x) * e;
  }
  Jet2 p = specfun::hermite_jet(k, x);
  if (k >= 2) p = p + 4.0 * k * specfun::hermite_jet(k - 2, x);
  if (k >= 4) p = p + 4.0 * k * (k - 3.0) * specfun::hermite_jet(k - 4, x);
  const Jet2 u{2.0 * x * x + 1.0, 4.0 * x, 4.0};
  return p * e / u;
}

double Model::psi_scale(int k, double x) const {
  require_valid(*this, k, "psi_scale");
  const double g = std::exp(-0.5 * x * x);
  if (kind_ == ModelKind::HarmonicOscillator) {
    return specfun::poly_abs_eval(specfun::hermite_poly(k).coeffs, x) * g;
  }
  return specfun::poly_abs_eval(cprs_poly(k).coeffs, x) * g /
         (2.0 * x * x + 1.0);
}

double Model::base_potential(int n, double x) const {
  require_valid(*this, n, "base_potential");
  if (kind_ == ModelKind::HarmonicOscillator) {
    return x * x - 1.0 - 2.0 * n;
  }
  const double u = 2.0 * x * x + 1.0;
  return x * x + 8.0 * (2.0 * x * x - 1.0) / (u * u) + 3.0 - 2.0 * n;
}

Jet2 Model::base_potential_jet(int n, double x) const {
  require_valid(*this, n, "base_potential_jet");
  if (kind_ == ModelKind::HarmonicOscillator) {
    return {x * x - 1.0 - 2.0 * n, 2.0 * x, 2.0};
  }
  const Jet2 x2{x * x, 2.0 * x, 2.0};
  const Jet2 u = 2.0 * x2 + 1.0;
  return x2 + 8.0 * (2.0 * x2 - 1.0) / (u * u) + (3.0 - 2.0 * n);
}

double Model::tail_integral(int n, double x) const {
  require_valid(*this, n, "tail_integral");
  if (kind_ == ModelKind::HarmonicOscillator) {
    return hermite_tail(n, x);
  }
  if (n == 0) {
    if (x == 0.0) return 0.0;
    const auto density = [](double s) {
      const double u = 2.0 * s * s + 1.0;
      return std::exp(-s * s) / (u * u);
    };
    const double mag = specfun::integrate(density, 0.0, std::abs(x), 1e-13);
    return x > 0.0 ? mag : -mag;
  }
  const double p = specfun::poly_eval(cprs_poly(n).coeffs, x);
  const double h = specfun::hermite_jet(n - 3, x).v;
  const double u = 2.0 * x * x + 1.0;
  return -2.0 * p * h * std::exp(-x * x) / u + 8.0 * n * hermite_tail(n - 3, x);
}

double Model::half_line_norm(int n) const {
  require_valid(*this, n, "half_line_norm");
  if (kind_ == ModelKind::HarmonicOscillator) {
    return 0.5 * std::ldexp(factorial(n), n) * kSqrtPi;
  }
  if (n == 0) {
    const auto density = [](double s) {
      const double u = 2.0 * s * s + 1.0;
      return std::exp(-s * s) / (u * u);
    };
    return specfun::integrate(density, 0.0,
                              std::numeric_limits<double>::infinity(), 1e-13);
  }
  return factorial(n - 3) * std::ldexp(static_cast<double>(n), n - 1) * kSqrtPi;
}

double Model::norm_squared(int k) const { return 2.0 * half_line_norm(k); }

double cprs_ode_identity(int n, double x) {
  const auto poly = cprs_poly(n);
  const Jet2 p = specfun::poly_jet(poly.coeffs, x);
  const double floor = 1e-12 * specfun::poly_abs_eval(poly.coeffs, x) + 1e-300;
  if (std::abs(p.v) <= floor) {
    throw PolynomialZero("cprs_ode_identity: evaluation at a root of P_n");
  }
  const double u = 2.0 * x * x + 1.0;
  return 2.0 * x * (2.0 * x * x + 5.0) / u * p.d1 / p.v - p.d2 / p.v;
}

}  // namespace isospec::models
