#include "isospec/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace isospec::specfun {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kTwoOverSqrtPi = 1.1283791670955125739;

// Rescaled Maclaurin series, valid on |x| <= 3.  Every term is positive, so
// there is no cancellation; the alternating form loses ~5e-14 near x = 3.
double erf_series(double x) {
  const double x2 = x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < 300; ++k) {
    term *= 2.0 * x2 / (2.0 * k + 3.0);
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return kTwoOverSqrtPi * x * std::exp(-x2) * sum;
}

// Continued fraction for erfc on x > 3, evaluated bottom-up at fixed depth:
// erfc(x) = exp(-x^2)/sqrt(pi) * 1/(x+ (1/2)/(x+ (2/2)/(x+ (3/2)/(x+ ...
// The 64th convergent is accurate to far below double precision there.
double erfc_cf(double x) {
  double tail = 0.0;
  for (int n = 64; n >= 2; --n) {
    tail = (0.5 * (n - 1)) / (x + tail);
  }
  return std::exp(-x * x) / kSqrtPi / (x + tail);
}

}  // namespace

double erf(double x) {
  if (std::abs(x) <= 3.0) return erf_series(x);
  const double tail = erfc_cf(std::abs(x));
  return x > 0.0 ? 1.0 - tail : tail - 1.0;
}

double erfc(double x) {
  if (x > 3.0) return erfc_cf(x);
  if (x < -3.0) return 2.0 - erfc_cf(-x);
  return 1.0 - erf_series(x);
}

Jet2 erf(const Jet2& u) {
  const double g = kTwoOverSqrtPi * std::exp(-u.v * u.v);  // d/du erf(u)
  return compose({erf(u.v), g, -2.0 * u.v * g}, u);
}

Jet2 hermite_jet(int n, double x) {
  if (n < 0) throw std::invalid_argument("hermite_jet: negative degree");
  if (n == 0) return {1.0, 0.0, 0.0};
  if (n == 1) return {2.0 * x, 2.0, 0.0};
  double hm2 = 1.0;        // H_{k-1}
  double hm1 = 2.0 * x;    // H_k
  double h = 0.0;
  for (int k = 1; k < n; ++k) {
    h = 2.0 * x * hm1 - 2.0 * k * hm2;
    if (k + 1 < n) {
      hm2 = hm1;
      hm1 = h;
    }
  }
  return {h, 2.0 * n * hm1, 4.0 * n * (n - 1.0) * hm2};
}

HermitePoly hermite_poly(int n) {
  if (n < 0 || n > 20) {
    throw std::invalid_argument("hermite_poly: degree must be in [0, 20]");
  }
  std::vector<double> prev = {1.0};
  if (n == 0) return {0, prev};
  std::vector<double> cur = {0.0, 2.0};
  for (int k = 1; k < n; ++k) {
    std::vector<double> next(k + 2, 0.0);
    for (int i = 0; i <= k; ++i) next[i + 1] += 2.0 * cur[i];
    for (int i = 0; i + 1 <= k; ++i) next[i] -= 2.0 * k * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {n, cur};
}

double poly_eval(const std::vector<double>& coeffs, double x) {
  double p = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) p = p * x + *it;
  return p;
}

Jet2 poly_jet(const std::vector<double>& coeffs, double x) {
  double p = 0.0, dp = 0.0, ddp = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    ddp = ddp * x + 2.0 * dp;
    dp = dp * x + p;
    p = p * x + *it;
  }
  return {p, dp, ddp};
}

std::vector<double> poly_derivative(const std::vector<double>& coeffs) {
  if (coeffs.size() <= 1) return {0.0};
  std::vector<double> d(coeffs.size() - 1);
  for (std::size_t i = 1; i < coeffs.size(); ++i) d[i - 1] = i * coeffs[i];
  return d;
}

double poly_abs_eval(const std::vector<double>& coeffs, double x) {
  double p = 0.0;
  const double ax = std::abs(x);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    p = p * ax + std::abs(*it);
  }
  return p;
}

double kummer_half(int m, double x) {
  if (m < 0) throw std::invalid_argument("kummer_half: m must be >= 0");
  const double x2 = x * x;
  if (m == 0) {
    if (std::abs(x) < 1e-8) return 1.0 - x2 / 3.0;
    return kSqrtPi * erf(x) / (2.0 * x);
  }
  // Kummer transformation: 1F1(m+1/2;3/2;-x^2) = exp(-x^2) 1F1(1-m;3/2;x^2),
  // and the right-hand series terminates after m terms.
  double term = 1.0;
  double sum = 1.0;
  for (int j = 0; j + 1 < m; ++j) {
    term *= (1.0 - m + j) * x2 / ((1.5 + j) * (j + 1.0));
    sum += term;
  }
  return std::exp(-x2) * sum;
}

namespace {

struct GaussRule {
  std::array<double, 15> node;
  std::array<double, 15> weight;
};

// Nodes are the roots of the degree-15 Legendre polynomial, found by Newton
// from the Chebyshev initial guess; weights are 2 / ((1-x^2) P'^2).
GaussRule make_gauss15() {
  GaussRule r{};
  constexpr int n = 15;
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-15) break;
    }
    r.node[i] = x;
    r.weight[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return r;
}

double gauss15(const std::function<double(double)>& f, double a, double b) {
  static const GaussRule rule = make_gauss15();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < 15; ++i) {
    sum += rule.weight[i] * f(mid + half * rule.node[i]);
  }
  return sum * half;
}

double adapt(const std::function<double(double)>& f, double a, double b,
             double tol, double whole, int depth) {
  const double mid = 0.5 * (a + b);
  const double left = gauss15(f, a, mid);
  const double right = gauss15(f, mid, b);
  const double diff = std::abs(left + right - whole);
  if (diff <= tol || diff <= 5e-16 * (std::abs(left) + std::abs(right))) {
    return left + right;
  }
  if (depth >= 60) {
    throw NonConvergence("integrate: bisection depth exhausted on [" +
                         std::to_string(a) + ", " + std::to_string(b) + "]");
  }
  return adapt(f, a, mid, 0.5 * tol, left, depth + 1) +
         adapt(f, mid, b, 0.5 * tol, right, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("integrate: tol must be > 0");
  if (!std::isfinite(a)) {
    throw std::invalid_argument("integrate: lower endpoint must be finite");
  }
  if (std::isinf(b) && b > 0.0) {
    // Truncate where the integrand has decayed for good; the probes half a
    // unit apart guard against sampling an isolated zero.
    const double cut = tol / 10.0;
    for (double upper = std::max(a, 0.0) + 8.0; upper <= 45.0; upper += 1.0) {
      if (std::abs(f(upper)) < cut && std::abs(f(upper + 0.5)) < cut &&
          std::abs(f(upper + 1.0)) < cut) {
        return integrate(f, a, upper + 1.0, tol);
      }
    }
    throw NonConvergence("integrate: integrand does not decay on the tail");
  }
  if (!std::isfinite(b)) {
    throw std::invalid_argument("integrate: upper endpoint must be finite or +inf");
  }
  if (b < a) return -integrate(f, b, a, tol);
  if (a == b) return 0.0;
  return adapt(f, a, b, tol, gauss15(f, a, b), 0);
}

}  // namespace isospec::specfun
