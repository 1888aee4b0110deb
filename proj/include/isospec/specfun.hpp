// Special functions and quadrature underlying the closed-form states:
// error function, physicists' Hermite polynomials (as jets and as exact
// coefficient arrays), the confluent hypergeometric value 1F1(m+1/2;3/2;-x^2),
// and an adaptive Gauss-Legendre integrator that accepts an infinite upper
// endpoint.

#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "isospec/jet.hpp"

namespace isospec::specfun {

struct NonConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// erf/erfc to near machine accuracy.  A positive-term rescaled Maclaurin
// series covers |x| <= 3; beyond that erfc comes from a continued fraction
// and erf(x) = 1 - erfc(x).
double erf(double x);
double erfc(double x);
Jet2 erf(const Jet2& u);

// Jet of the physicists' Hermite polynomial H_n at x, from the three-term
// recurrence plus H_n' = 2 n H_{n-1} and H_n'' = 4 n (n-1) H_{n-2}.
Jet2 hermite_jet(int n, double x);

// Coefficients of H_n, ascending powers, exact in double for n <= 20.
struct HermitePoly {
  int n = 0;
  std::vector<double> coeffs;  // size n+1
};
HermitePoly hermite_poly(int n);

// Dense polynomial helpers on ascending coefficient arrays.
double poly_eval(const std::vector<double>& coeffs, double x);
Jet2 poly_jet(const std::vector<double>& coeffs, double x);
std::vector<double> poly_derivative(const std::vector<double>& coeffs);
// Sum of |c_i| |x|^i: magnitude envelope used for noise floors near roots.
double poly_abs_eval(const std::vector<double>& coeffs, double x);

// 1F1(m + 1/2; 3/2; -x^2) for integer m >= 0.  m = 0 reduces to
// sqrt(pi) erf(x) / (2 x); m >= 1 reduces, via the Kummer transformation,
// to exp(-x^2) times a terminating polynomial of degree 2(m-1).
double kummer_half(int m, double x);

// Adaptive 15-point Gauss-Legendre quadrature of f over [a, b] to absolute
// tolerance tol.  b may be +infinity, in which case the tail is truncated
// where |f| has decayed below tol / 10.  Throws NonConvergence if bisection
// depth is exhausted or no decay point is found.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-12);

}  // namespace isospec::specfun
