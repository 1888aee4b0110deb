// Second-order jets: (value, first derivative, second derivative) triples
// propagated through arithmetic.  Lets differential operators act on
// closed-form expressions pointwise, with no symbolic algebra.

#pragma once

#include <cmath>
#include <stdexcept>

namespace isospec {

struct JetDivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

struct Jet2 {
  double v = 0.0;   // f(x)
  double d1 = 0.0;  // f'(x)
  double d2 = 0.0;  // f''(x)

  static constexpr Jet2 constant(double c) { return {c, 0.0, 0.0}; }
  static constexpr Jet2 variable(double x) { return {x, 1.0, 0.0}; }
};

constexpr Jet2 operator+(const Jet2& a, const Jet2& b) {
  return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2};
}

constexpr Jet2 operator-(const Jet2& a, const Jet2& b) {
  return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2};
}

constexpr Jet2 operator-(const Jet2& a) { return {-a.v, -a.d1, -a.d2}; }

constexpr Jet2 operator*(const Jet2& a, const Jet2& b) {
  return {a.v * b.v,
          a.d1 * b.v + a.v * b.d1,
          a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2};
}

// Division detects a vanishing denominator value; derivatives of the
// quotient are recovered from the product rule applied to q*b = a.
inline Jet2 operator/(const Jet2& a, const Jet2& b) {
  if (std::abs(b.v) < 1e-300) {
    throw JetDivisionByZero("jet division by (near-)zero value");
  }
  const double qv = a.v / b.v;
  const double qd1 = (a.d1 - qv * b.d1) / b.v;
  const double qd2 = (a.d2 - 2.0 * qd1 * b.d1 - qv * b.d2) / b.v;
  return {qv, qd1, qd2};
}

constexpr Jet2 operator+(double c, const Jet2& a) { return {c + a.v, a.d1, a.d2}; }
constexpr Jet2 operator+(const Jet2& a, double c) { return {a.v + c, a.d1, a.d2}; }
constexpr Jet2 operator-(double c, const Jet2& a) { return {c - a.v, -a.d1, -a.d2}; }
constexpr Jet2 operator-(const Jet2& a, double c) { return {a.v - c, a.d1, a.d2}; }
constexpr Jet2 operator*(double c, const Jet2& a) { return {c * a.v, c * a.d1, c * a.d2}; }
constexpr Jet2 operator*(const Jet2& a, double c) { return c * a; }
inline Jet2 operator/(const Jet2& a, double c) { return a / Jet2::constant(c); }
inline Jet2 operator/(double c, const Jet2& a) { return Jet2::constant(c) / a; }

inline Jet2 exp(const Jet2& a) {
  const double e = std::exp(a.v);
  return {e, e * a.d1, e * (a.d2 + a.d1 * a.d1)};
}

// Chain rule for f(g(x)): `outer` is the jet of f at g(x) (derivatives with
// respect to f's own argument), `inner` the jet of g at x.
constexpr Jet2 compose(const Jet2& outer, const Jet2& inner) {
  return {outer.v,
          outer.d1 * inner.d1,
          outer.d2 * inner.d1 * inner.d1 + outer.d1 * inner.d2};
}

}  // namespace isospec
