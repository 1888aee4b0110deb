// The two exactly solvable reference problems, in units where the harmonic
// well is x^2 and neighboring levels are 2 apart:
//
//   * oscillator:  psi_k = H_k(x) exp(-x^2/2),            E_k = 2k, k >= 0
//   * rational well (x^2 plus an 8(2x^2-1)/(2x^2+1)^2 core): psi_k =
//     P_k(x) exp(-x^2/2) / (2x^2+1),  E_k = 2k,  k in {0, 3, 4, 5, ...},
//     P_k = H_k + 4k H_{k-2} + 4k(k-3) H_{k-4}
//
// States are kept unnormalized in these seed forms; norms are exposed
// separately because the deformation machinery needs the half-line integral
// of psi_n^2 and its running value from 0 to x.

#pragma once

#include <stdexcept>
#include <vector>

#include "isospec/jet.hpp"
#include "isospec/specfun.hpp"

namespace isospec::models {

struct InvalidIndex : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct PolynomialZero : std::domain_error {
  using std::domain_error::domain_error;
};

enum class ModelKind { HarmonicOscillator, Cprs };

// Polynomial part of the rational-well state psi_k; defined for k = 0 and
// k >= 3 (levels 1 and 2 are absent from that spectrum).
struct CprsPoly {
  int k = 0;
  std::vector<double> coeffs;
};
CprsPoly cprs_poly(int k);

class Model {
 public:
  explicit Model(ModelKind kind) : kind_(kind) {}
  static Model harmonic_oscillator() { return Model(ModelKind::HarmonicOscillator); }
  static Model cprs() { return Model(ModelKind::Cprs); }

  ModelKind kind() const { return kind_; }
  bool valid_index(int k) const;
  // Position of level k in the spectrum = node count of psi_k.
  int ordinal(int k) const;
  double energy(int k) const;

  // Seed state psi_k with first and second derivative.
  Jet2 psi_jet(int k, double x) const;
  // Magnitude envelope of psi_k at x; |psi_k(x)| below 1e-12 of this is a node.
  double psi_scale(int k, double x) const;

  // Potential shifted so that psi_n sits at zero energy: V(x) - E_n.
  double base_potential(int n, double x) const;
  Jet2 base_potential_jet(int n, double x) const;

  // Running integral of psi_n^2 from 0 to x (odd in x), closed form except
  // for the rational-well ground state, which falls back to quadrature.
  double tail_integral(int n, double x) const;
  // Limit of the above as x -> +infinity.
  double half_line_norm(int n) const;
  // Full-line norm of psi_k^2.
  double norm_squared(int k) const;

 private:
  ModelKind kind_;
};

// Left-hand side of the second-order identity satisfied by P_n,
//   2x(2x^2+5)/(2x^2+1) * P_n'/P_n - P_n''/P_n,
// which equals 2n identically.  Throws PolynomialZero at roots of P_n.
double cprs_ode_identity(int n, double x);

}  // namespace isospec::models
