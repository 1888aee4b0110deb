// One-parameter isospectral deformations built on a chosen level n of a
// solvable model.  With psi = psi_n, W = -psi'/psi and
//
//   D(x) = C + int_0^x psi^2,      f(x) = psi^2 / D,
//
// the operators A = d/dx + W and B = d/dx + f + W factor the same
// intermediate Hamiltonian (A A^+ = B B^+), and
//
//   V~(x) = V(x) - 2 f'(x)
//
// carries the full spectrum of V shifted by -E_n.  Level n of V~ is
// N(C) psi / D; every other level k is B^+ A psi_k / (E_k - E_n).  The
// family is free of singularities when |C| exceeds the half-line norm of
// psi_n^2, and collapses back to V as C -> infinity.
//
// All operator applications below are written in the regular combinations
// f = psi^2/D and g = psi psi'/D, so nodes of psi_n are harmless; only
// superpotential_jet itself divides by psi.

#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "isospec/jet.hpp"
#include "isospec/models.hpp"

namespace isospec::susy {

struct NodeOfPsi : std::domain_error {
  using std::domain_error::domain_error;
};

// Requested operation is undefined on the level filled by the missing state.
struct MissingState : std::logic_error {
  using std::logic_error::logic_error;
};

// |C| at or below the half-line norm of psi_n^2: D would vanish somewhere.
struct BelowThreshold : std::domain_error {
  using std::domain_error::domain_error;
};

// Jet of W = -psi_n'/psi_n.  Throws NodeOfPsi within 1e-12 of a node
// (relative to the local magnitude envelope of psi_n).
Jet2 superpotential_jet(const models::Model& model, int n, double x);

// Coefficients of the single second-order operator T = d^2/dx^2 + eta d/dx
// + gamma (equal to -B^+A) that intertwines the pair: H~ T = T H.
struct IntertwinerCoeffs {
  double eta = 0.0;
  double gamma = 0.0;
};

struct TildeState {
  int k = 0;
  double energy = 0.0;         // E_k - E_n
  double norm_constant = 0.0;  // scales the raw state to unit norm,
                               // signed so the peak sample is positive
  int node_count = 0;
};

class PartnerFamily {
 public:
  // Throws models::InvalidIndex if n is not a level of the model and
  // BelowThreshold if |c| <= half-line norm of psi_n^2.
  PartnerFamily(models::Model model, int n, double c);

  const models::Model& model() const { return model_; }
  int n() const { return n_; }
  double c() const { return c_; }
  // Smallest |C| at which the family is singularity-free (exclusive bound).
  double threshold() const { return tail_norm_; }

  double denominator(double x) const;  // D(x) = C + int_0^x psi_n^2
  Jet2 bernoulli_f(double x) const;    // f, f', f''

  double partner_potential(double x) const;
  Jet2 partner_potential_jet(double x) const;

  // Unit-norm level-n state N(C) psi_n / D and its closed-form constant
  // N(C) = sqrt((C^2 - I^2) / (2 I)), I the half-line norm of psi_n^2.
  double missing_state(double x) const;
  Jet2 missing_state_jet(double x) const;
  double norm_constant_closed_form() const;

  // Level k != n carried over: B^+ A psi_k / (E_k - E_n).  Shares the norm
  // of the seed psi_k.  Throws MissingState at k == n.
  double mapped_state(int k, double x) const;
  Jet2 mapped_state_jet(int k, double x) const;

  // mapped_state for k != n, psi_n / D (no norm constant) for k == n.
  double raw_state(int k, double x) const;

  // Per-level summary; norm constant by quadrature for mapped levels and
  // closed form for the missing one, node count from an internal grid.
  TildeState state(int k) const;

  // Applies A^+ B to the deformed level k and divides by E_k - E_n, which
  // recovers the seed psi_k(x).  The overload takes a precomputed jet of
  // the deformed state at x.
  double inverse_map(int k, double x) const;
  double inverse_map(int k, double x, const Jet2& tilde) const;

  // Fifth-order ladder (B^+A) a^+ (A^+B) on the deformed level k, where a^+
  // is the oscillator raising operator; defined for the oscillator model
  // only.  The result is (E_k - E_n)(E_{k+1} - E_n) times the deformed
  // level k+1.
  double raise_state(int k, double x) const;

  IntertwinerCoeffs intertwiner_coeffs(double x) const;

  // Values of A A^+ phi and B B^+ phi at x for a probe jet phi; the two
  // agree identically.  Uses W, so probes must stay off nodes of psi_n.
  std::pair<double, double> factorization_apply(double x, const Jet2& phi) const;
  // Normalized |A A^+ phi - B B^+ phi|.
  double factorization_check(double x, const Jet2& phi) const;

 private:
  struct Local;
  Local local(double x) const;

  models::Model model_;
  int n_;
  double c_;
  double tail_norm_;
  mutable std::map<int, TildeState> cache_;
  mutable std::mutex cache_mutex_;
};

}  // namespace isospec::susy
