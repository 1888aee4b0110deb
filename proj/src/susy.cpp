#include "isospec/susy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "isospec/specfun.hpp"

namespace isospec::susy {

namespace {

// Internal grid for sign fixing and node counting of deformed states.
constexpr double kGridHalfWidth = 10.0;
constexpr int kGridSamples = 4001;

double grid_point(int i) {
  return -kGridHalfWidth + (2.0 * kGridHalfWidth * i) / (kGridSamples - 1);
}

}  // namespace

Jet2 superpotential_jet(const models::Model& model, int n, double x) {
  const Jet2 v = model.base_potential_jet(n, x);
  const Jet2 psi = model.psi_jet(n, x);
  const double floor = 1e-12 * model.psi_scale(n, x) + 1e-300;
  if (std::abs(psi.v) <= floor) {
    throw NodeOfPsi("superpotential_jet: evaluation at a node of psi_n");
  }
  // psi_n has zero energy under the shifted potential, so psi''' closes as
  // V' psi + V psi'.
  const Jet2 dpsi{psi.d1, psi.d2, v.d1 * psi.v + v.v * psi.d1};
  return -(dpsi / psi);
}

// Everything the operator formulas need at one point: potential jet, state
// jet with closed third derivative, denominator jet, f with third
// derivative, and g = psi psi'/D.
struct PartnerFamily::Local {
  Jet2 v;      // V(x) - E_n and two derivatives
  Jet2 psi;    // psi_n
  double psi3; // psi_n'''
  Jet2 den;    // D, D', D''
  double den3; // D'''
  Jet2 f;      // f, f', f''
  double f3;   // f'''
  Jet2 g;      // g, g', g''
};

PartnerFamily::Local PartnerFamily::local(double x) const {
  Local L;
  L.v = model_.base_potential_jet(n_, x);
  L.psi = model_.psi_jet(n_, x);
  L.psi3 = L.v.d1 * L.psi.v + L.v.v * L.psi.d1;
  const Jet2 p = L.psi * L.psi;
  const double p3 = 6.0 * L.psi.d1 * L.psi.d2 + 2.0 * L.psi.v * L.psi3;
  L.den = Jet2{c_ + model_.tail_integral(n_, x), p.v, p.d1};
  L.den3 = p.d2;
  L.f = p / L.den;
  // Third derivative of f D = psi^2 by the Leibniz rule.
  L.f3 = (p3 - 3.0 * L.f.d2 * L.den.d1 - 3.0 * L.f.d1 * L.den.d2 -
          L.f.v * L.den3) /
         L.den.v;
  const Jet2 dpsi{L.psi.d1, L.psi.d2, L.psi3};
  L.g = (L.psi * dpsi) / L.den;
  return L;
}

PartnerFamily::PartnerFamily(models::Model model, int n, double c)
    : model_(model), n_(n), c_(c), tail_norm_(model.half_line_norm(n)) {
  if (!(std::abs(c) > tail_norm_)) {
    throw BelowThreshold("PartnerFamily: |C| = " + std::to_string(std::abs(c)) +
                         " does not exceed the half-line norm " +
                         std::to_string(tail_norm_) + " of psi_n^2");
  }
}

double PartnerFamily::denominator(double x) const {
  return c_ + model_.tail_integral(n_, x);
}

Jet2 PartnerFamily::bernoulli_f(double x) const { return local(x).f; }

double PartnerFamily::partner_potential(double x) const {
  const Local L = local(x);
  return L.v.v - 2.0 * L.f.d1;
}

Jet2 PartnerFamily::partner_potential_jet(double x) const {
  const Local L = local(x);
  return {L.v.v - 2.0 * L.f.d1, L.v.d1 - 2.0 * L.f.d2, L.v.d2 - 2.0 * L.f3};
}

double PartnerFamily::norm_constant_closed_form() const {
  return std::sqrt((c_ * c_ - tail_norm_ * tail_norm_) / (2.0 * tail_norm_));
}

double PartnerFamily::missing_state(double x) const {
  const Local L = local(x);
  return norm_constant_closed_form() * L.psi.v / L.den.v;
}

Jet2 PartnerFamily::missing_state_jet(double x) const {
  const Local L = local(x);
  return norm_constant_closed_form() * (L.psi / L.den);
}

Jet2 PartnerFamily::mapped_state_jet(int k, double x) const {
  if (k == n_) {
    throw MissingState("mapped_state: level n is produced by missing_state");
  }
  const double de = model_.energy(k) - model_.energy(n_);
  const Local L = local(x);
  const Jet2 pk = model_.psi_jet(k, x);
  // psi_k''' closes through the eigenvalue equation at energy E_k - E_n.
  const Jet2 dpk{pk.d1, pk.d2, L.v.d1 * pk.v + (L.v.v - de) * pk.d1};
  return pk + (L.f * dpk - L.g * pk) / de;
}

double PartnerFamily::mapped_state(int k, double x) const {
  return mapped_state_jet(k, x).v;
}

double PartnerFamily::raw_state(int k, double x) const {
  if (k == n_) {
    const Local L = local(x);
    return L.psi.v / L.den.v;
  }
  return mapped_state(k, x);
}

double PartnerFamily::inverse_map(int k, double x) const {
  return inverse_map(k, x, mapped_state_jet(k, x));
}

double PartnerFamily::inverse_map(int k, double x, const Jet2& tilde) const {
  if (k == n_) {
    throw MissingState("inverse_map: level n has no seed to recover");
  }
  const double de = model_.energy(k) - model_.energy(n_);
  const Local L = local(x);
  // A^+ B phi = -phi'' + V phi - f phi' - (f' + g) phi, regular everywhere.
  const double applied = -tilde.d2 + L.v.v * tilde.v - L.f.v * tilde.d1 -
                         (L.f.d1 + L.g.v) * tilde.v;
  return applied / de;
}

double PartnerFamily::raise_state(int k, double x) const {
  if (model_.kind() != models::ModelKind::HarmonicOscillator) {
    throw std::invalid_argument(
        "raise_state: ladder factor is defined for the oscillator model only");
  }
  if (k == n_) {
    throw MissingState("raise_state: level n is not a mapped state");
  }
  const double de = model_.energy(k) - model_.energy(n_);
  const Local L = local(x);
  const Jet2 ts = mapped_state_jet(k, x);
  const Jet2 vt{L.v.v - 2.0 * L.f.d1, L.v.d1 - 2.0 * L.f.d2,
                L.v.d2 - 2.0 * L.f3};
  // Deformed state closes under its own potential at energy E_k - E_n.
  const double t3 = vt.d1 * ts.v + (vt.v - de) * ts.d1;
  const double t4 =
      vt.d2 * ts.v + 2.0 * vt.d1 * ts.d1 + (vt.v - de) * ts.d2;

  // u = A^+ B ts and its first two derivatives.
  const double fg = L.f.d1 + L.g.v;
  const double fg1 = L.f.d2 + L.g.d1;
  const double fg2 = L.f3 + L.g.d2;
  const double u0 = -ts.d2 + L.v.v * ts.v - L.f.v * ts.d1 - fg * ts.v;
  const double u1 = -t3 + L.v.d1 * ts.v + L.v.v * ts.d1 - L.f.d1 * ts.d1 -
                    L.f.v * ts.d2 - fg1 * ts.v - fg * ts.d1;
  const double u2 = -t4 + L.v.d2 * ts.v + 2.0 * L.v.d1 * ts.d1 +
                    L.v.v * ts.d2 - L.f.d2 * ts.d1 - 2.0 * L.f.d1 * ts.d2 -
                    L.f.v * t3 - fg2 * ts.v - 2.0 * fg1 * ts.d1 - fg * ts.d2;
  // u is proportional to psi_k, so u''' closes at energy E_k - E_n.
  const double u3 = L.v.d1 * u0 + (L.v.v - de) * u1;

  // w = a^+ u with the oscillator ladder a^+ = -d/dx + x.
  const double w0 = -u1 + x * u0;
  const double w1 = -u2 + u0 + x * u1;
  const double w2 = -u3 + 2.0 * u1 + x * u2;

  // B^+ A w = -w'' + V w + f w' - g w.
  return -w2 + L.v.v * w0 + L.f.v * w1 - L.g.v * w0;
}

IntertwinerCoeffs PartnerFamily::intertwiner_coeffs(double x) const {
  const Local L = local(x);
  return {-L.f.v, -(L.v.v - L.g.v)};
}

std::pair<double, double> PartnerFamily::factorization_apply(
    double x, const Jet2& phi) const {
  const Jet2 w = superpotential_jet(model_, n_, x);
  const Local L = local(x);
  const double a = -phi.d2 + (w.d1 + w.v * w.v) * phi.v;
  const double s = L.f.v + w.v;
  const double s1 = L.f.d1 + w.d1;
  const double b = -phi.d2 + (s1 + s * s) * phi.v;
  return {a, b};
}

double PartnerFamily::factorization_check(double x, const Jet2& phi) const {
  const auto [a, b] = factorization_apply(x, phi);
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

TildeState PartnerFamily::state(int k) const {
  if (!model_.valid_index(k)) {
    throw models::InvalidIndex("state: index " + std::to_string(k) +
                               " is not in the spectrum of this model");
  }
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (const auto it = cache_.find(k); it != cache_.end()) return it->second;
  }

  TildeState st;
  st.k = k;
  st.energy = model_.energy(k) - model_.energy(n_);

  std::vector<double> vals(kGridSamples);
  double peak = 0.0;
  int peak_at = 0;
  for (int i = 0; i < kGridSamples; ++i) {
    vals[i] = raw_state(k, grid_point(i));
    if (std::abs(vals[i]) > peak) {
      peak = std::abs(vals[i]);
      peak_at = i;
    }
  }

  const double floor = 1e-9 * peak;
  int nodes = 0;
  int last_sign = 0;
  for (double v : vals) {
    if (std::abs(v) <= floor) continue;
    const int s = v > 0.0 ? 1 : -1;
    if (last_sign != 0 && s != last_sign) ++nodes;
    last_sign = s;
  }
  st.node_count = nodes;

  double magnitude = 0.0;
  if (k == n_) {
    magnitude = norm_constant_closed_form();
  } else {
    const auto density = [&](double s) {
      const double v = raw_state(k, s);
      return v * v;
    };
    const double inf = std::numeric_limits<double>::infinity();
    const double total = specfun::integrate(density, 0.0, inf, 1e-10) +
                         specfun::integrate([&](double s) { return density(-s); },
                                            0.0, inf, 1e-10);
    magnitude = 1.0 / std::sqrt(total);
  }
  st.norm_constant = vals[peak_at] >= 0.0 ? magnitude : -magnitude;

  std::lock_guard<std::mutex> lock(cache_mutex_);
  return cache_.emplace(k, st).first->second;
}

}  // namespace isospec::susy
