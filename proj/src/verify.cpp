#include "isospec/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <random>
#include <set>

#include <json.hpp>

#include "isospec/jet.hpp"
#include "isospec/models.hpp"
#include "isospec/oracle.hpp"
#include "isospec/report.hpp"
#include "isospec/specfun.hpp"
#include "isospec/susy.hpp"

namespace isospec::verify {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// ---------------------------------------------------------------------------
// Hand-written reference displays, evaluated through jets only.  These are
// kept deliberately independent of the library's own partner/state code so
// that agreement is a two-route check.

Jet2 var(double x) { return Jet2::variable(x); }

double ref_pot_ho0(double c, double x) {
  const Jet2 X = var(x);
  const Jet2 inner = exp(-(X * X)) / (c + 0.5 * kSqrtPi * specfun::erf(X));
  return x * x - 1.0 - 2.0 * inner.d1;
}

double ref_pot_ho1(double c, double x) {
  const Jet2 X = var(x);
  const Jet2 inner = (X * X) * exp(-(X * X)) /
                     (c - 2.0 * X * exp(-(X * X)) + kSqrtPi * specfun::erf(X));
  return x * x - 3.0 - 8.0 * inner.d1;
}

double ref_pot_cprs3(double c, double x) {
  const Jet2 X = var(x);
  const Jet2 X2 = X * X;
  const Jet2 bump = 2.0 * X2 + 3.0;
  const Jet2 num = 16.0 * X2 * bump * bump;
  const Jet2 ring = 2.0 * X2 + 1.0;
  const Jet2 den = 8.0 * X * (4.0 * X2 * X2 + 8.0 * X2 + 3.0) -
                   exp(X2) * ring * ring *
                       (c + 12.0 * kSqrtPi * specfun::erf(X));
  const Jet2 inner = num / den;
  const double u = 2.0 * x * x + 1.0;
  return x * x - 3.0 + 8.0 * (2.0 * x * x - 1.0) / (u * u) + 2.0 * inner.d1;
}

Jet2 ref_state_ho0_k0(double c, double x) {
  const Jet2 X = var(x);
  const double norm = std::sqrt((4.0 * c * c - kPi) / (4.0 * kSqrtPi));
  return norm * exp(-0.5 * (X * X)) / (c + 0.5 * kSqrtPi * specfun::erf(X));
}

Jet2 ref_state_ho0_k1(double c, double x) {
  const Jet2 X = var(x);
  const Jet2 growth = exp(X * X);
  const Jet2 num =
      1.0 + 2.0 * c * X * growth + kSqrtPi * X * specfun::erf(X) * growth;
  return std::pow(4.0 / kPi, 0.25) * exp(-1.5 * (X * X)) * num /
         (2.0 * c + kSqrtPi * specfun::erf(X));
}

Jet2 ref_state_ho1_k1(double c, double x) {
  const Jet2 X = var(x);
  const double norm = std::sqrt((c * c - kPi) / (2.0 * kSqrtPi));
  return norm * 2.0 * X * exp(-0.5 * (X * X)) /
         (c - 2.0 * X * exp(-(X * X)) + kSqrtPi * specfun::erf(X));
}

Jet2 ref_state_ho1_k0(double c, double x) {
  const Jet2 X = var(x);
  const Jet2 growth = exp(X * X);
  return std::pow(1.0 / kPi, 0.25) * exp(0.5 * (X * X)) *
         (c + kSqrtPi * specfun::erf(X)) /
         (c * growth - 2.0 * X + kSqrtPi * specfun::erf(X) * growth);
}

Jet2 ref_state_cprs3_k3(double c, double x) {
  const Jet2 X = var(x);
  const Jet2 X2 = X * X;
  const double norm = std::sqrt((c * c - 144.0 * kPi) / (24.0 * kSqrtPi));
  const Jet2 num = 4.0 * X * (2.0 * X2 + 3.0) * exp(0.5 * X2);
  const Jet2 den = exp(X2) * (2.0 * X2 + 1.0) *
                       (c + 12.0 * kSqrtPi * specfun::erf(X)) -
                   8.0 * X * (2.0 * X2 + 3.0);
  return norm * num / den;
}

// ---------------------------------------------------------------------------
// Shared helpers.

models::Model make_model(models::ModelKind kind) { return models::Model(kind); }

struct FamilySpec {
  models::ModelKind kind;
  int n;
  double c;
  std::vector<int> levels;  // levels exercised in state-based checks
};

const std::vector<FamilySpec>& family_specs() {
  static const std::vector<FamilySpec> specs = {
      {models::ModelKind::HarmonicOscillator, 0, 1.0, {0, 1, 2, 3}},
      {models::ModelKind::HarmonicOscillator, 1, 3.0, {0, 1, 2, 3}},
      {models::ModelKind::Cprs, 3, 21.5, {0, 3, 4, 5}},
  };
  return specs;
}

std::string family_tag(const FamilySpec& fs) {
  const char* name =
      fs.kind == models::ModelKind::HarmonicOscillator ? "ho" : "cprs";
  return std::string(name) + "-n" + std::to_string(fs.n);
}

// 20 fixed probe points that avoid x = 0, the only node the exercised seed
// states have.
std::vector<double> probe_points() {
  std::vector<double> pts;
  for (int j = 0; j < 20; ++j) pts.push_back(-3.8 + 0.4 * j);
  return pts;
}

struct SpectrumRun {
  std::vector<double> extrapolated;
  oracle::Spectrum fine;
  oracle::TridiagonalOperator fine_op;
};

SpectrumRun run_spectrum(const FamilySpec& fs, int m) {
  const models::Model model = make_model(fs.kind);
  const susy::PartnerFamily family(model, fs.n, fs.c);
  const auto potential = [&](double x) { return family.partner_potential(x); };
  const oracle::Grid coarse_grid{10.0, 4000};
  const oracle::Grid fine_grid{10.0, 8001};
  const auto coarse_op = oracle::discretize(potential, coarse_grid);
  auto fine_op = oracle::discretize(potential, fine_grid);
  const auto coarse = oracle::eigen_lowest(coarse_op, m);
  auto fine = oracle::eigen_lowest(fine_op, m);
  SpectrumRun run;
  run.extrapolated = oracle::richardson(coarse, fine);
  run.fine = std::move(fine);
  run.fine_op = std::move(fine_op);
  return run;
}

CheckResult spectrum_check(const FamilySpec& fs,
                           const std::vector<double>& expected,
                           bool expect_one_negative,
                           bool check_absent_levels) {
  const SpectrumRun run = run_spectrum(fs, static_cast<int>(expected.size()));
  CheckResult r;
  r.tolerance = 1e-3;
  double worst = 0.0;
  std::string detail = "energies:";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    worst = std::max(worst, std::abs(run.extrapolated[i] - expected[i]));
    detail += " " + cli::format_double(run.extrapolated[i]);
  }
  r.measured = worst;
  r.pass = worst <= r.tolerance;
  if (expect_one_negative) {
    int negatives = 0;
    for (double e : run.extrapolated) {
      if (e < -0.5) ++negatives;
    }
    detail += "; negative levels: " + std::to_string(negatives);
    r.pass = r.pass && negatives == 1;
  }
  if (check_absent_levels) {
    for (double center : {-4.0, -2.0}) {
      const int count = oracle::sturm_count(run.fine_op, center + 0.5) -
                        oracle::sturm_count(run.fine_op, center - 0.5);
      detail += "; count near " + cli::format_double(center) + ": " +
                std::to_string(count);
      r.pass = r.pass && count == 0;
    }
  }
  r.detail = detail;
  return r;
}

double full_line_quadrature(const std::function<double(double)>& f,
                            double tol) {
  return specfun::integrate(f, 0.0, kInf, tol) +
         specfun::integrate([&](double s) { return f(-s); }, 0.0, kInf, tol);
}

// ---------------------------------------------------------------------------
// The checks themselves.

CheckResult check_erf_against_libm() {
  CheckResult r;
  r.tolerance = 1e-14;
  double worst = 0.0;
  double at = 0.0;
  for (double x = -6.0; x <= 6.0 + 1e-12; x += 0.01) {
    const double d = std::abs(specfun::erf(x) - std::erf(x));
    if (d > worst) {
      worst = d;
      at = x;
    }
  }
  r.measured = worst;
  r.pass = worst <= r.tolerance;
  r.detail = "worst at x = " + cli::format_double(at);
  return r;
}

CheckResult check_state_residuals() {
  struct Case {
    const char* name;
    double c;
    double energy;
    Jet2 (*state)(double, double);
    double (*pot)(double, double);
  };
  const Case cases[] = {
      {"ho-n0-k0", 1.0, 0.0, ref_state_ho0_k0, ref_pot_ho0},
      {"ho-n0-k1", 1.0, 2.0, ref_state_ho0_k1, ref_pot_ho0},
      {"ho-n1-k0", 3.0, -2.0, ref_state_ho1_k0, ref_pot_ho1},
      {"ho-n1-k1", 3.0, 0.0, ref_state_ho1_k1, ref_pot_ho1},
      {"cprs-n3-k3", 21.5, 0.0, ref_state_cprs3_k3, ref_pot_cprs3},
  };
  CheckResult r;
  r.tolerance = 1e-8;
  double worst = 0.0;
  std::string worst_name;
  for (const Case& c : cases) {
    for (int i = 0; i < 500; ++i) {
      const double x = -5.0 + 10.0 * i / 499.0;
      const Jet2 s = c.state(c.c, x);
      const double v = c.pot(c.c, x);
      const double resid = -s.d2 + v * s.v - c.energy * s.v;
      const double scale = std::abs(s.d2) + std::abs(v * s.v) +
                           std::abs(c.energy * s.v) + 1e-300;
      const double rel = std::abs(resid) / scale;
      if (rel > worst) {
        worst = rel;
        worst_name = c.name;
      }
    }
  }
  r.measured = worst;
  r.pass = worst <= r.tolerance;
  r.detail = "worst case: " + worst_name;
  return r;
}

CheckResult check_norm_constants() {
  struct Case {
    Jet2 (*state)(double, double);
    std::vector<double> cs;
  };
  const Case cases[] = {
      {ref_state_ho0_k0, {0.9, 1.0, 2.0, -1.5}},
      {ref_state_ho1_k1, {1.8, 2.0, 3.5, -2.5}},
      {ref_state_cprs3_k3, {21.5, 25.0, 40.0, -30.0}},
  };
  CheckResult r;
  r.tolerance = 1e-8;
  double worst = 0.0;
  for (const Case& c : cases) {
    for (double cval : c.cs) {
      const auto density = [&](double s) {
        const double v = c.state(cval, s).v;
        return v * v;
      };
      const double norm = full_line_quadrature(density, 1e-11);
      worst = std::max(worst, std::abs(norm - 1.0));
    }
  }
  r.measured = worst;
  r.pass = worst <= r.tolerance;
  r.detail = "quadrature norms of closed-form unit states vs 1";
  return r;
}

CheckResult check_threshold_formulas() {
  CheckResult r;
  r.tolerance = 1e-9;
  double worst = 0.0;
  std::string detail;

  const models::Model ho = models::Model::harmonic_oscillator();
  const models::Model cprs = models::Model::cprs();
  const auto check_model = [&](const models::Model& model, int n) {
    const double closed = model.half_line_norm(n);
    const auto density = [&](double s) {
      const double v = model.psi_jet(n, s).v;
      return v * v;
    };
    const double quad =
        specfun::integrate(density, 0.0, kInf, 1e-11 * std::max(1.0, closed));
    worst = std::max(worst, std::abs(quad - closed) / closed);
  };
  for (int n = 0; n <= 6; ++n) check_model(ho, n);
  for (int n : {3, 4, 5}) check_model(cprs, n);

  // Denominator behavior just above and just below the bound.
  bool denominators_ok = true;
  const FamilySpec probes[] = {
      {models::ModelKind::HarmonicOscillator, 0, 0.0, {}},
      {models::ModelKind::HarmonicOscillator, 1, 0.0, {}},
      {models::ModelKind::Cprs, 3, 0.0, {}},
  };
  for (const FamilySpec& fs : probes) {
    const models::Model model = make_model(fs.kind);
    const double bound = model.half_line_norm(fs.n);
    const auto den = [&](double c, double x) {
      return c + model.tail_integral(fs.n, x);
    };
    for (double sign : {1.0, -1.0}) {
      const double c = sign * 1.01 * bound;
      double lo = kInf, hi = -kInf;
      for (double x = -12.0; x <= 12.0 + 1e-12; x += 0.005) {
        const double d = den(c, x);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
      }
      denominators_ok = denominators_ok && (lo > 0.0 || hi < 0.0);
    }
    double lo = -12.0, hi = 12.0;
    const double c = 0.99 * bound;
    if (den(c, lo) >= 0.0 || den(c, hi) <= 0.0) {
      denominators_ok = false;
    } else {
      for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        (den(c, mid) < 0.0 ? lo : hi) = mid;
      }
      const double at_root = std::abs(den(c, 0.5 * (lo + hi)));
      denominators_ok = denominators_ok && at_root <= 1e-9 * bound;
    }
  }
  r.measured = worst;
  r.pass = worst <= r.tolerance && denominators_ok;
  r.detail = std::string("half-line integrals vs closed forms; denominators ") +
             (denominators_ok ? "behave as expected across the bound"
                              : "misbehave near the bound");
  return r;
}

CheckResult check_hermite_tail_closed_form() {
  CheckResult r;
  r.tolerance = 1e-10;
  double worst = 0.0;
  const models::Model ho = models::Model::harmonic_oscillator();
  for (int n = 0; n <= 6; ++n) {
    for (double x : {0.5, 1.0, 2.0, 4.0}) {
      const double closed = ho.tail_integral(n, x);
      const auto density = [&](double s) {
        const double v = ho.psi_jet(n, s).v;
        return v * v;
      };
      const double quad = specfun::integrate(
          density, 0.0, x, 1e-12 * std::max(1.0, std::abs(closed)));
      worst = std::max(worst,
                       std::abs(quad - closed) / std::max(1.0, std::abs(closed)));
    }
  }
  r.measured = worst;
  r.pass = worst <= r.tolerance;
  r.detail = "running seed-density integrals vs hypergeometric sums";
  return r;
}

CheckResult check_poly_derivative_identity() {
  CheckResult r;
  r.tolerance = 0.0;
  double worst = 0.0;
  for (int n = 3; n <= 10; ++n) {
    const auto lhs = specfun::poly_derivative(models::cprs_poly(n).coeffs);
    const auto h = specfun::hermite_poly(n - 3).coeffs;
    std::vector<double> rhs(h.size() + 2, 0.0);
    for (std::size_t i = 0; i < h.size(); ++i) {
      rhs[i] += 4.0 * n * h[i];
      rhs[i + 2] += 8.0 * n * h[i];
    }
    const std::size_t width = std::max(lhs.size(), rhs.size());
    for (std::size_t i = 0; i < width; ++i) {
      const double a = i < lhs.size() ? lhs[i] : 0.0;
      const double b = i < rhs.size() ? rhs[i] : 0.0;
      worst = std::max(worst, std::abs(a - b));
    }
  }
  r.measured = worst;
  r.pass = worst <= r.tolerance;
  r.detail = "coefficient arrays compared exactly";
  return r;
}

CheckResult check_poly_ode_identity() {
  CheckResult r;
  r.tolerance = 1e-9;
  double worst = 0.0;
  std::mt19937 rng(20240811u);
  std::uniform_real_distribution<double> dist(-4.0, 4.0);
  for (int n = 3; n <= 10; ++n) {
    int accepted = 0;
    while (accepted < 20) {
      const double x = dist(rng);
      try {
        worst = std::max(worst,
                         std::abs(models::cprs_ode_identity(n, x) - 2.0 * n));
        ++accepted;
      } catch (const models::PolynomialZero&) {
        // drew a root; take another point
      }
    }
  }
  r.measured = worst;
  r.pass = worst <= r.tolerance;
  r.detail = "20 random points per degree, 3..10";
  return r;
}

CheckResult check_poly_divergence_identity() {
  CheckResult r;
  r.tolerance = 1e-9;
  double worst = 0.0;
  std::mt19937 rng(20240812u);
  std::uniform_real_distribution<double> dist(-4.0, 4.0);
  for (int n = 3; n <= 10; ++n) {
    const auto poly = models::cprs_poly(n);
    for (int j = 0; j < 20; ++j) {
      const double x = dist(rng);
      const double u = 2.0 * x * x + 1.0;
      const double lhs =
          specfun::poly_eval(poly.coeffs, x) * std::exp(-x * x) / (u * u);
      const Jet2 X = var(x);
      const Jet2 inner =
          specfun::hermite_jet(n - 3, x) * exp(-(X * X)) / (2.0 * X * X + 1.0);
      const double rhs = -2.0 * inner.d1;
      worst = std::max(worst,
                       std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
    }
  }
  r.measured = worst;
  r.pass = worst <= r.tolerance;
  r.detail = "pointwise against jet derivative of the compact form";
  return r;
}

CheckResult check_annihilation() {
  CheckResult r;
  r.tolerance = 1e-10;
  double worst = 0.0;
  for (const FamilySpec& fs : family_specs()) {
    const models::Model model = make_model(fs.kind);
    const susy::PartnerFamily family(model, fs.n, fs.c);
    for (double x : probe_points()) {
      const Jet2 w = susy::superpotential_jet(model, fs.n, x);
      const Jet2 seed = model.psi_jet(fs.n, x);
      const double lower = seed.d1 + w.v * seed.v;
      const double lower_scale =
          std::abs(seed.d1) + std::abs(w.v * seed.v) + 1e-300;
      worst = std::max(worst, std::abs(lower) / lower_scale);

      const Jet2 miss = family.missing_state_jet(x);
      const double s = family.bernoulli_f(x).v + w.v;
      const double upper = miss.d1 + s * miss.v;
      const double upper_scale =
          std::abs(miss.d1) + std::abs(s * miss.v) + 1e-300;
      worst = std::max(worst, std::abs(upper) / upper_scale);
    }
  }
  r.measured = worst;
  r.pass = worst <= r.tolerance;
  r.detail = "first-order operators on seed and level-n states";
  return r;
}

CheckResult check_bernoulli_residual() {
  CheckResult r;
  r.tolerance = 1e-9;
  double worst = 0.0;
  for (const FamilySpec& fs : family_specs()) {
    const models::Model model = make_model(fs.kind);
    const susy::PartnerFamily family(model, fs.n, fs.c);
    for (double x : probe_points()) {
      const Jet2 f = family.bernoulli_f(x);
      const Jet2 w = susy::superpotential_jet(model, fs.n, x);
      const double resid = f.d1 + 2.0 * w.v * f.v + f.v * f.v;
      const double scale = std::abs(f.d1) + std::abs(2.0 * w.v * f.v) +
                           f.v * f.v + 1e-300;
      worst = std::max(worst, std::abs(resid) / scale);
    }
  }
  r.measured = worst;
  r.pass = worst <= r.tolerance;
  r.detail = "f' + 2 W f + f^2 over the three families";
  return r;
}

CheckResult check_factorization() {
  CheckResult r;
  r.tolerance = 1e-8;
  double worst = 0.0;
  for (const FamilySpec& fs : family_specs()) {
    const models::Model model = make_model(fs.kind);
    const susy::PartnerFamily family(model, fs.n, fs.c);
    for (double x : probe_points()) {
      const Jet2 X = var(x);
      const Jet2 probe = (1.0 + X * X) * exp(-0.25 * (X * X));
      worst = std::max(worst, family.factorization_check(x, probe));
    }
  }
  r.measured = worst;
  r.pass = worst <= r.tolerance;
  r.detail = "two factorizations of the intermediate operator on probes";
  return r;
}

CheckResult check_ladder() {
  struct Case {
    int n;
    double c;
    int k;
  };
  const Case cases[] = {{0, 1.0, 1}, {0, 1.0, 2}, {1, 3.0, 2}};
  CheckResult r;
  r.tolerance = 1e-6;
  double worst = 0.0;
  const models::Model ho = models::Model::harmonic_oscillator();
  for (const Case& c : cases) {
    const susy::PartnerFamily family(ho, c.n, c.c);
    const double de_k = ho.energy(c.k) - ho.energy(c.n);
    const double de_up = ho.energy(c.k + 1) - ho.energy(c.n);
    double sup_expected = 0.0, sup_diff = 0.0;
    for (int i = 0; i <= 200; ++i) {
      const double x = -4.0 + 8.0 * i / 200.0;
      const double expected = de_k * de_up * family.mapped_state(c.k + 1, x);
      const double got = family.raise_state(c.k, x);
      sup_expected = std::max(sup_expected, std::abs(expected));
      sup_diff = std::max(sup_diff, std::abs(got - expected));
    }
    worst = std::max(worst, sup_diff / sup_expected);
  }
  r.measured = worst;
  r.pass = worst <= r.tolerance;
  r.detail = "fifth-order ladder output vs energy-scaled next level";
  return r;
}

CheckResult check_large_c_collapse() {
  CheckResult r;
  r.tolerance = 1e-4;
  double worst = 0.0;
  for (const FamilySpec& fs : family_specs()) {
    const models::Model model = make_model(fs.kind);
    const susy::PartnerFamily family(model, fs.n, 1e6);
    for (int i = 0; i <= 500; ++i) {
      const double x = -5.0 + 10.0 * i / 500.0;
      worst = std::max(worst, std::abs(family.partner_potential(x) -
                                       model.base_potential(fs.n, x)));
    }
    for (int k : fs.levels) {
      if (k == fs.n) continue;
      double sup_seed = 0.0, sup_diff = 0.0;
      for (int i = 0; i <= 500; ++i) {
        const double x = -5.0 + 10.0 * i / 500.0;
        const double seed = model.psi_jet(k, x).v;
        sup_seed = std::max(sup_seed, std::abs(seed));
        sup_diff = std::max(sup_diff,
                            std::abs(family.mapped_state(k, x) - seed));
      }
      worst = std::max(worst, sup_diff / sup_seed);
    }
  }
  r.measured = worst;
  r.pass = worst <= r.tolerance;
  r.detail = "potential and mapped states against the undeformed model";
  return r;
}

CheckResult check_node_preservation() {
  CheckResult r;
  r.tolerance = 0.0;
  int mismatches = 0;
  std::string detail;
  for (const FamilySpec& fs : family_specs()) {
    const models::Model model = make_model(fs.kind);
    const susy::PartnerFamily family(model, fs.n, fs.c);
    for (int k : fs.levels) {
      const susy::TildeState st = family.state(k);
      if (st.node_count != model.ordinal(k)) {
        ++mismatches;
        detail += " " + family_tag(fs) + "-k" + std::to_string(k) + ":" +
                  std::to_string(st.node_count);
      }
    }
  }
  r.measured = mismatches;
  r.pass = mismatches == 0;
  r.detail = mismatches == 0 ? "node counts match level ordinals"
                             : "mismatches:" + detail;
  return r;
}

CheckResult check_table_determinism() {
  CheckResult r;
  r.tolerance = 0.0;
  bool identical = true;
  for (const FamilySpec& fs : family_specs()) {
    cli::RunConfig config;
    config.model = fs.kind;
    config.n = fs.n;
    config.c = fs.c;
    config.levels.assign(fs.levels.begin(), fs.levels.begin() + 3);
    identical = identical && cli::make_table(config) == cli::make_table(config);
  }
  r.measured = identical ? 0.0 : 1.0;
  r.pass = identical;
  r.detail = "repeated table builds compared byte for byte";
  return r;
}

CheckResult check_table_potential_values() {
  struct Case {
    FamilySpec fs;
    double (*pot)(double, double);
  };
  const Case cases[] = {
      {{models::ModelKind::HarmonicOscillator, 0, 1.0, {0, 1, 2}}, ref_pot_ho0},
      {{models::ModelKind::HarmonicOscillator, 1, 3.0, {0, 1, 2}}, ref_pot_ho1},
      {{models::ModelKind::Cprs, 3, 21.5, {0, 3, 4}}, ref_pot_cprs3},
  };
  CheckResult r;
  r.tolerance = 1e-10;
  double worst = 0.0;
  for (const Case& c : cases) {
    cli::RunConfig config;
    config.model = c.fs.kind;
    config.n = c.fs.n;
    config.c = c.fs.c;
    config.levels = c.fs.levels;
    const std::string csv = cli::make_table(config);

    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < csv.size()) {
      const std::size_t end = csv.find('\n', start);
      lines.push_back(csv.substr(start, end - start));
      start = end == std::string::npos ? csv.size() : end + 1;
    }
    // default grid: 1001 samples on [-5, 5]; x = -2..2 sit at these rows
    for (int row : {300, 400, 500, 600, 700}) {
      const std::string& line = lines[1 + row];
      const std::size_t first = line.find(',');
      const std::size_t second = line.find(',', first + 1);
      const std::size_t third = line.find(',', second + 1);
      const double x = std::strtod(line.c_str(), nullptr);
      const double v_tilde =
          std::strtod(line.substr(second + 1, third - second - 1).c_str(),
                      nullptr);
      worst = std::max(worst, std::abs(v_tilde - c.pot(c.fs.c, x)));
    }
  }
  r.measured = worst;
  r.pass = worst <= r.tolerance;
  r.detail = "table column vs independently written potential displays";
  return r;
}

std::vector<Check> make_checks() {
  std::vector<Check> checks;
  checks.push_back({"erf-against-libm", "specfun", 0, check_erf_against_libm});
  checks.push_back(
      {"hermite-tail-closed-form", "specfun", 7, check_hermite_tail_closed_form});
  checks.push_back({"threshold-formulas", "models", 6, check_threshold_formulas});
  checks.push_back({"rational-poly-derivative-identity", "cprs-identities", 8,
                    check_poly_derivative_identity});
  checks.push_back({"rational-poly-ode-identity", "cprs-identities", 8,
                    check_poly_ode_identity});
  checks.push_back({"rational-poly-divergence-identity", "cprs-identities", 8,
                    check_poly_divergence_identity});
  checks.push_back(
      {"closed-form-state-residuals", "susy", 4, check_state_residuals});
  checks.push_back({"norm-constants", "susy", 5, check_norm_constants});
  checks.push_back({"bernoulli-residual", "susy", 0, check_bernoulli_residual});
  checks.push_back({"annihilation-residuals", "susy", 9, check_annihilation});
  checks.push_back({"factorization-agreement", "susy", 9, check_factorization});
  checks.push_back({"ladder-against-next-level", "susy", 9, check_ladder});
  checks.push_back({"large-c-collapse", "susy", 10, check_large_c_collapse});
  checks.push_back({"node-preservation", "susy", 11, check_node_preservation});
  checks.push_back({"spectrum-ho-n0", "oracle", 1, [] {
                      return spectrum_check(family_specs()[0], {0, 2, 4, 6},
                                            false, false);
                    }});
  checks.push_back({"spectrum-ho-n1", "oracle", 2, [] {
                      return spectrum_check(family_specs()[1], {-2, 0, 2, 4},
                                            true, false);
                    }});
  checks.push_back({"spectrum-cprs-n3", "oracle", 3, [] {
                      return spectrum_check(family_specs()[2], {-6, 0, 2, 4},
                                            false, true);
                    }});
  checks.push_back(
      {"table-determinism", "figures", 12, check_table_determinism});
  checks.push_back(
      {"table-potential-values", "figures", 12, check_table_potential_values});
  return checks;
}

}  // namespace

const std::vector<Check>& all_checks() {
  static const std::vector<Check> checks = make_checks();
  return checks;
}

namespace {

RanCheck run_one(const Check& check) {
  RanCheck ran;
  ran.name = check.name;
  ran.suite = check.suite;
  ran.criterion = check.criterion;
  try {
    ran.result = check.run();
  } catch (const std::exception& e) {
    ran.result.pass = false;
    ran.result.detail = std::string("exception: ") + e.what();
  }
  return ran;
}

}  // namespace

std::vector<RanCheck> run_suite(const std::string& suite) {
  static const std::set<std::string> known = {
      "specfun", "models", "cprs-identities", "susy", "oracle", "figures"};
  const bool everything = suite.empty() || suite == "all";
  if (!everything && known.count(suite) == 0) {
    throw std::invalid_argument("unknown check suite: " + suite);
  }
  std::vector<RanCheck> out;
  for (const Check& check : all_checks()) {
    if (everything || check.suite == suite) out.push_back(run_one(check));
  }
  return out;
}

std::vector<RanCheck> run_criterion(int criterion) {
  std::vector<RanCheck> out;
  for (const Check& check : all_checks()) {
    if (check.criterion == criterion) out.push_back(run_one(check));
  }
  return out;
}

bool all_pass(const std::vector<RanCheck>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const RanCheck& r) { return r.result.pass; });
}

std::string report_json(const std::vector<RanCheck>& results) {
  nlohmann::json checks = nlohmann::json::array();
  int failures = 0;
  for (const RanCheck& r : results) {
    if (!r.result.pass) ++failures;
    checks.push_back({{"name", r.name},
                      {"suite", r.suite},
                      {"criterion", r.criterion},
                      {"pass", r.result.pass},
                      {"measured", r.result.measured},
                      {"tolerance", r.result.tolerance},
                      {"detail", r.result.detail}});
  }
  nlohmann::json doc;
  doc["overall_pass"] = failures == 0 && !results.empty();
  doc["total"] = results.size();
  doc["failures"] = failures;
  doc["checks"] = checks;
  return doc.dump(2) + "\n";
}

}  // namespace isospec::verify
