#include "isospec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace isospec::oracle {

namespace {

constexpr double kPivotFloor = 1e-280;

// Eigenvalue bracket from Gershgorin disks.
std::pair<double, double> gershgorin(const TridiagonalOperator& op) {
  const int n = static_cast<int>(op.diag.size());
  double lo = op.diag[0], hi = op.diag[0];
  for (int i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(op.off[i - 1]);
    if (i + 1 < n) r += std::abs(op.off[i]);
    lo = std::min(lo, op.diag[i] - r);
    hi = std::max(hi, op.diag[i] + r);
  }
  return {lo, hi};
}

// Solves (T - sigma) v = rhs by LU with partial pivoting; the extra upper
// band u2 absorbs the fill-in from row swaps.
void shifted_solve(const TridiagonalOperator& op, double sigma,
                   std::vector<double>& v) {
  const int n = static_cast<int>(op.diag.size());
  std::vector<double> d(n), u1(n, 0.0), u2(n, 0.0), low(n, 0.0);
  std::vector<int> swapped(n, 0);
  for (int i = 0; i < n; ++i) d[i] = op.diag[i] - sigma;
  for (int i = 0; i + 1 < n; ++i) u1[i] = op.off[i];

  for (int i = 0; i + 1 < n; ++i) {
    double sub = op.off[i];  // current subdiagonal entry under the pivot
    if (std::abs(sub) > std::abs(d[i])) {
      std::swap(d[i], sub);
      std::swap(u1[i], d[i + 1]);
      std::swap(u2[i], u1[i + 1]);
      swapped[i] = 1;
    }
    if (std::abs(d[i]) < kPivotFloor) d[i] = kPivotFloor;
    const double m = sub / d[i];
    low[i] = m;
    d[i + 1] -= m * u1[i];
    u1[i + 1] -= m * u2[i];
  }
  if (std::abs(d[n - 1]) < kPivotFloor) d[n - 1] = kPivotFloor;

  for (int i = 0; i + 1 < n; ++i) {
    if (swapped[i]) std::swap(v[i], v[i + 1]);
    v[i + 1] -= low[i] * v[i];
  }
  for (int i = n - 1; i >= 0; --i) {
    double s = v[i];
    if (i + 1 < n) s -= u1[i] * v[i + 1];
    if (i + 2 < n) s -= u2[i] * v[i + 2];
    v[i] = s / d[i];
  }
}

void normalize(std::vector<double>& v, double h) {
  double s = 0.0;
  for (double x : v) s += x * x;
  const double scale = 1.0 / std::sqrt(h * s);
  int peak = 0;
  for (int i = 0; i < static_cast<int>(v.size()); ++i) {
    if (std::abs(v[i]) > std::abs(v[peak])) peak = i;
  }
  const double sign = v[peak] >= 0.0 ? 1.0 : -1.0;
  for (double& x : v) x *= sign * scale;
}

}  // namespace

TridiagonalOperator discretize(const std::function<double(double)>& potential,
                               const Grid& grid) {
  if (grid.interior_points < 2 || !(grid.half_width > 0.0)) {
    throw GridMismatch("discretize: grid needs L > 0 and at least 2 points");
  }
  const double h = grid.step();
  const double inv_h2 = 1.0 / (h * h);
  TridiagonalOperator op;
  op.grid = grid;
  op.diag.resize(grid.interior_points);
  op.off.assign(grid.interior_points - 1, -inv_h2);
  for (int i = 0; i < grid.interior_points; ++i) {
    const double v = potential(grid.point(i));
    if (!std::isfinite(v)) {
      throw NonFinitePotential("discretize: potential is not finite at x = " +
                               std::to_string(grid.point(i)));
    }
    op.diag[i] = 2.0 * inv_h2 + v;
  }
  return op;
}

int sturm_count(const TridiagonalOperator& op, double sigma) {
  const int n = static_cast<int>(op.diag.size());
  int count = 0;
  double d = 1.0;
  for (int i = 0; i < n; ++i) {
    const double b2 = i > 0 ? op.off[i - 1] * op.off[i - 1] : 0.0;
    d = op.diag[i] - sigma - b2 / d;
    if (std::abs(d) < kPivotFloor) d = -kPivotFloor;
    if (d < 0.0) ++count;
  }
  return count;
}

Spectrum eigen_lowest(const TridiagonalOperator& op, int m) {
  const int n = static_cast<int>(op.diag.size());
  if (m < 1 || m > n) {
    throw GridMismatch("eigen_lowest: need 1 <= m <= interior point count");
  }
  Spectrum spec;
  spec.grid = op.grid;
  const auto [glo, ghi] = gershgorin(op);

  for (int j = 0; j < m; ++j) {
    double lo = glo, hi = ghi;
    for (int iter = 0; iter < 300 && hi - lo > 1e-11; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (sturm_count(op, mid) <= j) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    if (hi - lo > 1e-10) {
      throw ConvergenceFailure("eigen_lowest: bisection stalled at level " +
                               std::to_string(j));
    }
    const double lambda = 0.5 * (lo + hi);

    const double h = op.grid.step();
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) {
      v[i] = std::sin((j + 1) * std::numbers::pi * (i + 1) / (n + 1.0));
    }
    normalize(v, h);
    bool settled = false;
    std::vector<double> prev;
    for (int sweep = 0; sweep < 50 && !settled; ++sweep) {
      prev = v;
      shifted_solve(op, lambda + 1e-8, v);
      normalize(v, h);
      double dot = 0.0;
      for (int i = 0; i < n; ++i) dot += v[i] * prev[i];
      settled = std::abs(1.0 - std::abs(h * dot)) < 1e-13;
    }
    double resid = 0.0;
    for (int i = 0; i < n; ++i) {
      double t = (op.diag[i] - lambda) * v[i];
      if (i > 0) t += op.off[i - 1] * v[i - 1];
      if (i + 1 < n) t += op.off[i] * v[i + 1];
      resid = std::max(resid, std::abs(t));
    }
    if (resid > 1e-5 * (std::abs(lambda) + 1.0)) {
      throw ConvergenceFailure(
          "eigen_lowest: inverse iteration residual " + std::to_string(resid) +
          " at level " + std::to_string(j));
    }
    spec.energies.push_back(lambda);
    spec.node_counts.push_back(node_count(v));
    spec.eigenvectors.push_back(std::move(v));
  }
  return spec;
}

double overlap(const std::vector<double>& f, const std::vector<double>& g,
               const Grid& grid) {
  if (f.size() != g.size() ||
      static_cast<int>(f.size()) != grid.interior_points) {
    throw GridMismatch("overlap: sample vectors do not match the grid");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * g[i];
  return grid.step() * s;
}

int node_count(const std::vector<double>& samples) {
  double peak = 0.0;
  for (double v : samples) peak = std::max(peak, std::abs(v));
  const double floor = 1e-9 * peak;
  int nodes = 0;
  int last_sign = 0;
  for (double v : samples) {
    if (std::abs(v) <= floor) continue;
    const int s = v > 0.0 ? 1 : -1;
    if (last_sign != 0 && s != last_sign) ++nodes;
    last_sign = s;
  }
  return nodes;
}

double richardson(double coarse, double fine) {
  return (4.0 * fine - coarse) / 3.0;
}

std::vector<double> richardson(const Spectrum& coarse, const Spectrum& fine) {
  if (coarse.grid.half_width != fine.grid.half_width ||
      fine.grid.interior_points != 2 * coarse.grid.interior_points + 1) {
    throw GridMismatch(
        "richardson: fine grid must halve the step at the same half-width");
  }
  if (coarse.energies.size() != fine.energies.size()) {
    throw GridMismatch("richardson: spectra hold different level counts");
  }
  std::vector<double> out(coarse.energies.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = richardson(coarse.energies[i], fine.energies[i]);
  }
  return out;
}

}  // namespace isospec::oracle
