// Independent check on the closed forms: a Dirichlet finite-difference
// discretization of -d^2/dx^2 + V on [-L, L], with eigenvalues from Sturm
// bisection, eigenvectors from inverse iteration, and a Richardson step to
// cancel the leading h^2 error.  Shares no code with the analytic side.

#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace isospec::oracle {

struct NonFinitePotential : std::domain_error {
  using std::domain_error::domain_error;
};

struct ConvergenceFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GridMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// N interior points of [-L, L]; the boundary carries the Dirichlet zeros.
struct Grid {
  double half_width = 0.0;  // L
  int interior_points = 0;  // N

  double step() const { return 2.0 * half_width / (interior_points + 1); }
  double point(int i) const { return -half_width + (i + 1) * step(); }
};

struct TridiagonalOperator {
  Grid grid;
  std::vector<double> diag;  // 2/h^2 + V(x_i)
  std::vector<double> off;   // -1/h^2, size N-1
};

struct Spectrum {
  Grid grid;
  std::vector<double> energies;                   // ascending
  std::vector<int> node_counts;                   // per eigenvector
  std::vector<std::vector<double>> eigenvectors;  // h * sum v^2 = 1, peak > 0
};

TridiagonalOperator discretize(const std::function<double(double)>& potential,
                               const Grid& grid);

// Number of eigenvalues strictly below sigma (Sturm sequence count).
int sturm_count(const TridiagonalOperator& op, double sigma);

// Lowest m eigenpairs.  Bisection resolves eigenvalues to 1e-11 absolute;
// inverse iteration supplies eigenvectors, normalized to h sum v^2 = 1 with
// a positive peak sample.
Spectrum eigen_lowest(const TridiagonalOperator& op, int m);

// Trapezoid inner product h sum f g on a shared grid (endpoint samples are
// the Dirichlet zeros, so the interior sum is the whole rule).
double overlap(const std::vector<double>& f, const std::vector<double>& g,
               const Grid& grid);

int node_count(const std::vector<double>& samples);

// Eliminates the h^2 error from a pair of runs where the fine grid halves
// the step (N -> 2N + 1 at the same L): (4 fine - coarse) / 3.
double richardson(double coarse, double fine);
std::vector<double> richardson(const Spectrum& coarse, const Spectrum& fine);

}  // namespace isospec::oracle
