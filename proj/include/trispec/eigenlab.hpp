#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "trispec/core.hpp"
#include "trispec/euclidean.hpp"
#include "trispec/spherical.hpp"

namespace trispec {

// Ferrers associated Legendre function P_l^m(x) = (1-x^2)^{m/2} d^m/dx^m P_l(x)
// for m >= 0 (no Condon–Shortley phase), extended to m < 0 by
// P_l^{-m} = (-1)^m (l-m)!/(l+m)! P_l^m.  Three-term recurrence in l.
double assoc_legendre(long long l, long long m, double x);

// e^{i m phi} P_l^m(cos theta), the raw (unnormalized) basis convention.
std::complex<double> sphere_basis_eval(long long l, long long m, double theta,
                                       double phi);

// All 2l+1 degree-l basis values at one point, scaled to unit L2 norm on the
// sphere; index m + l.  Normalization keeps the rank computation conditioned
// without changing any rank (it is a fixed diagonal scaling).
Eigen::VectorXcd sphere_basis_row_normalized(long long l, double theta,
                                             double phi);

struct GaussLegendreRule {
  std::vector<double> nodes;    // in (-1, 1), ascending
  std::vector<double> weights;  // sum to 2
};
GaussLegendreRule gauss_legendre(int n);

struct ProjectionRankReport {
  long long eigenvalue = 0;       // l(l+1) on the sphere, lambda on the torus
  long long basis_dimension = 0;  // 2l+1, or the number of index pairs
  long long rank = 0;
  long long expected = 0;
  double sigma_retained_min = 0.0;   // 0 when rank = 0
  double sigma_discarded_max = 0.0;  // 0 when rank = dimension
  double gap_ratio = 0.0;
  bool conclusive = false;  // gap_ratio >= 1e3; anything less fails the run
  unsigned long long seed = 0;

  bool ok() const { return conclusive && rank == expected; }
};

inline constexpr unsigned long long kDefaultEigenlabSeed = 0x7259c3a41ull;

// Samples random sphere points, averages each degree-l basis function over
// the generated rotation group, and reports the numerical rank of the
// sampled projection matrix.  Rank must match multiplicity_closed.
ProjectionRankReport project_and_rank_sphere(
    const TriangleSignature& sig, long long l, long long samples,
    double tol = 1e-8, unsigned long long seed = kDefaultEigenlabSeed);

// Orbit-averaging projection on the index pairs {(m,n) : dual_form = lambda};
// rank must match orbifold_multiplicity.
ProjectionRankReport project_and_rank_torus(const TriangleSignature& sig,
                                            long long lambda,
                                            double tol = 1e-8);

// Counts dihedral-invariant combinations of associated Legendre functions
// directly: m = 0 contributes for even l only; each positive m divisible by n
// contributes one combination (cosine branch for even l+m, sine for odd).
long long dihedral_legendre_multiplicity(long long n, long long l);

}  // namespace trispec
