#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "trispec/core.hpp"
#include "trispec/numtheory.hpp"

namespace trispec {

enum class LatticeKind { Hexagonal, Square };

// Translation lattice of the maximal torsion-free subgroup together with the
// dual quadratic form, the cyclic quotient order |S|, and the divisor formula
// for the torus multiplicity.
struct LatticeModel {
  LatticeKind kind = LatticeKind::Square;
  Eigen::Vector2d tau;
  Eigen::Vector2d sigma;
  QuadraticForm dual_form;
  long long quotient_order = 0;
  DivisorFormula divisor_formula;
};

LatticeModel lattice_model(const TriangleSignature& sig);

// Dual wavevector k_{m,n}: hexagonal (sqrt(3) m / 2, (2n+m)/2), square (m, n).
// Satisfies k.tau, k.sigma in 2*pi*Z and |k|^2 = dual_form(m, n).
Eigen::Vector2d wavevector(const LatticeModel& model, long long m, long long n);

// Torus multiplicity: 1 at lambda = 0, else scale * (d_{r+,s} - d_{r-,s}).
long long torus_multiplicity(const LatticeModel& model, long long lambda);

// Orbifold multiplicity: 1 at lambda = 0, else torus multiplicity divided by
// |S| (must divide exactly; anything else signals a model bug).
long long orbifold_multiplicity(const TriangleSignature& sig, long long lambda);

// Sieved sweep over 0..lambda_max; parallel and serial variants produce
// identical integer tables.
std::vector<long long> orbifold_multiplicities(const TriangleSignature& sig,
                                               long long lambda_max);
std::vector<long long> orbifold_multiplicities_serial(
    const TriangleSignature& sig, long long lambda_max);

// Index map M with psi_{m,n} o gamma = psi_{M(m,n)} for the generating
// rotation gamma of the quotient S.
struct DualRotationMap {
  long long m00 = 1, m01 = 0, m10 = 0, m11 = 1;
  long long order = 1;  // |S|; M^order = identity
  std::pair<long long, long long> apply(long long m, long long n) const {
    return {m00 * m + m01 * n, m10 * m + m11 * n};
  }
  DualRotationMap composed_with(const DualRotationMap& o) const {
    return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
            m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11, order};
  }
};

// Hexagonal gamma: (m,n) -> (m+n, -m); square gamma: (m,n) -> (n, -m);
// (3,3,3) uses the square of the hexagonal map.  Each is verified against
// rotated wavevectors before being returned.
DualRotationMap dual_rotation_map(const TriangleSignature& sig);

// det(M^i - I) for 1 <= i < |S|; any zero would admit a nonzero fixed lattice
// vector and break the zero-diagonal trace argument, so it throws.
struct FixedPointReport {
  std::vector<long long> determinants;
};
FixedPointReport verify_fixed_point_free(const TriangleSignature& sig);

// Orientation-preserving plane isometry z -> M z + t with M a rotation.
struct AffineIsometry {
  Eigen::Matrix2d M = Eigen::Matrix2d::Identity();
  Eigen::Vector2d t = Eigen::Vector2d::Zero();

  Eigen::Vector2d operator()(const Eigen::Vector2d& z) const { return M * z + t; }
  AffineIsometry operator*(const AffineIsometry& o) const {
    return {M * o.M, M * o.t + t};
  }
  AffineIsometry inverse() const {
    const Eigen::Matrix2d Mi = M.transpose();
    return {Mi, -(Mi * t)};
  }
  static AffineIsometry rotation(double angle, const Eigen::Vector2d& center);
  static AffineIsometry translation(const Eigen::Vector2d& v);
};

struct RelationCheck {
  std::string name;
  double deviation = 0.0;  // max of rotation-part and translation-part errors
};

struct GeneratorRealization {
  AffineIsometry alpha;
  AffineIsometry beta;
  std::vector<RelationCheck> checks;
};

// Concrete rotations realizing the presentation: gamma = alpha*beta rotates by
// 2pi/|S| about the origin and alpha's center is solved so the translation
// words reproduce the lattice model's tau and sigma.  Checks the presentation
// relations, both translation words, and the four conjugation identities of
// the family at 1e-9, throwing on the first failure (named).
GeneratorRealization realize_generators_affine(const TriangleSignature& sig);

// N(Lambda) = sum of orbifold multiplicities for lambda <= Lambda.
long long counting_euclidean(const TriangleSignature& sig, long long Lambda);

// Leading Weyl coefficient: pi/4 for (2,4,4), pi/(3 sqrt 3) for (2,3,6),
// 2 pi/(3 sqrt 3) for (3,3,3).
double euclidean_weyl_coefficient(const TriangleSignature& sig);

}  // namespace trispec
