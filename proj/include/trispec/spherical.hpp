#pragma once

#include <vector>

#include <Eigen/Dense>

#include "trispec/core.hpp"
#include "trispec/rational.hpp"

namespace trispec {

// One conjugacy-angle bucket: `turn` is the rotation angle as a fraction of a
// full turn (chi / 2pi), kept exact so chi = 0 needs no epsilon handling.
struct CensusEntry {
  Rational turn;
  long long count = 0;
  friend bool operator==(const CensusEntry&, const CensusEntry&) = default;
};

// Sorted by turn, turns distinct in [0, 1), counts summing to the group order.
using AngleCensus = std::vector<CensusEntry>;

AngleCensus angle_census(const TriangleSignature& sig);

// Trace of a rotation by angle 2*pi*turn on the degree-l eigenspace:
// sin((l + 1/2) chi) / sin(chi / 2), equal to 2l+1 at turn = 0.
double character_trace(long long l, const Rational& turn);

// Multiplicity as the averaged character sum over the census, with a 1e-6
// integrality gate.  Throws VerificationError when the gate fails.
long long multiplicity_charsum(const TriangleSignature& sig, long long l);

// Multiplicity from the closed forms, pure integer arithmetic:
//   (2,2,n): floor(l/n) + (1+(-1)^l)/2
//   (2,3,3): 2 floor(l/3) + (3+(-1)^l-2l)/4
//   (2,3,4): floor(l/3) + floor(l/4) + (3+(-1)^l-2l)/4
//   (2,3,5): floor(l/3) + floor(l/5) + (3+(-1)^l-2l)/4
long long multiplicity_closed(const TriangleSignature& sig, long long l);

// Dihedral multiplicity evaluated along the sawtooth simplification route,
// entirely in rational arithmetic:
//   (1/2n) (2l+1 + (-1)^l n - 2n ((l/n)) + C),  C = n-1 if n | l else -1.
// Throws VerificationError if the value fails to be an integer.
long long dihedral_multiplicity_sawtooth(long long n, long long l);

struct RotationGroupRealization {
  Eigen::Matrix3d A;  // rotation by 2pi/p about the z-axis
  Eigen::Matrix3d B;  // rotation by 2pi/q about a tilted axis in the xz-plane
  std::vector<Eigen::Matrix3d> elements;
};

// Realizes the image rotation group in SO(3) and closes it under
// multiplication.  Errors if closure exceeds twice the expected order or the
// presentation relations fail at 1e-9.
RotationGroupRealization generate_rotation_group(const TriangleSignature& sig);

// Recovers the angle census from explicit matrices: angle from the trace,
// orientation from the canonicalized rotation axis, snapped to a rational
// with denominator <= max_den.
AngleCensus census_from_matrices(const std::vector<Eigen::Matrix3d>& elements,
                                 long long max_den);

// N(L) = sum_{l<=L} multiplicity_closed, exact.
long long counting_spherical(const TriangleSignature& sig, long long L);

// Signed Weyl remainder numerators: N(L)*|Gamma| - (L+1)^2 for L = 0..L_max.
std::vector<long long> weyl_remainder_numerators(const TriangleSignature& sig,
                                                 long long L_max);

// Character-sum multiplicities for l = 0..l_max.  The parallel sweep and the
// serial reference share the per-l kernel, so their outputs are identical.
std::vector<long long> charsum_multiplicities(const TriangleSignature& sig,
                                              long long l_max);
std::vector<long long> charsum_multiplicities_serial(
    const TriangleSignature& sig, long long l_max);

}  // namespace trispec
