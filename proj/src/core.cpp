#include "trispec/core.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace trispec {

const char* to_string(GeometryClass g) {
  switch (g) {
    case GeometryClass::Spherical: return "spherical";
    case GeometryClass::Euclidean: return "euclidean";
    case GeometryClass::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

TriangleSignature::TriangleSignature(int p, int q, int r) {
  std::array<int, 3> e{p, q, r};
  std::sort(e.begin(), e.end());
  if (e[2] == kUnboundedOrder) throw NonCocompactError{};
  if (e[0] < 2)
    throw std::domain_error("triangle signature entries must be >= 2, got " +
                            std::to_string(e[0]));
  p_ = e[0];
  q_ = e[1];
  r_ = e[2];
}

namespace {
using int128 = __int128;

// qr + pr + pq - pqr, the sign of 1/p + 1/q + 1/r - 1 times pqr.
int128 excess_numerator(const TriangleSignature& s) {
  int128 p = s.p(), q = s.q(), r = s.r();
  return q * r + p * r + p * q - p * q * r;
}
}  // namespace

GeometryClass classify(const TriangleSignature& sig) {
  int128 e = excess_numerator(sig);
  if (e > 0) return GeometryClass::Spherical;
  if (e == 0) return GeometryClass::Euclidean;
  return GeometryClass::Hyperbolic;
}

long long group_order(const TriangleSignature& sig) {
  int128 e = excess_numerator(sig);
  if (e <= 0)
    throw std::domain_error("group_order is defined for spherical signatures only");
  int128 num = int128(2) * sig.p() * sig.q() * sig.r();
  if (num % e != 0)
    throw VerificationError("group order 2pqr/(qr+pr+pq-pqr) is not an integer");
  return static_cast<long long>(num / e);
}

std::vector<TriangleSignature> signatures_with_geometry(GeometryClass g,
                                                        int max_entry) {
  std::vector<TriangleSignature> out;
  for (int p = 2; p <= max_entry; ++p)
    for (int q = p; q <= max_entry; ++q)
      for (int r = q; r <= max_entry; ++r) {
        TriangleSignature s(p, q, r);
        if (classify(s) == g) out.push_back(s);
      }
  return out;
}

Rational nearest_rational(double x, long long max_den) {
  if (max_den < 1) throw std::invalid_argument("max_den must be >= 1");
  // Walk the continued fraction of x, keeping the last convergent whose
  // denominator fits; check the best semiconvergent against it.
  long long p0 = 1, q0 = 0;  // h_{-1}/k_{-1}
  long long p1 = static_cast<long long>(std::floor(x)), q1 = 1;
  double frac = x - std::floor(x);
  for (int it = 0; it < 64 && frac > 1e-15; ++it) {
    double inv = 1.0 / frac;
    long long a = static_cast<long long>(std::floor(inv));
    frac = inv - std::floor(inv);
    if (a <= 0) break;
    long long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) {
      // Largest semiconvergent with denominator <= max_den.
      long long t = (max_den - q0) / q1;
      long long ps = t * p1 + p0, qs = t * q1 + q0;
      Rational best(p1, q1);
      if (qs >= 1 && std::abs(x - double(ps) / double(qs)) <
                         std::abs(x - double(p1) / double(q1)))
        best = Rational(ps, qs);
      return best;
    }
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
  }
  return Rational(p1, q1);
}

}  // namespace trispec
