#pragma once

#include <compare>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "trispec/rational.hpp"

namespace trispec {

// Sentinel for an unbounded generator order ("inf" on the command line).
inline constexpr int kUnboundedOrder = std::numeric_limits<int>::max();

// The group with an unbounded order is not co-compact; its quotient has
// continuous spectrum and is outside what this library computes.
struct NonCocompactError : std::domain_error {
  NonCocompactError()
      : std::domain_error("non-co-compact signature: an order is unbounded") {}
};

// Raised when a cross-check that must hold by construction fails
// (integrality gates, group closure, relation verification, ...).
struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class GeometryClass { Spherical, Euclidean, Hyperbolic };

const char* to_string(GeometryClass g);

// Orders (p,q,r) of the two generators and their product, stored sorted
// p <= q <= r. All orders are at least 2.
class TriangleSignature {
 public:
  TriangleSignature(int p, int q, int r);

  int p() const { return p_; }
  int q() const { return q_; }
  int r() const { return r_; }

  // p = q = 2: the dihedral family of order 2r.
  bool is_dihedral() const { return p_ == 2 && q_ == 2; }

  auto operator<=>(const TriangleSignature&) const = default;

 private:
  int p_, q_, r_;
};

// Sign of 1/p + 1/q + 1/r - 1, evaluated in integer arithmetic.
GeometryClass classify(const TriangleSignature& sig);

// Order of the spherical rotation group: 2 / (1/p + 1/q + 1/r - 1).
// Always an integer for spherical signatures; throws otherwise.
long long group_order(const TriangleSignature& sig);

// All signatures with entries <= max_entry falling in the given class.
std::vector<TriangleSignature> signatures_with_geometry(GeometryClass g,
                                                        int max_entry);

struct SpectrumEntry {
  long long lambda = 0;
  long long multiplicity = 0;
  std::optional<int> degree_l;  // spherical only: lambda = l(l+1)

  bool operator==(const SpectrumEntry&) const = default;
};

}  // namespace trispec
