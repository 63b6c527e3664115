#include "trispec/spherical.hpp"

#include "trispec/numtheory.hpp"

#include <cmath>
#include <deque>
#include <exception>
#include <map>
#include <numbers>
#include <string>

namespace trispec {

namespace {

constexpr double kPi = std::numbers::pi;

AngleCensus census_from_map(const std::map<Rational, long long>& buckets) {
  AngleCensus census;
  census.reserve(buckets.size());
  for (const auto& [turn, count] : buckets) census.push_back({turn, count});
  return census;
}

}  // namespace

AngleCensus angle_census(const TriangleSignature& sig) {
  if (classify(sig) != GeometryClass::Spherical)
    throw std::domain_error("angle_census requires a spherical signature");
  std::map<Rational, long long> buckets;
  buckets[Rational(0)] = 1;
  if (sig.is_dihedral()) {
    const long long n = sig.r();
    // One rotation per nontrivial power of the order-n element (the s = n/2
    // power lands at angle pi and merges with the n order-two elements).
    for (long long s = 1; s < n; ++s) buckets[Rational(s, n)] += 1;
    buckets[Rational(1, 2)] += n;
  } else if (sig.r() == 3) {
    buckets[Rational(1, 2)] = 3;
    buckets[Rational(1, 3)] = 4;
    buckets[Rational(2, 3)] = 4;
  } else if (sig.r() == 4) {
    buckets[Rational(1, 2)] = 9;  // 6 edge + 3 face axes
    buckets[Rational(1, 3)] = 4;
    buckets[Rational(2, 3)] = 4;
    buckets[Rational(1, 4)] = 3;
    buckets[Rational(3, 4)] = 3;
  } else {
    buckets[Rational(1, 2)] = 15;
    buckets[Rational(1, 3)] = 10;
    buckets[Rational(2, 3)] = 10;
    for (long long s = 1; s <= 4; ++s) buckets[Rational(s, 5)] = 6;
  }
  AngleCensus census = census_from_map(buckets);
  long long total = 0;
  for (const auto& e : census) total += e.count;
  if (total != group_order(sig))
    throw VerificationError("angle census counts do not sum to the group order");
  return census;
}

double character_trace(long long l, const Rational& turn) {
  if (turn.numerator() == 0) return double(2 * l + 1);
  const double t = to_double(turn);
  return std::sin(double(2 * l + 1) * kPi * t) / std::sin(kPi * t);
}

namespace {

long long charsum_from_census(const AngleCensus& census, long long order,
                              long long l) {
  double sum = 0.0;
  for (const auto& e : census)
    sum += double(e.count) * character_trace(l, e.turn);
  const double mu = sum / double(order);
  const long long rounded = std::llround(mu);
  if (std::abs(mu - double(rounded)) > 1e-6)
    throw VerificationError("character sum failed the 1e-6 integrality gate at l=" +
                            std::to_string(l));
  if (rounded < 0)
    throw VerificationError("character sum produced a negative multiplicity");
  return rounded;
}

}  // namespace

long long multiplicity_charsum(const TriangleSignature& sig, long long l) {
  return charsum_from_census(angle_census(sig), group_order(sig), l);
}

long long multiplicity_closed(const TriangleSignature& sig, long long l) {
  if (classify(sig) != GeometryClass::Spherical)
    throw std::domain_error("multiplicity_closed requires a spherical signature");
  if (l < 0) throw std::domain_error("degree must be non-negative");
  // (3 + (-1)^l - 2l)/4 is (2-l)/2 for even l and (1-l)/2 for odd l; both
  // divisions are exact.
  const long long base = (l % 2 == 0) ? (2 - l) / 2 : (1 - l) / 2;
  if (sig.is_dihedral()) return l / sig.r() + (l % 2 == 0 ? 1 : 0);
  if (sig.r() == 3) return 2 * (l / 3) + base;
  if (sig.r() == 4) return l / 3 + l / 4 + base;
  return l / 3 + l / 5 + base;
}

long long dihedral_multiplicity_sawtooth(long long n, long long l) {
  if (n < 2 || l < 0) throw std::domain_error("need n >= 2, l >= 0");
  const long long sign = (l % 2 == 0) ? 1 : -1;
  const long long c = (l % n == 0) ? n - 1 : -1;
  const Rational mu =
      Rational(2 * l + 1 + sign * n + c, 2 * n) - sawtooth(Rational(l, n));
  if (!is_integer(mu))
    throw VerificationError("sawtooth route gave a non-integer multiplicity");
  return mu.numerator();
}

namespace {

Eigen::Matrix3d rotation_about(const Eigen::Vector3d& axis, double angle) {
  return Eigen::AngleAxisd(angle, axis.normalized()).toRotationMatrix();
}

bool matrices_equal(const Eigen::Matrix3d& a, const Eigen::Matrix3d& b,
                    double tol) {
  return (a - b).cwiseAbs().maxCoeff() < tol;
}

Eigen::Matrix3d matrix_power(const Eigen::Matrix3d& m, long long k) {
  Eigen::Matrix3d out = Eigen::Matrix3d::Identity();
  for (long long i = 0; i < k; ++i) out = out * m;
  return out;
}

}  // namespace

RotationGroupRealization generate_rotation_group(const TriangleSignature& sig) {
  if (classify(sig) != GeometryClass::Spherical)
    throw std::domain_error("generate_rotation_group requires a spherical signature");
  if (sig.is_dihedral() && sig.r() > 200)
    throw std::domain_error("dihedral realization supported for n <= 200");
  const double ap = kPi / double(sig.p());
  const double aq = kPi / double(sig.q());
  const double ar = kPi / double(sig.r());
  // Half-angle composition condition: the product of the two generator
  // rotations is a rotation by 2pi/r exactly when the axes meet at theta with
  // cos(pi/r) = cos(pi/p)cos(pi/q) + sin(pi/p)sin(pi/q)cos(theta).
  const double ct = (std::cos(ar) - std::cos(ap) * std::cos(aq)) /
                    (std::sin(ap) * std::sin(aq));
  if (std::abs(ct) > 1.0)
    throw VerificationError("generator axis angle is not realizable");
  const double st = std::sqrt(1.0 - ct * ct);

  RotationGroupRealization out;
  out.A = rotation_about(Eigen::Vector3d::UnitZ(), 2.0 * kPi / double(sig.p()));
  out.B = rotation_about(Eigen::Vector3d(st, 0.0, ct), 2.0 * kPi / double(sig.q()));

  const long long order = group_order(sig);
  const double dedup_tol = 1e-6;  // distinct elements differ by >= ~1e-2 entrywise
  out.elements.push_back(Eigen::Matrix3d::Identity());
  std::deque<Eigen::Matrix3d> frontier{Eigen::Matrix3d::Identity()};
  while (!frontier.empty()) {
    const Eigen::Matrix3d m = frontier.front();
    frontier.pop_front();
    for (const Eigen::Matrix3d* g : {&out.A, &out.B}) {
      const Eigen::Matrix3d next = m * (*g);
      bool known = false;
      for (const auto& e : out.elements)
        if (matrices_equal(next, e, dedup_tol)) {
          known = true;
          break;
        }
      if (known) continue;
      out.elements.push_back(next);
      frontier.push_back(next);
      if (static_cast<long long>(out.elements.size()) > 2 * order)
        throw VerificationError("group closure exceeded twice the expected order");
    }
  }
  if (static_cast<long long>(out.elements.size()) != order)
    throw VerificationError("group closure size " +
                            std::to_string(out.elements.size()) +
                            " != expected order " + std::to_string(order));

  const Eigen::Matrix3d id = Eigen::Matrix3d::Identity();
  if (!matrices_equal(matrix_power(out.A, sig.p()), id, 1e-9) ||
      !matrices_equal(matrix_power(out.B, sig.q()), id, 1e-9) ||
      !matrices_equal(matrix_power(out.A * out.B, sig.r()), id, 1e-9))
    throw VerificationError("presentation relations failed at 1e-9");
  return out;
}

AngleCensus census_from_matrices(const std::vector<Eigen::Matrix3d>& elements,
                                 long long max_den) {
  std::map<Rational, long long> buckets;
  for (const auto& m : elements) {
    const double tr = m.trace();
    Rational turn;
    if (std::abs(tr - 3.0) < 1e-9) {
      turn = Rational(0);
    } else if (std::abs(tr + 1.0) < 1e-9) {
      turn = Rational(1, 2);
    } else {
      // (R - R^T)/2 has vee-vector sin(theta) * axis; orient the axis so its
      // first significant component is positive, making the signed angle (and
      // hence the turn in (0,1)) well defined.
      const Eigen::Vector3d v(0.5 * (m(2, 1) - m(1, 2)),
                              0.5 * (m(0, 2) - m(2, 0)),
                              0.5 * (m(1, 0) - m(0, 1)));
      const double base = std::atan2(v.norm(), 0.5 * (tr - 1.0));
      bool positive = true;
      for (int i = 0; i < 3; ++i) {
        if (std::abs(v[i]) > 1e-6) {
          positive = v[i] > 0.0;
          break;
        }
      }
      const double t = positive ? base / (2.0 * kPi) : 1.0 - base / (2.0 * kPi);
      turn = nearest_rational(t, max_den);
      if (std::abs(to_double(turn) - t) > 1e-6)
        throw VerificationError("rotation angle did not snap to a rational turn");
    }
    buckets[turn] += 1;
  }
  return census_from_map(buckets);
}

long long counting_spherical(const TriangleSignature& sig, long long L) {
  if (L < 0) throw std::domain_error("L must be non-negative");
  long long sum = 0;
  for (long long l = 0; l <= L; ++l) sum += multiplicity_closed(sig, l);
  return sum;
}

std::vector<long long> weyl_remainder_numerators(const TriangleSignature& sig,
                                                 long long L_max) {
  const long long order = group_order(sig);
  std::vector<long long> out(L_max + 1);
  long long n = 0;
  for (long long L = 0; L <= L_max; ++L) {
    n += multiplicity_closed(sig, L);
    out[L] = n * order - (L + 1) * (L + 1);
  }
  return out;
}

std::vector<long long> charsum_multiplicities_serial(
    const TriangleSignature& sig, long long l_max) {
  const AngleCensus census = angle_census(sig);
  const long long order = group_order(sig);
  std::vector<long long> out(l_max + 1);
  for (long long l = 0; l <= l_max; ++l)
    out[l] = charsum_from_census(census, order, l);
  return out;
}

std::vector<long long> charsum_multiplicities(const TriangleSignature& sig,
                                              long long l_max) {
  const AngleCensus census = angle_census(sig);
  const long long order = group_order(sig);
  std::vector<long long> out(l_max + 1);
  // Exceptions must not cross the parallel region; capture and rethrow.
  std::exception_ptr failure = nullptr;
#pragma omp parallel for schedule(static)
  for (long long l = 0; l <= l_max; ++l) {
    try {
      out[l] = charsum_from_census(census, order, l);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace trispec
