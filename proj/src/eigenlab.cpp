#include "trispec/eigenlab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <utility>

namespace trispec {

namespace {

constexpr double kPi = std::numbers::pi;

double legendre_positive(long long l, long long m, double x) {
  // Upward three-term recurrence in l for fixed m >= 0, seeded at P_m^m.
  double pmm = 1.0;
  const double s = std::sqrt(std::max(0.0, 1.0 - x * x));
  for (long long k = 1; k <= m; ++k) pmm *= double(2 * k - 1) * s;
  if (l == m) return pmm;
  double prev = pmm;
  double cur = x * double(2 * m + 1) * pmm;
  for (long long ll = m + 2; ll <= l; ++ll) {
    const double next =
        (x * double(2 * ll - 1) * cur - double(ll + m - 1) * prev) /
        double(ll - m);
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

double assoc_legendre(long long l, long long m, double x) {
  if (l < 0 || std::llabs(m) > l)
    throw std::domain_error("assoc_legendre requires 0 <= |m| <= l");
  if (m < 0) {
    const long long mm = -m;
    const double scale =
        (mm % 2 ? -1.0 : 1.0) *
        std::exp(std::lgamma(double(l - mm + 1)) - std::lgamma(double(l + mm + 1)));
    return scale * legendre_positive(l, mm, x);
  }
  return legendre_positive(l, m, x);
}

std::complex<double> sphere_basis_eval(long long l, long long m, double theta,
                                       double phi) {
  return std::polar(1.0, double(m) * phi) * assoc_legendre(l, m, std::cos(theta));
}

Eigen::VectorXcd sphere_basis_row_normalized(long long l, double theta,
                                             double phi) {
  Eigen::VectorXcd row(2 * l + 1);
  const double x = std::cos(theta);
  for (long long m = 0; m <= l; ++m) {
    // L2 normalization: sqrt((2l+1)/(4 pi) * (l-m)!/(l+m)!).
    const double k =
        std::sqrt(double(2 * l + 1) / (4.0 * kPi) *
                  std::exp(std::lgamma(double(l - m + 1)) -
                           std::lgamma(double(l + m + 1))));
    const std::complex<double> v =
        k * legendre_positive(l, m, x) * std::polar(1.0, double(m) * phi);
    row[l + m] = v;
    if (m > 0) row[l - m] = (m % 2 ? -1.0 : 1.0) * std::conj(v);
  }
  return row;
}

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw std::domain_error("need at least one node");
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    // Newton from the Chebyshev-like initial guess.
    double x = std::cos(kPi * (double(i) + 0.75) / (double(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 =
            (double(2 * k - 1) * x * p1 - double(k - 1) * p0) / double(k);
        p0 = p1;
        p1 = p2;
      }
      dp = double(n) * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-15) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  std::reverse(rule.nodes.begin(), rule.nodes.end());
  std::reverse(rule.weights.begin(), rule.weights.end());
  return rule;
}

namespace {

// Shared singular-value bookkeeping.  `scale_floor` stands in for the size a
// genuine singular value would have, so an all-noise spectrum still yields a
// conclusive rank 0.
ProjectionRankReport rank_from_singular_values(const Eigen::VectorXd& sv,
                                               double tol, double scale_floor) {
  ProjectionRankReport report;
  const double sigma_max = sv.size() ? sv(0) : 0.0;
  const double threshold = tol * std::max(sigma_max, scale_floor);
  long long rank = 0;
  while (rank < sv.size() && sv(rank) >= threshold) ++rank;
  report.basis_dimension = sv.size();
  report.rank = rank;
  report.sigma_retained_min = rank > 0 ? sv(rank - 1) : 0.0;
  report.sigma_discarded_max = rank < sv.size() ? sv(rank) : 0.0;
  if (report.sigma_discarded_max == 0.0) {
    report.gap_ratio = std::numeric_limits<double>::infinity();
  } else if (rank == 0) {
    report.gap_ratio = threshold / report.sigma_discarded_max;
  } else {
    report.gap_ratio = report.sigma_retained_min / report.sigma_discarded_max;
  }
  report.conclusive = report.gap_ratio >= 1e3;
  return report;
}

}  // namespace

ProjectionRankReport project_and_rank_sphere(const TriangleSignature& sig,
                                             long long l, long long samples,
                                             double tol,
                                             unsigned long long seed) {
  if (classify(sig) != GeometryClass::Spherical)
    throw std::domain_error("project_and_rank_sphere requires a spherical signature");
  if (l < 0 || l > 30) throw std::domain_error("supported degrees are 0 <= l <= 30");
  const long long dim = 2 * l + 1;
  if (samples < 4 * dim)
    throw std::domain_error("need at least 4*(2l+1) sample points");

  const RotationGroupRealization group = generate_rotation_group(sig);
  const double inv_order = 1.0 / double(group.elements.size());

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<Eigen::Vector3d> points(samples);
  for (auto& p : points) {
    const double z = 2.0 * unif(rng) - 1.0;
    const double phi = 2.0 * kPi * unif(rng);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    p = {r * std::cos(phi), r * std::sin(phi), z};
  }

  Eigen::MatrixXcd projected(samples, dim);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < samples; ++i) {
    Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(dim);
    for (const auto& g : group.elements) {
      const Eigen::Vector3d w = g * points[i];
      const double theta = std::acos(std::clamp(w.z(), -1.0, 1.0));
      const double phi = std::atan2(w.y(), w.x());
      acc += sphere_basis_row_normalized(l, theta, phi);
    }
    projected.row(i) = (inv_order * acc).transpose();
  }

  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(projected);
  ProjectionRankReport report = rank_from_singular_values(
      svd.singularValues(), tol, std::sqrt(double(samples)));
  report.eigenvalue = l * (l + 1);
  report.expected = multiplicity_closed(sig, l);
  report.seed = seed;
  return report;
}

ProjectionRankReport project_and_rank_torus(const TriangleSignature& sig,
                                            long long lambda, double tol) {
  if (classify(sig) != GeometryClass::Euclidean)
    throw std::domain_error("project_and_rank_torus requires a euclidean signature");
  if (lambda < 0) throw std::domain_error("lambda must be non-negative");
  const LatticeModel model = lattice_model(sig);
  const DualRotationMap map = dual_rotation_map(sig);

  std::vector<std::pair<long long, long long>> pairs;
  if (lambda == 0) {
    pairs.emplace_back(0, 0);
  } else {
    const long long bound = model.dual_form.enumeration_bound(lambda);
    for (long long m = -bound; m <= bound; ++m)
      for (long long n = -bound; n <= bound; ++n)
        if (model.dual_form(m, n) == lambda) pairs.emplace_back(m, n);
  }

  ProjectionRankReport report;
  report.eigenvalue = lambda;
  report.expected = orbifold_multiplicity(sig, lambda);
  if (pairs.empty()) {
    report.basis_dimension = 0;
    report.rank = 0;
    report.gap_ratio = std::numeric_limits<double>::infinity();
    report.conclusive = true;
    return report;
  }

  std::map<std::pair<long long, long long>, long long> index;
  for (size_t i = 0; i < pairs.size(); ++i)
    index[pairs[i]] = static_cast<long long>(i);

  const long long dim = static_cast<long long>(pairs.size());
  Eigen::MatrixXd projection = Eigen::MatrixXd::Zero(dim, dim);
  const double w = 1.0 / double(map.order);
  for (long long j = 0; j < dim; ++j) {
    std::pair<long long, long long> cur = pairs[j];
    for (long long step = 0; step < map.order; ++step) {
      const auto it = index.find(cur);
      if (it == index.end())
        throw VerificationError("dual rotation left the eigenvalue index set");
      projection(it->second, j) += w;
      cur = map.apply(cur.first, cur.second);
    }
    if (cur != pairs[j])
      throw VerificationError("dual rotation orbit failed to close");
  }

  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(projection);
  const Eigen::VectorXd sv = svd.singularValues();
  ProjectionRankReport ranked = rank_from_singular_values(sv, tol, 1.0);
  ranked.eigenvalue = report.eigenvalue;
  ranked.expected = report.expected;
  return ranked;
}

long long dihedral_legendre_multiplicity(long long n, long long l) {
  if (n < 2 || l < 0) throw std::domain_error("need n >= 2, l >= 0");
  // m = 0: P_l^0(cos theta) survives the equatorial flips only for even l.
  long long count = (l % 2 == 0) ? 1 : 0;
  for (long long m = n; m <= l; m += n) {
    // Exactly one of cos(m phi) P_l^m / sin(m phi) P_l^m is invariant,
    // decided by the parity of l + m; either way it adds one dimension.
    count += 1;
  }
  return count;
}

}  // namespace trispec
