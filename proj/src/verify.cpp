#include "trispec/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>

#include "trispec/euclidean.hpp"
#include "trispec/numtheory.hpp"
#include "trispec/output.hpp"
#include "trispec/spherical.hpp"

namespace trispec {

namespace {

constexpr double kPi = std::numbers::pi;

struct Checker {
  SuiteResult result;

  explicit Checker(std::string name) { result.name = std::move(name); }

  void check(bool ok, const std::string& what) {
    ++result.checks;
    if (ok) return;
    ++result.failures;
    if (result.failure_notes.size() < 20) result.failure_notes.push_back(what);
  }

  template <typename F>
  void guarded(const std::string& what, F&& body) {
    ++result.checks;
    try {
      body();
    } catch (const std::exception& e) {
      ++result.failures;
      if (result.failure_notes.size() < 20)
        result.failure_notes.push_back(what + ": " + e.what());
    }
  }
};

std::string sig_str(const TriangleSignature& sig) {
  return "(" + std::to_string(sig.p()) + "," + std::to_string(sig.q()) + "," +
         std::to_string(sig.r()) + ")";
}

std::vector<TriangleSignature> spherical_family(int n_max) {
  std::vector<TriangleSignature> sigs;
  for (int n = 2; n <= n_max; ++n) sigs.emplace_back(2, 2, n);
  sigs.emplace_back(2, 3, 3);
  sigs.emplace_back(2, 3, 4);
  sigs.emplace_back(2, 3, 5);
  return sigs;
}

const std::vector<TriangleSignature>& euclidean_family() {
  static const std::vector<TriangleSignature> sigs{
      {2, 3, 6}, {2, 4, 4}, {3, 3, 3}};
  return sigs;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

unsigned long long mix_seed(unsigned long long seed,
                            std::initializer_list<long long> parts) {
  unsigned long long h = seed;
  for (long long p : parts)
    h ^= static_cast<unsigned long long>(p) + 0x9e3779b97f4a7c15ull + (h << 6) +
         (h >> 2);
  return h;
}

SuiteResult run_charsum(const SuiteOptions& options) {
  Checker c("charsum");
  const long long l_max = options.max > 0 ? options.max : 2000;
  for (const auto& sig : spherical_family(60)) {
    const std::vector<long long> charsum = charsum_multiplicities(sig, l_max);
    for (long long l = 0; l <= l_max; ++l) {
      const long long closed = multiplicity_closed(sig, l);
      c.check(charsum[l] == closed,
              "charsum != closed form at " + sig_str(sig) + " l=" +
                  std::to_string(l));
      if (sig.is_dihedral())
        c.check(dihedral_multiplicity_sawtooth(sig.r(), l) == closed,
                "sawtooth route != closed form at " + sig_str(sig) + " l=" +
                    std::to_string(l));
      c.check(closed >= 0 && closed <= 2 * l + 1,
              "multiplicity out of [0, 2l+1] at " + sig_str(sig) + " l=" +
                  std::to_string(l));
    }
    c.check(multiplicity_closed(sig, 0) == 1,
            "constant function not counted once for " + sig_str(sig));
  }
  c.result.summary = "dihedral n <= 60 plus polyhedral groups, l <= " +
                     std::to_string(l_max);
  return c.result;
}

SuiteResult run_lattice(const SuiteOptions& options) {
  Checker c("lattice");
  const long long lambda_max = options.max > 0 ? options.max : 100000;

  for (const auto& sig : std::vector<TriangleSignature>{{2, 3, 6}, {2, 4, 4}}) {
    const LatticeModel model = lattice_model(sig);
    const std::vector<long long> reps =
        representation_counts(model.dual_form, lambda_max);
    const DivisorFormula& f = model.divisor_formula;
    const std::vector<long long> delta = divisor_delta_table(
        lambda_max, f.modulus, f.plus_residue, f.minus_residue);
    const char* name = model.kind == LatticeKind::Hexagonal ? "hex" : "square";
    c.check(reps[0] == 1, std::string(name) + ": representation count at 0");
    for (long long lam = 1; lam <= lambda_max; ++lam) {
      c.check(f.scale * delta[lam] == reps[lam],
              std::string(name) + ": divisor formula != lattice count at lambda=" +
                  std::to_string(lam));
    }
  }

  // Orbifold tables: exact divisibility is enforced inside the sweep; the
  // (3,3,3) spectrum must be the doubled (2,3,6) spectrum above lambda 0.
  const std::vector<long long> mu236 =
      orbifold_multiplicities({2, 3, 6}, lambda_max);
  const std::vector<long long> mu333 =
      orbifold_multiplicities({3, 3, 3}, lambda_max);
  const std::vector<long long> mu244 =
      orbifold_multiplicities({2, 4, 4}, lambda_max);
  for (long long lam = 1; lam <= lambda_max; ++lam)
    c.check(mu333[lam] == 2 * mu236[lam],
            "(3,3,3) multiplicity != doubled (2,3,6) at lambda=" +
                std::to_string(lam));
  c.check(mu236[0] == 1 && mu333[0] == 1 && mu244[0] == 1,
          "multiplicity at zero must be 1");

  // Hexagonal eigenvalue identity, exact in integers:
  // (sqrt3 m / 2)^2 + ((2n+m)/2)^2 = m^2 + mn + n^2.
  for (long long m = -50; m <= 50; ++m)
    for (long long n = -50; n <= 50; ++n)
      c.check(3 * m * m + (2 * n + m) * (2 * n + m) ==
                  4 * kHexForm(m, n),
              "hexagonal wavevector length identity failed");

  // Periodicity of the plane waves under tau and sigma.
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<long long> coeff(-1000, 1000);
  for (const auto& sig : euclidean_family()) {
    const LatticeModel model = lattice_model(sig);
    for (int trial = 0; trial < 1000; ++trial) {
      const long long m = coeff(rng), n = coeff(rng);
      const Eigen::Vector2d k = wavevector(model, m, n);
      const double a = k.dot(model.tau) / (2.0 * kPi);
      const double b = k.dot(model.sigma) / (2.0 * kPi);
      c.check(std::abs(a - std::llround(a)) < 1e-9 &&
                  std::abs(b - std::llround(b)) < 1e-9,
              sig_str(sig) + ": wavevector not periodic at (m,n)=(" +
                  std::to_string(m) + "," + std::to_string(n) + ")");
    }
  }

  c.result.summary = "both lattices, lambda <= " + std::to_string(lambda_max);
  return c.result;
}

SuiteResult run_eisenstein(const SuiteOptions& options) {
  Checker c("eisenstein");
  const long long l_max = options.max > 0 ? options.max : 10000;
  const long long n_max = 200;
  const ResidualMax worst = max_eisenstein_residual(l_max, n_max);
  c.result.checks = (n_max - 1) * (l_max + 1);
  if (!(worst.value < 1e-9)) {
    c.result.failures = 1;
    c.result.failure_notes.push_back(
        "sawtooth identity residual " + format_double(worst.value) + " at l=" +
        std::to_string(worst.l) + ", n=" + std::to_string(worst.n));
  }
  c.result.summary = "max residual " + format_double(worst.value) + " at l=" +
                     std::to_string(worst.l) + ", n=" +
                     std::to_string(worst.n) + " over l <= " +
                     std::to_string(l_max) + ", n <= " + std::to_string(n_max);
  return c.result;
}

SuiteResult run_relations(const SuiteOptions& options) {
  Checker c("relations");

  for (const auto& sig : euclidean_family()) {
    c.guarded(sig_str(sig) + ": affine generator realization", [&] {
      const GeneratorRealization real = realize_generators_affine(sig);
      for (const auto& check : real.checks)
        c.check(check.deviation < 1e-9,
                sig_str(sig) + ": " + check.name + " deviates by " +
                    format_double(check.deviation));
    });
    c.guarded(sig_str(sig) + ": fixed-point-freeness", [&] {
      const FixedPointReport report = verify_fixed_point_free(sig);
      for (size_t i = 0; i < report.determinants.size(); ++i)
        c.check(report.determinants[i] != 0,
                sig_str(sig) + ": det(M^" + std::to_string(i + 1) +
                    " - I) = 0");
    });
    c.guarded(sig_str(sig) + ": dual map order", [&] {
      const DualRotationMap map = dual_rotation_map(sig);
      DualRotationMap power = map;
      for (long long i = 1; i < map.order; ++i) power = power.composed_with(map);
      c.check(power.m00 == 1 && power.m01 == 0 && power.m10 == 0 &&
                  power.m11 == 1,
              sig_str(sig) + ": M^|S| != identity");
    });
  }

  const long long n_cap = options.max > 0 ? std::min<long long>(options.max, 200)
                                          : 200;
  std::vector<TriangleSignature> sigs{{2, 3, 3}, {2, 3, 4}, {2, 3, 5}};
  for (long long n : {2, 3, 4, 6, 12, 60, 120, 200})
    if (n <= n_cap) sigs.emplace_back(2, 2, int(n));
  for (const auto& sig : sigs) {
    c.guarded(sig_str(sig) + ": rotation group generation", [&] {
      const RotationGroupRealization group = generate_rotation_group(sig);
      c.check(static_cast<long long>(group.elements.size()) == group_order(sig),
              sig_str(sig) + ": wrong element count");
      c.check(census_from_matrices(group.elements, sig.r()) ==
                  angle_census(sig),
              sig_str(sig) + ": matrix census != formula census");
    });
  }

  c.result.summary = "affine relation checks plus rotation groups up to n = " +
                     std::to_string(n_cap);
  return c.result;
}

SuiteResult run_weyl(const SuiteOptions& options) {
  Checker c("weyl");
  const long long L_sweep = 5000, L_early = 200;
  for (const auto& sig : spherical_family(60)) {
    const long long order = group_order(sig);
    const std::vector<long long> nums = weyl_remainder_numerators(sig, L_sweep);
    long long max_all = 0, max_early = 0;
    for (long long L = 0; L <= L_sweep; ++L) {
      const long long a = std::llabs(nums[L]);
      max_all = std::max(max_all, a);
      if (L <= L_early) max_early = std::max(max_early, a);
    }
    // Remainder max over the full sweep must already be attained by L <= 200,
    // within a slack of +1 in remainder units (i.e. +order in numerators).
    c.check(max_all <= max_early + order,
            sig_str(sig) + ": counting remainder still growing past L=200 (" +
                std::to_string(max_all) + " vs " + std::to_string(max_early) +
                " numerator units)");
  }

  // The 1% leading-term bound is an asymptotic statement; below Lambda ~ 2000
  // the bounded remainder alone exceeds it, so the sub-check has a floor.
  const long long lambda_max =
      std::max<long long>(options.max > 0 ? options.max : 100000, 2000);
  for (const auto& sig : euclidean_family()) {
    const long long n = counting_euclidean(sig, lambda_max);
    const double c0 = euclidean_weyl_coefficient(sig);
    const double ratio = double(n) / double(lambda_max);
    c.check(std::abs(ratio - c0) < 0.01,
            sig_str(sig) + ": N(Lambda)/Lambda = " + format_double(ratio) +
                " vs leading coefficient " + format_double(c0));
  }
  c.result.summary =
      "spherical remainders to L=5000; euclidean leading terms at Lambda=" +
      std::to_string(lambda_max);
  return c.result;
}

// Group-averaging applied once vs twice on sampled basis rows; the group is
// closed, so the two must agree to rounding error.
bool idempotence_ok(const TriangleSignature& sig, long long l,
                    unsigned long long seed) {
  const RotationGroupRealization group = generate_rotation_group(sig);
  const long long dim = 2 * l + 1;
  const long long samples = 4 * dim;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  Eigen::MatrixXcd once = Eigen::MatrixXcd::Zero(samples, dim);
  Eigen::MatrixXcd twice = Eigen::MatrixXcd::Zero(samples, dim);
  const double inv = 1.0 / double(group.elements.size());
  for (long long i = 0; i < samples; ++i) {
    const double z = 2.0 * unif(rng) - 1.0;
    const double phi = 2.0 * kPi * unif(rng);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const Eigen::Vector3d point(r * std::cos(phi), r * std::sin(phi), z);
    for (const auto& g : group.elements) {
      const Eigen::Vector3d w = g * point;
      const double theta = std::acos(std::clamp(w.z(), -1.0, 1.0));
      const double az = std::atan2(w.y(), w.x());
      once.row(i) += inv * sphere_basis_row_normalized(l, theta, az).transpose();
      for (const auto& h : group.elements) {
        const Eigen::Vector3d u = h * w;
        const double theta2 = std::acos(std::clamp(u.z(), -1.0, 1.0));
        const double az2 = std::atan2(u.y(), u.x());
        twice.row(i) +=
            inv * inv * sphere_basis_row_normalized(l, theta2, az2).transpose();
      }
    }
  }
  return (twice - once).norm() <= 1e-8 * std::max(1.0, once.norm());
}

SuiteResult run_eigenlab(const SuiteOptions& options) {
  Checker c("eigenlab");
  const long long l_cap = options.max > 0 ? std::min<long long>(options.max, 30)
                                          : 20;

  for (const auto& sig : spherical_family(12)) {
    for (long long l = 0; l <= l_cap; ++l) {
      const unsigned long long seed =
          mix_seed(options.seed, {sig.p(), sig.q(), sig.r(), l});
      c.guarded(sig_str(sig) + ": sphere rank at l=" + std::to_string(l), [&] {
        const ProjectionRankReport report =
            project_and_rank_sphere(sig, l, 4 * (2 * l + 1), 1e-8, seed);
        c.check(report.conclusive,
                sig_str(sig) + ": inconclusive rank at l=" + std::to_string(l) +
                    " (gap " + format_double(report.gap_ratio) + ")");
        c.check(report.rank == report.expected,
                sig_str(sig) + ": rank " + std::to_string(report.rank) +
                    " != multiplicity " + std::to_string(report.expected) +
                    " at l=" + std::to_string(l));
      });
    }
  }

  for (const auto& sig : euclidean_family()) {
    for (long long lam = 0; lam <= 200; ++lam) {
      c.guarded(sig_str(sig) + ": torus rank at lambda=" + std::to_string(lam),
                [&] {
                  const ProjectionRankReport report =
                      project_and_rank_torus(sig, lam);
                  c.check(report.conclusive && report.rank == report.expected,
                          sig_str(sig) + ": torus rank " +
                              std::to_string(report.rank) + " != multiplicity " +
                              std::to_string(report.expected) + " at lambda=" +
                              std::to_string(lam));
                });
    }
  }

  for (long long n = 2; n <= 30; ++n)
    for (long long l = 0; l <= 500; ++l)
      c.check(dihedral_legendre_multiplicity(n, l) ==
                  multiplicity_closed({2, 2, int(n)}, l),
              "invariant Legendre count != closed form at n=" +
                  std::to_string(n) + ", l=" + std::to_string(l));

  for (const auto& [sig, l] :
       std::vector<std::pair<TriangleSignature, long long>>{{{2, 2, 4}, 4},
                                                            {{2, 3, 4}, 6}}) {
    c.check(idempotence_ok(sig, l, mix_seed(options.seed, {99, l})),
            sig_str(sig) + ": averaging operator not idempotent at l=" +
                std::to_string(l));
  }

  c.result.summary = "sphere ranks to l <= " + std::to_string(l_cap) +
                     " (dihedral n <= 12), torus ranks to lambda <= 200, seed " +
                     std::to_string(options.seed);
  return c.result;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "charsum", "lattice", "eisenstein", "relations", "weyl", "eigenlab"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "charsum") return run_charsum(options);
  if (name == "lattice") return run_lattice(options);
  if (name == "eisenstein") return run_eisenstein(options);
  if (name == "relations") return run_relations(options);
  if (name == "weyl") return run_weyl(options);
  if (name == "eigenlab") return run_eigenlab(options);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace trispec
