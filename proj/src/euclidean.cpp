#include "trispec/euclidean.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace trispec {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt3 = std::sqrt(3.0);

void require_euclidean(const TriangleSignature& sig, const char* who) {
  if (classify(sig) != GeometryClass::Euclidean)
    throw std::domain_error(std::string(who) + " requires a euclidean signature");
}

}  // namespace

LatticeModel lattice_model(const TriangleSignature& sig) {
  require_euclidean(sig, "lattice_model");
  LatticeModel model;
  if (sig.p() == 2 && sig.q() == 4) {
    model.kind = LatticeKind::Square;
    model.tau = {2.0 * kPi, 0.0};
    model.sigma = {0.0, 2.0 * kPi};
    model.dual_form = kSquareForm;
    model.quotient_order = 4;
    model.divisor_formula = {4, 4, 1, 3};
  } else {
    // (2,3,6) and (3,3,3) share the hexagonal translation lattice; only the
    // quotient order differs.
    model.kind = LatticeKind::Hexagonal;
    model.tau = {4.0 * kPi / kSqrt3, 0.0};
    model.sigma = {2.0 * kPi / kSqrt3, 2.0 * kPi};
    model.dual_form = kHexForm;
    model.quotient_order = sig.p() == 2 ? 6 : 3;
    model.divisor_formula = {6, 3, 1, 2};
  }
  return model;
}

Eigen::Vector2d wavevector(const LatticeModel& model, long long m, long long n) {
  if (model.kind == LatticeKind::Hexagonal)
    return {kSqrt3 * double(m) / 2.0, double(2 * n + m) / 2.0};
  return {double(m), double(n)};
}

long long torus_multiplicity(const LatticeModel& model, long long lambda) {
  if (lambda < 0) throw std::domain_error("lambda must be non-negative");
  if (lambda == 0) return 1;
  const DivisorFormula& f = model.divisor_formula;
  const long long mu =
      f.scale * (divisor_count_mod(lambda, f.plus_residue, f.modulus) -
                 divisor_count_mod(lambda, f.minus_residue, f.modulus));
  if (mu < 0)
    throw VerificationError("negative torus multiplicity signals a model bug");
  return mu;
}

namespace {

long long orbifold_from_torus(long long torus_mu, long long quotient_order,
                              long long lambda) {
  if (torus_mu < 0 || torus_mu % quotient_order != 0)
    throw VerificationError(
        "torus multiplicity " + std::to_string(torus_mu) +
        " not divisible by the quotient order at lambda=" + std::to_string(lambda));
  return torus_mu / quotient_order;
}

}  // namespace

long long orbifold_multiplicity(const TriangleSignature& sig, long long lambda) {
  const LatticeModel model = lattice_model(sig);
  if (lambda == 0) return 1;
  return orbifold_from_torus(torus_multiplicity(model, lambda),
                             model.quotient_order, lambda);
}

namespace {

template <typename DeltaTable>
std::vector<long long> orbifold_sweep(const TriangleSignature& sig,
                                      long long lambda_max, DeltaTable table) {
  const LatticeModel model = lattice_model(sig);
  const DivisorFormula& f = model.divisor_formula;
  const std::vector<long long> delta =
      table(lambda_max, f.modulus, f.plus_residue, f.minus_residue);
  std::vector<long long> out(lambda_max + 1);
  out[0] = 1;
  for (long long lam = 1; lam <= lambda_max; ++lam)
    out[lam] =
        orbifold_from_torus(f.scale * delta[lam], model.quotient_order, lam);
  return out;
}

}  // namespace

std::vector<long long> orbifold_multiplicities(const TriangleSignature& sig,
                                               long long lambda_max) {
  return orbifold_sweep(sig, lambda_max, divisor_delta_table);
}

std::vector<long long> orbifold_multiplicities_serial(
    const TriangleSignature& sig, long long lambda_max) {
  return orbifold_sweep(sig, lambda_max, divisor_delta_table_serial);
}

DualRotationMap dual_rotation_map(const TriangleSignature& sig) {
  require_euclidean(sig, "dual_rotation_map");
  const LatticeModel model = lattice_model(sig);
  DualRotationMap map;
  if (model.kind == LatticeKind::Square) {
    map = {0, 1, -1, 0, 4};  // (m,n) -> (n, -m)
  } else {
    DualRotationMap hex{1, 1, -1, 0, 6};  // (m,n) -> (m+n, -m)
    map = sig.p() == 2 ? hex : hex.composed_with(hex);
    map.order = model.quotient_order;
  }
  // The basis permutation psi_{m,n} o gamma = psi_{M(m,n)} pulls wavevectors
  // back by the rotation: k_{M(m,n)} = R(2pi/|S|)^T k_{m,n}.
  const double angle = 2.0 * kPi / double(model.quotient_order);
  const Eigen::Matrix2d rt =
      Eigen::Rotation2Dd(angle).toRotationMatrix().transpose();
  for (long long m = -10; m <= 10; ++m)
    for (long long n = -10; n <= 10; ++n) {
      const auto [mm, nn] = map.apply(m, n);
      const Eigen::Vector2d expect = rt * wavevector(model, m, n);
      if ((wavevector(model, mm, nn) - expect).cwiseAbs().maxCoeff() > 1e-9)
        throw VerificationError("dual rotation map disagrees with rotated wavevectors");
    }
  return map;
}

FixedPointReport verify_fixed_point_free(const TriangleSignature& sig) {
  const DualRotationMap map = dual_rotation_map(sig);
  FixedPointReport report;
  DualRotationMap power = map;
  for (long long i = 1; i < map.order; ++i) {
    const long long det =
        (power.m00 - 1) * (power.m11 - 1) - power.m01 * power.m10;
    report.determinants.push_back(det);
    if (det == 0)
      throw VerificationError("M^" + std::to_string(i) +
                              " has a nonzero fixed lattice vector");
    power = power.composed_with(map);
  }
  return report;
}

AffineIsometry AffineIsometry::rotation(double angle,
                                        const Eigen::Vector2d& center) {
  const Eigen::Matrix2d m = Eigen::Rotation2Dd(angle).toRotationMatrix();
  return {m, center - m * center};
}

AffineIsometry AffineIsometry::translation(const Eigen::Vector2d& v) {
  return {Eigen::Matrix2d::Identity(), v};
}

namespace {

double affine_deviation(const AffineIsometry& a, const AffineIsometry& b) {
  return std::max((a.M - b.M).cwiseAbs().maxCoeff(),
                  (a.t - b.t).cwiseAbs().maxCoeff());
}

struct WordContext {
  AffineIsometry alpha, beta;

  AffineIsometry eval(const std::string& word) const {
    // Letters read as written: leftmost factor outermost (applied last).
    AffineIsometry out;
    for (char c : word) {
      switch (c) {
        case 'a': out = out * alpha; break;
        case 'b': out = out * beta; break;
        case 'A': out = out * alpha.inverse(); break;
        case 'B': out = out * beta.inverse(); break;
        default: throw std::logic_error("bad word letter");
      }
    }
    return out;
  }
};

}  // namespace

GeneratorRealization realize_generators_affine(const TriangleSignature& sig) {
  require_euclidean(sig, "realize_generators_affine");
  const LatticeModel model = lattice_model(sig);

  GeneratorRealization real;
  std::string tau_word, sigma_word;
  // alpha's center is solved from the requirement that the tau word equal the
  // model's tau translation; beta := alpha^{-1} gamma and its order is then
  // checked rather than imposed.
  if (sig.p() == 2 && sig.q() == 3) {
    // gamma = R(-pi/3) at the origin; tau = (ab)^3 a is the point-reflection
    // pair z -> z - 2c, so c = -tau/2.
    real.alpha = AffineIsometry::rotation(kPi, -model.tau / 2.0);
    const AffineIsometry gamma =
        AffineIsometry::rotation(-kPi / 3.0, {0.0, 0.0});
    real.beta = real.alpha.inverse() * gamma;
    tau_word = "abababa";
    sigma_word = "ababb";
  } else if (sig.p() == 2) {
    // gamma = R(-pi/2) at the origin; tau = b^2 a translates by -2 R c with
    // R = gamma's rotation part, so c = R^{-1}(-tau/2) = (0, -pi).
    real.alpha = AffineIsometry::rotation(kPi, {0.0, -kPi});
    const AffineIsometry gamma =
        AffineIsometry::rotation(-kPi / 2.0, {0.0, 0.0});
    real.beta = real.alpha.inverse() * gamma;
    tau_word = "bba";
    sigma_word = "ababa";
  } else {
    // (3,3,3): gamma = R(-2pi/3) at the origin, alpha = R(+2pi/3) about the
    // center solving (G - I) c = tau, which also yields (G^2 - I) c = sigma.
    const Eigen::Matrix2d g =
        Eigen::Rotation2Dd(2.0 * kPi / 3.0).toRotationMatrix();
    const Eigen::Vector2d center =
        (g - Eigen::Matrix2d::Identity()).inverse() * model.tau;
    real.alpha = AffineIsometry::rotation(2.0 * kPi / 3.0, center);
    const AffineIsometry gamma =
        AffineIsometry::rotation(-2.0 * kPi / 3.0, {0.0, 0.0});
    real.beta = real.alpha.inverse() * gamma;
    tau_word = "bba";
    sigma_word = "aba";
  }

  const WordContext ctx{real.alpha, real.beta};
  const AffineIsometry tau = AffineIsometry::translation(model.tau);
  const AffineIsometry sigma = AffineIsometry::translation(model.sigma);
  const AffineIsometry id;

  auto power = [](const AffineIsometry& g, long long k) {
    AffineIsometry out;
    for (long long i = 0; i < k; ++i) out = out * g;
    return out;
  };

  std::vector<std::pair<std::string, std::pair<AffineIsometry, AffineIsometry>>>
      relations;
  relations.emplace_back("alpha^p = e",
                         std::pair{power(real.alpha, sig.p()), id});
  relations.emplace_back("beta^q = e", std::pair{power(real.beta, sig.q()), id});
  relations.emplace_back(
      "(alpha beta)^r = e",
      std::pair{power(real.alpha * real.beta, sig.r()), id});
  relations.emplace_back("tau word = tau", std::pair{ctx.eval(tau_word), tau});
  relations.emplace_back("sigma word = sigma",
                         std::pair{ctx.eval(sigma_word), sigma});

  const AffineIsometry tau_inv = tau.inverse();
  const AffineIsometry sigma_inv = sigma.inverse();
  auto conj = [&](const AffineIsometry& g, const AffineIsometry& h) {
    return g * h * g.inverse();
  };
  if (sig.p() == 2 && sig.q() == 3) {
    relations.emplace_back("alpha tau alpha^-1 = tau^-1",
                           std::pair{conj(real.alpha, tau), tau_inv});
    relations.emplace_back("beta tau beta^-1 = tau^-1 sigma",
                           std::pair{conj(real.beta, tau), tau_inv * sigma});
    relations.emplace_back("alpha sigma alpha^-1 = sigma^-1",
                           std::pair{conj(real.alpha, sigma), sigma_inv});
    relations.emplace_back("beta sigma beta^-1 = tau^-1",
                           std::pair{conj(real.beta, sigma), tau_inv});
  } else if (sig.p() == 2) {
    relations.emplace_back("alpha tau alpha^-1 = tau^-1",
                           std::pair{conj(real.alpha, tau), tau_inv});
    relations.emplace_back("beta tau beta^-1 = sigma",
                           std::pair{conj(real.beta, tau), sigma});
    relations.emplace_back("alpha sigma alpha^-1 = sigma^-1",
                           std::pair{conj(real.alpha, sigma), sigma_inv});
    relations.emplace_back("beta sigma beta^-1 = tau^-1",
                           std::pair{conj(real.beta, sigma), tau_inv});
  } else {
    relations.emplace_back("alpha tau alpha^-1 = tau^-1 sigma",
                           std::pair{conj(real.alpha, tau), tau_inv * sigma});
    relations.emplace_back("beta tau beta^-1 = tau^-1 sigma",
                           std::pair{conj(real.beta, tau), tau_inv * sigma});
    relations.emplace_back("alpha sigma alpha^-1 = tau^-1",
                           std::pair{conj(real.alpha, sigma), tau_inv});
    relations.emplace_back("beta sigma beta^-1 = tau^-1",
                           std::pair{conj(real.beta, sigma), tau_inv});
  }

  for (const auto& [name, pair] : relations) {
    const double dev = affine_deviation(pair.first, pair.second);
    real.checks.push_back({name, dev});
    if (!(dev < 1e-9))
      throw VerificationError("relation failed: " + name);
  }
  return real;
}

long long counting_euclidean(const TriangleSignature& sig, long long Lambda) {
  if (Lambda < 0) throw std::domain_error("Lambda must be non-negative");
  const std::vector<long long> mu = orbifold_multiplicities_serial(sig, Lambda);
  long long sum = 0;
  for (long long v : mu) sum += v;
  return sum;
}

double euclidean_weyl_coefficient(const TriangleSignature& sig) {
  require_euclidean(sig, "euclidean_weyl_coefficient");
  const LatticeModel model = lattice_model(sig);
  if (model.kind == LatticeKind::Square) return kPi / 4.0;
  return 2.0 * kPi / (kSqrt3 * double(model.quotient_order));
}

}  // namespace trispec
