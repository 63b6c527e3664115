#include "doctest.h"

#include <cmath>
#include <random>
#include <utility>

#include "trispec/euclidean.hpp"
#include "trispec/numtheory.hpp"

using namespace trispec;

TEST_CASE("lattice models") {
  const auto sq = lattice_model(TriangleSignature(2, 4, 4));
  CHECK(sq.kind == LatticeKind::Square);
  CHECK(sq.dual_form.a == 1);
  CHECK(sq.dual_form.b == 0);
  CHECK(sq.dual_form.c == 1);
  CHECK(sq.quotient_order == 4);
  CHECK(sq.divisor_formula.scale == 4);
  CHECK(sq.divisor_formula.modulus == 4);
  CHECK(sq.divisor_formula.plus_residue == 1);
  CHECK(sq.divisor_formula.minus_residue == 3);
  CHECK(sq.tau.x() == doctest::Approx(2 * M_PI));
  CHECK(sq.sigma.y() == doctest::Approx(2 * M_PI));

  const auto hex = lattice_model(TriangleSignature(2, 3, 6));
  CHECK(hex.kind == LatticeKind::Hexagonal);
  CHECK(hex.dual_form.b == 1);
  CHECK(hex.quotient_order == 6);
  CHECK(hex.divisor_formula.scale == 6);
  CHECK(hex.divisor_formula.modulus == 3);
  CHECK(hex.tau.x() == doctest::Approx(4 * M_PI / std::sqrt(3.0)));

  const auto tri = lattice_model(TriangleSignature(3, 3, 3));
  CHECK(tri.kind == LatticeKind::Hexagonal);
  CHECK(tri.quotient_order == 3);

  CHECK_THROWS_AS(lattice_model(TriangleSignature(2, 3, 5)),
                  std::domain_error);
}

TEST_CASE("wavevectors pair integrally with the lattice") {
  for (auto sig : {TriangleSignature(2, 3, 6), TriangleSignature(2, 4, 4)}) {
    const auto model = lattice_model(sig);
    for (long long m = -4; m <= 4; ++m)
      for (long long n = -4; n <= 4; ++n) {
        const Eigen::Vector2d k = wavevector(model, m, n);
        const double dt = k.dot(model.tau) / (2 * M_PI);
        const double ds = k.dot(model.sigma) / (2 * M_PI);
        CHECK(dt == doctest::Approx(std::round(dt)).epsilon(1e-12));
        CHECK(ds == doctest::Approx(std::round(ds)).epsilon(1e-12));
        CHECK(k.squaredNorm() ==
              doctest::Approx(double(model.dual_form(m, n))).epsilon(1e-12));
      }
  }
}

TEST_CASE("torus multiplicities equal lattice point counts") {
  const auto hex = lattice_model(TriangleSignature(2, 3, 6));
  const auto sq = lattice_model(TriangleSignature(2, 4, 4));
  CHECK(torus_multiplicity(hex, 0) == 1);
  CHECK(torus_multiplicity(hex, 3) == 6);
  CHECK(torus_multiplicity(hex, 2) == 0);
  CHECK(torus_multiplicity(sq, 5) == 8);
  CHECK(torus_multiplicity(sq, 0) == 1);
  for (long long lam = 0; lam <= 200; ++lam) {
    CHECK(torus_multiplicity(hex, lam) ==
          representation_count(hex.dual_form, lam));
    CHECK(torus_multiplicity(sq, lam) ==
          representation_count(sq.dual_form, lam));
  }
}

TEST_CASE("orbifold multiplicities") {
  CHECK(orbifold_multiplicity(TriangleSignature(2, 3, 6), 0) == 1);
  CHECK(orbifold_multiplicity(TriangleSignature(2, 3, 6), 7) == 2);
  CHECK(orbifold_multiplicity(TriangleSignature(2, 3, 6), 1) == 1);
  CHECK(orbifold_multiplicity(TriangleSignature(2, 4, 4), 3) == 0);
  CHECK(orbifold_multiplicity(TriangleSignature(2, 4, 4), 10) == 2);
  CHECK(orbifold_multiplicity(TriangleSignature(3, 3, 3), 1) == 2);
  // The order-3 quotient sees twice the order-6 quotient at every level.
  for (long long lam = 1; lam <= 500; ++lam)
    CHECK(orbifold_multiplicity(TriangleSignature(3, 3, 3), lam) ==
          2 * orbifold_multiplicity(TriangleSignature(2, 3, 6), lam));
}

TEST_CASE("batch orbifold sweep matches the serial reference") {
  for (auto sig : {TriangleSignature(2, 3, 6), TriangleSignature(2, 4, 4),
                   TriangleSignature(3, 3, 3)}) {
    const auto par = orbifold_multiplicities(sig, 2000);
    const auto ser = orbifold_multiplicities_serial(sig, 2000);
    CHECK(par == ser);
    for (long long lam = 0; lam <= 100; ++lam)
      CHECK(par[lam] == orbifold_multiplicity(sig, lam));
  }
}

TEST_CASE("dual rotation maps preserve the form and have the right order") {
  const auto sq = lattice_model(TriangleSignature(2, 4, 4));
  const auto hex = lattice_model(TriangleSignature(2, 3, 6));
  const auto tri = lattice_model(TriangleSignature(3, 3, 3));

  const auto msq = dual_rotation_map(TriangleSignature(2, 4, 4));
  CHECK(msq.order == 4);
  CHECK(msq.m00 == 0);
  CHECK(msq.m01 == 1);
  CHECK(msq.m10 == -1);
  CHECK(msq.m11 == 0);

  const auto mhex = dual_rotation_map(TriangleSignature(2, 3, 6));
  CHECK(mhex.order == 6);
  CHECK(mhex.m00 == 1);
  CHECK(mhex.m01 == 1);
  CHECK(mhex.m10 == -1);
  CHECK(mhex.m11 == 0);

  const auto mtri = dual_rotation_map(TriangleSignature(3, 3, 3));
  CHECK(mtri.order == 3);
  CHECK(mtri.m00 == mhex.composed_with(mhex).m00);
  CHECK(mtri.m01 == mhex.composed_with(mhex).m01);

  std::mt19937_64 rng(20240811);
  std::uniform_int_distribution<long long> coord(-1000, 1000);
  const std::pair<const LatticeModel*, const DualRotationMap*> pairs[] = {
      {&sq, &msq}, {&hex, &mhex}, {&tri, &mtri}};
  for (int i = 0; i < 10000; ++i) {
    const long long m = coord(rng), n = coord(rng);
    for (const auto& [model, map] : pairs) {
      const auto [mm, nn] = map->apply(m, n);
      CHECK(model->dual_form(mm, nn) == model->dual_form(m, n));
    }
  }

  // apply really is the dual action: k(M(m,n)) = R(2pi/|S|)^T k(m,n).
  for (int i = 0; i < 200; ++i) {
    const long long m = coord(rng), n = coord(rng);
    for (const auto& [model, map] : pairs) {
      const auto [mm, nn] = map->apply(m, n);
      const Eigen::Vector2d k = wavevector(*model, m, n);
      const Eigen::Vector2d kr = wavevector(*model, mm, nn);
      const double ang = -2.0 * M_PI / double(map->order);
      const Eigen::Vector2d want(std::cos(ang) * k.x() - std::sin(ang) * k.y(),
                                 std::sin(ang) * k.x() + std::cos(ang) * k.y());
      CHECK((kr - want).norm() < 1e-9);
    }
  }
}

TEST_CASE("nontrivial powers act freely on the dual lattice minus zero") {
  const auto rep236 = verify_fixed_point_free(TriangleSignature(2, 3, 6));
  CHECK(rep236.determinants == std::vector<long long>{1, 3, 4, 3, 1});
  const auto rep244 = verify_fixed_point_free(TriangleSignature(2, 4, 4));
  CHECK(rep244.determinants == std::vector<long long>{2, 4, 2});
  const auto rep333 = verify_fixed_point_free(TriangleSignature(3, 3, 3));
  CHECK(rep333.determinants == std::vector<long long>{3, 3});
}

TEST_CASE("affine generator realizations satisfy every relation") {
  for (auto sig : {TriangleSignature(2, 3, 6), TriangleSignature(2, 4, 4),
                   TriangleSignature(3, 3, 3)}) {
    const auto gen = realize_generators_affine(sig);
    CHECK(gen.checks.size() == 9);
    for (const auto& chk : gen.checks) {
      INFO(chk.name);
      CHECK(chk.deviation < 1e-9);
    }
  }
}

TEST_CASE("euclidean counting function and Weyl coefficient") {
  // (2,4,4) multiplicities for lambda = 0..10: 1,1,1,0,1,2,0,0,1,1,2.
  CHECK(counting_euclidean(TriangleSignature(2, 4, 4), 0) == 1);
  CHECK(counting_euclidean(TriangleSignature(2, 4, 4), 5) == 6);
  CHECK(counting_euclidean(TriangleSignature(2, 4, 4), 10) == 10);
  CHECK(euclidean_weyl_coefficient(TriangleSignature(2, 4, 4)) ==
        doctest::Approx(M_PI / 4.0));
  CHECK(euclidean_weyl_coefficient(TriangleSignature(2, 3, 6)) ==
        doctest::Approx(M_PI / (3.0 * std::sqrt(3.0))));
  CHECK(euclidean_weyl_coefficient(TriangleSignature(3, 3, 3)) ==
        doctest::Approx(2.0 * M_PI / (3.0 * std::sqrt(3.0))));

  const long long big = counting_euclidean(TriangleSignature(3, 3, 3), 100000);
  const double c = euclidean_weyl_coefficient(TriangleSignature(3, 3, 3));
  CHECK(std::abs(double(big) / 100000.0 - c) < 0.01);
}
