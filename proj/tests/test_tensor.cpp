/* Copyright (c) 2026 higp Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License. */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>

#include "higp/tensor.hpp"
#include "test_util.hpp"

using namespace higp;

TEST_CASE("right Cauchy-Green basics") {
  CHECK((right_cauchy_green(Mat3::identity()) - SymMat3::identity()).max_abs() ==
        0.0);

  Mat3 F = Mat3::identity();
  F(0, 0) = 2.0;
  const SymMat3 C = right_cauchy_green(F);
  CHECK(C(0, 0) == doctest::Approx(4.0));
  CHECK(C(1, 1) == doctest::Approx(1.0));
  CHECK(C(2, 2) == doctest::Approx(1.0));
  CHECK(C(0, 1) == 0.0);

  Mat3 flipped = Mat3::identity();
  flipped(0, 0) = -1.0;
  CHECK_THROWS_AS(right_cauchy_green(flipped), NonPositiveJacobian);
}

TEST_CASE("eigenvalues of C are squared singular values of F") {
  Rng rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    const Mat3 F = test::random_F(rng);
    const SymMat3 C = right_cauchy_green(F);
    Eigen::Matrix3d Fe;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) Fe(i, j) = F(i, j);
    Eigen::JacobiSVD<Eigen::Matrix3d> svd(Fe);
    Eigen::Matrix3d Ce;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) Ce(i, j) = C(i, j);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(Ce);
    for (int k = 0; k < 3; ++k) {
      const double sv = svd.singularValues()(2 - k);
      CHECK(es.eigenvalues()(k) == doctest::Approx(sv * sv).epsilon(1e-10));
    }
  }
}

TEST_CASE("principal invariants") {
  const InvariantPoint ref = principal_invariants(SymMat3::identity());
  CHECK(ref.i1 == 3.0);
  CHECK(ref.i2 == 3.0);
  CHECK(ref.i3 == 1.0);

  const InvariantPoint p = principal_invariants(SymMat3::diag(1.4, 1.1, 0.8));
  CHECK(p.i1 == doctest::Approx(3.3).epsilon(1e-13));
  CHECK(p.i2 == doctest::Approx(3.54).epsilon(1e-13));
  CHECK(p.i3 == doctest::Approx(1.232).epsilon(1e-13));
}

TEST_CASE("invariants match elementary symmetric polynomials of eigenvalues") {
  Rng rng(72);
  for (int trial = 0; trial < 100; ++trial) {
    const SymMat3 C = test::random_spd(rng);
    Eigen::Matrix3d Ce;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) Ce(i, j) = C(i, j);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(Ce);
    const double l1 = es.eigenvalues()(0), l2 = es.eigenvalues()(1),
                 l3 = es.eigenvalues()(2);
    const InvariantPoint p = principal_invariants(C);
    CHECK(p.i1 == doctest::Approx(l1 + l2 + l3).epsilon(1e-12));
    CHECK(p.i2 == doctest::Approx(l1 * l2 + l1 * l3 + l2 * l3).epsilon(1e-12));
    CHECK(p.i3 == doctest::Approx(l1 * l2 * l3).epsilon(1e-12));
  }
}

TEST_CASE("pseudo invariants, including the rotated reference values") {
  const UnitVec3 a0(1.0, 2.0, 1.0);
  {
    const auto [i4, i5] = pseudo_invariants(SymMat3::identity(), a0);
    CHECK(i4 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(i5 == doctest::Approx(1.0).epsilon(1e-14));
  }
  const SymMat3 C = SymMat3::diag(1.4, 1.1, 0.8);
  {
    const auto [i4, i5] = pseudo_invariants(C, a0);
    CHECK(i4 == doctest::Approx(1.1).epsilon(1e-13));
    CHECK(i5 == doctest::Approx(1.24).epsilon(1e-13));
  }
  {
    // 0.1 rad rotation in the y-z plane; the reference reports rounded values.
    Mat3 R = Mat3::identity();
    R(1, 1) = std::cos(0.1);
    R(1, 2) = -std::sin(0.1);
    R(2, 1) = std::sin(0.1);
    R(2, 2) = std::cos(0.1);
    const SymMat3 Crot = test::rotated(C, R);
    const auto [i4, i5] = pseudo_invariants(Crot, a0);
    CHECK(i4 == doctest::Approx(1.078).epsilon(2e-3));
    CHECK(i5 == doctest::Approx(1.199).epsilon(2e-3));
  }
}

TEST_CASE("rotation invariance of the invariants") {
  Rng rng(73);
  const UnitVec3 a0(0.3, -0.5, 0.81);
  for (int trial = 0; trial < 1000; ++trial) {
    const SymMat3 C = test::random_spd(rng);
    const Mat3 R = test::random_rotation(rng);
    const SymMat3 Cr = test::rotated(C, R);

    const InvariantPoint p = principal_invariants(C);
    const InvariantPoint q = principal_invariants(Cr);
    CHECK(std::abs(p.i1 - q.i1) <= 1e-12 * std::abs(p.i1));
    CHECK(std::abs(p.i2 - q.i2) <= 1e-12 * std::abs(p.i2));
    CHECK(std::abs(p.i3 - q.i3) <= 1e-12 * std::abs(p.i3));

    // Joint rotation of strain and direction fixes the pseudo pair.
    const Vec3 ar = R.transposed() * a0.v();
    const UnitVec3 a0r(ar.x, ar.y, ar.z);
    const auto [i4, i5] = pseudo_invariants(C, a0);
    const auto [j4, j5] = pseudo_invariants(Cr, a0r);
    CHECK(std::abs(i4 - j4) <= 1e-12 * std::max(1.0, std::abs(i4)));
    CHECK(std::abs(i5 - j5) <= 1e-12 * std::max(1.0, std::abs(i5)));
  }
}

TEST_CASE("generator basis structure") {
  SUBCASE("isotropic at identity") {
    const GeneratorBasis b = generator_basis(SymmetryKind::Iso, SymMat3::identity());
    REQUIRE(b.size() == 3);
    for (const auto& g : b.g) CHECK((g - SymMat3::identity()).max_abs() == 0.0);
  }
  SUBCASE("isotropic inverse generator") {
    const GeneratorBasis b =
        generator_basis(SymmetryKind::Iso, SymMat3::diag(4.0, 1.0, 1.0));
    CHECK(b.g[2](0, 0) == doctest::Approx(0.25));
    CHECK(b.g[2](1, 1) == doctest::Approx(1.0));
  }
  SUBCASE("transversely isotropic at identity collapses products") {
    const UnitVec3 a0(1.0, 2.0, 1.0);
    const SymMat3 A = SymMat3::outer(a0.v());
    const GeneratorBasis b =
        generator_basis(SymmetryKind::TransIso, SymMat3::identity(), &A);
    REQUIRE(b.size() == 6);
    CHECK((b.g[2] - A).max_abs() == 0.0);
    CHECK((b.g[4] - A * 2.0).max_abs() < 1e-15);
    CHECK((b.g[5] - A * 2.0).max_abs() < 1e-15);
  }
  SUBCASE("singular C is rejected") {
    CHECK_THROWS_AS(generator_basis(SymmetryKind::Iso, SymMat3::diag(1, 1, 0)),
                    SingularC);
  }
}

TEST_CASE("generator equivariance under rotation") {
  Rng rng(74);
  for (int trial = 0; trial < 1000; ++trial) {
    const SymMat3 C = test::random_spd(rng);
    const Mat3 R = test::random_rotation(rng);
    const UnitVec3 a0(rng.normal(), rng.normal(), rng.normal() + 2.0);
    const SymMat3 A = SymMat3::outer(a0.v());
    const SymMat3 Cr = test::rotated(C, R);
    const SymMat3 Ar = test::rotated(A, R);

    const GeneratorBasis b = generator_basis(SymmetryKind::TransIso, C, &A);
    const GeneratorBasis br = generator_basis(SymmetryKind::TransIso, Cr, &Ar);
    for (int g = 0; g < 6; ++g) {
      const SymMat3 expect = test::rotated(b.g[g], R);
      CHECK((br.g[g] - expect).max_abs() <=
            1e-12 * std::max(1.0, expect.max_abs()));
    }
  }
}

TEST_CASE("invariant gradients: closed forms and finite differences") {
  Rng rng(75);
  const UnitVec3 a0(0.25, 0.8, -0.55);
  const SymMat3 A = SymMat3::outer(a0.v());

  SUBCASE("dI1/dC is the identity, dI3/dC at C=I is the identity") {
    const auto g = invariant_gradients(SymmetryKind::Iso, SymMat3::identity());
    CHECK((g[0] - SymMat3::identity()).max_abs() == 0.0);
    CHECK((g[2] - SymMat3::identity()).max_abs() < 1e-15);
  }

  SUBCASE("finite-difference agreement for all five invariants") {
    for (int trial = 0; trial < 25; ++trial) {
      const SymMat3 C = test::random_spd(rng);
      const double h = 1e-6 * std::max(1.0, C.frobenius());
      const auto g = invariant_gradients(SymmetryKind::TransIso, C, &A, &a0);
      const std::array<std::function<double(const SymMat3&)>, 5> maps = {
          [](const SymMat3& c) { return principal_invariants(c).i1; },
          [](const SymMat3& c) { return principal_invariants(c).i2; },
          [](const SymMat3& c) { return principal_invariants(c).i3; },
          [&](const SymMat3& c) { return pseudo_invariants(c, a0).first; },
          [&](const SymMat3& c) { return pseudo_invariants(c, a0).second; }};
      for (int k = 0; k < 5; ++k) {
        const SymMat3 fd = test::fd_scalar_gradient(maps[k], C, h);
        CHECK((g[k] - fd).max_abs() <=
              1e-6 * std::max(1.0, fd.max_abs()));
      }
    }
  }
}

TEST_CASE("generator gradients: closed forms and finite differences") {
  Rng rng(76);
  const UnitVec3 a0(0.25, 0.8, -0.55);
  const SymMat3 A = SymMat3::outer(a0.v());

  SUBCASE("dI/dC vanishes") {
    const auto g = generator_gradients(SymmetryKind::Iso, SymMat3::identity());
    CHECK(g[0].max_abs() == 0.0);
  }

  SUBCASE("dC^2/dC at identity doubles a symmetric contraction") {
    const auto g = generator_gradients(SymmetryKind::TransIso, SymMat3::identity(), &A);
    Rng local(7);
    const SymMat3 H = test::random_spd(local);
    const SymMat3 r = g[3].contract(H);
    CHECK((r - H * 2.0).max_abs() < 1e-13);
  }

  SUBCASE("finite-difference agreement for every generator") {
    for (int trial = 0; trial < 15; ++trial) {
      const SymMat3 C = test::random_spd(rng);
      const double h = 1e-6 * std::max(1.0, C.frobenius());
      const auto g = generator_gradients(SymmetryKind::TransIso, C, &A);
      const std::array<std::function<SymMat3(const SymMat3&)>, 6> maps = {
          [](const SymMat3&) { return SymMat3::identity(); },
          [](const SymMat3& c) { return c; },
          [&](const SymMat3&) { return A; },
          [](const SymMat3& c) { return c.squared(); },
          [&](const SymMat3& c) { return sym_anticommutator(A, c); },
          [&](const SymMat3& c) { return sym_anticommutator(A, c.squared()); }};
      for (int k = 0; k < 6; ++k) {
        const Tensor4 fd = test::fd_tensor_gradient(maps[k], C, h);
        double diff = 0.0;
        for (int e = 0; e < 81; ++e)
          diff = std::max(diff, std::abs(g[k].a[e] - fd.a[e]));
        CHECK(diff <= 1e-6 * std::max(1.0, fd.max_abs()));
      }
      // The inverse generator gradient, against the same oracle.
      const auto giso = generator_gradients(SymmetryKind::Iso, C);
      const Tensor4 fd_inv = test::fd_tensor_gradient(
          [](const SymMat3& c) { return c.inverse(); }, C, h);
      double diff = 0.0;
      for (int e = 0; e < 81; ++e)
        diff = std::max(diff, std::abs(giso[2].a[e] - fd_inv.a[e]));
      CHECK(diff <= 1e-6 * std::max(1.0, fd_inv.max_abs()));
    }
  }
}
