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

#include "higp/tensor.hpp"

namespace higp {

SymMat3 right_cauchy_green(const Mat3& F) {
  if (F.det() <= 0.0)
    throw NonPositiveJacobian("det(F) <= 0");
  return SymMat3::sym(F.transposed() * F);
}

InvariantPoint principal_invariants(const SymMat3& C) {
  const double t = C.trace();
  const double t2 = C.squared().trace();
  return InvariantPoint::iso(t, 0.5 * (t * t - t2), C.det());
}

std::pair<double, double> pseudo_invariants(const SymMat3& C, const UnitVec3& a0) {
  const Vec3 ca = C * a0.v();
  const double i4 = a0.v().dot(ca);
  const double i5 = ca.dot(ca);  // a0.C^2 a0 = (C a0).(C a0) for symmetric C
  return {i4, i5};
}

InvariantPoint invariants(SymmetryKind kind, const SymMat3& C, const UnitVec3* a0) {
  InvariantPoint p = principal_invariants(C);
  if (kind == SymmetryKind::Iso) return p;
  if (!a0) throw DimensionMismatch("transversely isotropic invariants need a0");
  const auto [i4, i5] = pseudo_invariants(C, *a0);
  return InvariantPoint::transiso(p.i1, p.i2, p.i3, i4, i5);
}

GeneratorBasis generator_basis(SymmetryKind kind, const SymMat3& C, const SymMat3* A) {
  GeneratorBasis b;
  b.kind = kind;
  if (kind == SymmetryKind::Iso) {
    if (A) throw DimensionMismatch("isotropic basis takes no structural tensor");
    b.g = {SymMat3::identity(), C, C.inverse()};
  } else {
    if (!A) throw DimensionMismatch("transversely isotropic basis needs A");
    const SymMat3 C2 = C.squared();
    b.g = {SymMat3::identity(), C,
           *A,                  C2,
           sym_anticommutator(*A, C), sym_anticommutator(*A, C2)};
  }
  return b;
}

std::vector<SymMat3> invariant_gradients(SymmetryKind kind, const SymMat3& C,
                                         const SymMat3* A, const UnitVec3* a0) {
  const InvariantPoint p = principal_invariants(C);
  const SymMat3 I = SymMat3::identity();
  std::vector<SymMat3> g;
  g.push_back(I);
  g.push_back(I * p.i1 - C);
  g.push_back(C.inverse() * p.i3);
  if (kind == SymmetryKind::TransIso) {
    if (!A || !a0) throw DimensionMismatch("pseudo-invariant gradients need A and a0");
    g.push_back(*A);
    // dI5/dC = a0 (x) C a0 + C a0 (x) a0, symmetric since C is.
    const Vec3 ca = C * a0->v();
    Mat3 m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        m(i, j) = (*a0)[i] * ca[j] + ca[i] * (*a0)[j];
    g.push_back(SymMat3::sym(m));
  }
  return g;
}

namespace {

constexpr double kd(int i, int j) { return i == j ? 1.0 : 0.0; }

Tensor4 identity4() {
  Tensor4 t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          t(i, j, k, l) = 0.5 * (kd(i, k) * kd(j, l) + kd(i, l) * kd(j, k));
  return t;
}

Tensor4 d_inverse(const SymMat3& Ci) {
  Tensor4 t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          t(i, j, k, l) = -0.5 * (Ci(i, k) * Ci(l, j) + Ci(i, l) * Ci(k, j));
  return t;
}

Tensor4 d_squared(const SymMat3& C) {
  Tensor4 t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          t(i, j, k, l) = kd(i, k) * C(l, j) + C(i, k) * kd(j, l);
  return t.minor_symmetrized();
}

Tensor4 d_anticommutator(const SymMat3& A) {
  Tensor4 t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          t(i, j, k, l) = A(i, k) * kd(j, l) + kd(i, k) * A(l, j);
  return t.minor_symmetrized();
}

Tensor4 d_anticommutator_sq(const SymMat3& A, const SymMat3& C) {
  const Mat3 AC = A.full() * C.full();
  const Mat3 CA = C.full() * A.full();
  Tensor4 t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          t(i, j, k, l) = A(i, k) * C(l, j) + AC(i, k) * kd(j, l) +
                          kd(i, k) * CA(l, j) + C(i, k) * A(l, j);
  return t.minor_symmetrized();
}

}  // namespace

std::vector<Tensor4> generator_gradients(SymmetryKind kind, const SymMat3& C,
                                         const SymMat3* A) {
  std::vector<Tensor4> g;
  if (kind == SymmetryKind::Iso) {
    if (A) throw DimensionMismatch("isotropic gradients take no structural tensor");
    g.push_back(Tensor4::zero());
    g.push_back(identity4());
    g.push_back(d_inverse(C.inverse()));
  } else {
    if (!A) throw DimensionMismatch("transversely isotropic gradients need A");
    g.push_back(Tensor4::zero());
    g.push_back(identity4());
    g.push_back(Tensor4::zero());
    g.push_back(d_squared(C));
    g.push_back(d_anticommutator(*A));
    g.push_back(d_anticommutator_sq(*A, C));
  }
  return g;
}

}  // namespace higp
