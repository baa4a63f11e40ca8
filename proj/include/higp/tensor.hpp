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

#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <vector>

#include "higp/errors.hpp"

namespace higp {

/// Material symmetry class of a constitutive description.
enum class SymmetryKind { Iso, TransIso };

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double operator[](int k) const { return k == 0 ? x : (k == 1 ? y : z); }
};

/// Direction vector normalized on construction; |v| = 1 to machine precision.
class UnitVec3 {
 public:
  UnitVec3(double x, double y, double z) {
    const double n = std::sqrt(x * x + y * y + z * z);
    if (n < 1e-300) throw Error("UnitVec3: zero-length direction");
    v_ = {x / n, y / n, z / n};
  }
  const Vec3& v() const { return v_; }
  double operator[](int k) const { return v_[k]; }

 private:
  Vec3 v_;
};

/// General 3x3 matrix, row-major storage (F11,F12,F13,F21,...,F33).
struct Mat3 {
  std::array<double, 9> a{};

  double& operator()(int i, int j) { return a[3 * i + j]; }
  double operator()(int i, int j) const { return a[3 * i + j]; }

  static Mat3 zero() { return {}; }
  static Mat3 identity() {
    Mat3 m;
    m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
    return m;
  }

  Mat3 transposed() const {
    Mat3 t;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) t(i, j) = (*this)(j, i);
    return t;
  }

  double det() const {
    const Mat3& m = *this;
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  }

  double trace() const { return a[0] + a[4] + a[8]; }

  Mat3 operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double s = 0.0;
        for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
        r(i, j) = s;
      }
    return r;
  }

  Vec3 operator*(const Vec3& v) const {
    return {a[0] * v.x + a[1] * v.y + a[2] * v.z,
            a[3] * v.x + a[4] * v.y + a[5] * v.z,
            a[6] * v.x + a[7] * v.y + a[8] * v.z};
  }

  Mat3 operator+(const Mat3& o) const {
    Mat3 r;
    for (int k = 0; k < 9; ++k) r.a[k] = a[k] + o.a[k];
    return r;
  }
  Mat3 operator-(const Mat3& o) const {
    Mat3 r;
    for (int k = 0; k < 9; ++k) r.a[k] = a[k] - o.a[k];
    return r;
  }
  Mat3 operator*(double s) const {
    Mat3 r;
    for (int k = 0; k < 9; ++k) r.a[k] = a[k] * s;
    return r;
  }

  double frobenius() const {
    double s = 0.0;
    for (double v : a) s += v * v;
    return std::sqrt(s);
  }
};

/// Symmetric 3x3 tensor storing the six unique entries
/// (m11, m12, m13, m22, m23, m33).
struct SymMat3 {
  std::array<double, 6> m{};

  static constexpr int kIndex[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};

  double operator()(int i, int j) const { return m[kIndex[i][j]]; }
  double& at(int i, int j) { return m[kIndex[i][j]]; }

  static SymMat3 zero() { return {}; }
  static SymMat3 identity() {
    SymMat3 s;
    s.m = {1.0, 0.0, 0.0, 1.0, 0.0, 1.0};
    return s;
  }
  static SymMat3 diag(double d1, double d2, double d3) {
    SymMat3 s;
    s.m = {d1, 0.0, 0.0, d2, 0.0, d3};
    return s;
  }
  static SymMat3 outer(const Vec3& v) {
    SymMat3 s;
    s.m = {v.x * v.x, v.x * v.y, v.x * v.z, v.y * v.y, v.y * v.z, v.z * v.z};
    return s;
  }
  /// Symmetric part of a general matrix: (M + M^T)/2.
  static SymMat3 sym(const Mat3& M) {
    SymMat3 s;
    s.m = {M(0, 0),
           0.5 * (M(0, 1) + M(1, 0)),
           0.5 * (M(0, 2) + M(2, 0)),
           M(1, 1),
           0.5 * (M(1, 2) + M(2, 1)),
           M(2, 2)};
    return s;
  }

  Mat3 full() const {
    Mat3 f;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) f(i, j) = (*this)(i, j);
    return f;
  }

  double trace() const { return m[0] + m[3] + m[5]; }

  double det() const {
    return m[0] * (m[3] * m[5] - m[4] * m[4]) -
           m[1] * (m[1] * m[5] - m[4] * m[2]) +
           m[2] * (m[1] * m[4] - m[3] * m[2]);
  }

  /// Closed-form inverse via adjugate over determinant.
  SymMat3 inverse() const {
    const double d = det();
    if (std::abs(d) < 1e-14) throw SingularC("determinant below 1e-14");
    SymMat3 r;
    r.m[0] = (m[3] * m[5] - m[4] * m[4]) / d;
    r.m[1] = (m[2] * m[4] - m[1] * m[5]) / d;
    r.m[2] = (m[1] * m[4] - m[2] * m[3]) / d;
    r.m[3] = (m[0] * m[5] - m[2] * m[2]) / d;
    r.m[4] = (m[1] * m[2] - m[0] * m[4]) / d;
    r.m[5] = (m[0] * m[3] - m[1] * m[1]) / d;
    return r;
  }

  /// C^2 as a symmetric tensor.
  SymMat3 squared() const { return SymMat3::sym(full() * full()); }

  Vec3 operator*(const Vec3& v) const { return full() * v; }

  SymMat3 operator+(const SymMat3& o) const {
    SymMat3 r;
    for (int k = 0; k < 6; ++k) r.m[k] = m[k] + o.m[k];
    return r;
  }
  SymMat3 operator-(const SymMat3& o) const {
    SymMat3 r;
    for (int k = 0; k < 6; ++k) r.m[k] = m[k] - o.m[k];
    return r;
  }
  SymMat3 operator*(double s) const {
    SymMat3 r;
    for (int k = 0; k < 6; ++k) r.m[k] = m[k] * s;
    return r;
  }

  /// Double contraction A : B over the full 3x3 index range.
  double ddot(const SymMat3& o) const {
    return m[0] * o.m[0] + m[3] * o.m[3] + m[5] * o.m[5] +
           2.0 * (m[1] * o.m[1] + m[2] * o.m[2] + m[4] * o.m[4]);
  }

  double frobenius() const { return std::sqrt(ddot(*this)); }

  double max_abs() const {
    double v = 0.0;
    for (double e : m) v = std::max(v, std::abs(e));
    return v;
  }
};

/// A @ B + B @ A for symmetric A, B; symmetric by construction.
inline SymMat3 sym_anticommutator(const SymMat3& A, const SymMat3& B) {
  return SymMat3::sym(A.full() * B.full() + B.full() * A.full());
}

/// Fourth-order tensor with 81 components, index order (i,j,k,l).
/// Derivatives with respect to C are stored in the symmetrized sense:
/// contraction with a symmetric increment dC yields the directional
/// derivative of the underlying map.
struct Tensor4 {
  std::array<double, 81> a{};

  double& operator()(int i, int j, int k, int l) {
    return a[((i * 3 + j) * 3 + k) * 3 + l];
  }
  double operator()(int i, int j, int k, int l) const {
    return a[((i * 3 + j) * 3 + k) * 3 + l];
  }

  static Tensor4 zero() { return {}; }

  /// Adds scale * L_ij * R_kl.
  void add_outer(const SymMat3& L, const SymMat3& R, double scale = 1.0) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const double lij = scale * L(i, j);
        if (lij == 0.0) continue;
        for (int k = 0; k < 3; ++k)
          for (int l = 0; l < 3; ++l) (*this)(i, j, k, l) += lij * R(k, l);
      }
  }

  void add_scaled(const Tensor4& T, double scale) {
    for (int k = 0; k < 81; ++k) a[k] += scale * T.a[k];
  }

  /// sum_kl T_ijkl H_kl for symmetric H; result symmetrized.
  SymMat3 contract(const SymMat3& H) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double s = 0.0;
        for (int k = 0; k < 3; ++k)
          for (int l = 0; l < 3; ++l) s += (*this)(i, j, k, l) * H(k, l);
        r(i, j) = s;
      }
    return SymMat3::sym(r);
  }

  /// Average over both minor index swaps (i<->j and k<->l).
  Tensor4 minor_symmetrized() const {
    Tensor4 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          for (int l = 0; l < 3; ++l)
            r(i, j, k, l) = 0.25 * ((*this)(i, j, k, l) + (*this)(j, i, k, l) +
                                    (*this)(i, j, l, k) + (*this)(j, i, l, k));
    return r;
  }

  double frobenius() const {
    double s = 0.0;
    for (double v : a) s += v * v;
    return std::sqrt(s);
  }

  double max_abs() const {
    double v = 0.0;
    for (double e : a) v = std::max(v, std::abs(e));
    return v;
  }
};

/// Invariant coordinates of a strain state: the principal triple
/// (i1, i2, i3), extended by the pseudo pair (i4, i5) for the
/// transversely isotropic case.
struct InvariantPoint {
  SymmetryKind kind = SymmetryKind::Iso;
  double i1 = 0.0, i2 = 0.0, i3 = 0.0;
  double i4 = 0.0, i5 = 0.0;  // valid only when kind == TransIso

  static InvariantPoint iso(double a, double b, double c) {
    return {SymmetryKind::Iso, a, b, c, 0.0, 0.0};
  }
  static InvariantPoint transiso(double a, double b, double c, double d, double e) {
    return {SymmetryKind::TransIso, a, b, c, d, e};
  }

  int dim() const { return kind == SymmetryKind::Iso ? 3 : 5; }
  double operator[](int k) const {
    switch (k) {
      case 0: return i1;
      case 1: return i2;
      case 2: return i3;
      case 3: return i4;
      default: return i5;
    }
  }
};

/// Ordered stress generators: [I, C, C^-1] for the isotropic case,
/// [I, C, A, C^2, AC+CA, AC^2+C^2A] for the transversely isotropic one.
struct GeneratorBasis {
  SymmetryKind kind = SymmetryKind::Iso;
  std::vector<SymMat3> g;

  int size() const { return static_cast<int>(g.size()); }
};

// --- deformation measures and invariants ---

/// C = F^T F. Throws NonPositiveJacobian when det(F) <= 0.
SymMat3 right_cauchy_green(const Mat3& F);

/// (I1, I2, I3) = (tr C, (tr(C)^2 - tr(C^2))/2, det C).
InvariantPoint principal_invariants(const SymMat3& C);

/// (I4, I5) = (a0.C a0, a0.C^2 a0) for the structural direction a0.
std::pair<double, double> pseudo_invariants(const SymMat3& C, const UnitVec3& a0);

/// All invariants for the requested symmetry class.
InvariantPoint invariants(SymmetryKind kind, const SymMat3& C,
                          const UnitVec3* a0 = nullptr);

/// Stress generator list for the symmetry class. A must be given iff
/// kind == TransIso. Throws SingularC when C is not invertible.
GeneratorBasis generator_basis(SymmetryKind kind, const SymMat3& C,
                               const SymMat3* A = nullptr);

/// d I_k / d C in the order (I1, I2, I3[, I4, I5]); each entry is the
/// symmetric tensor G with d I_k[dC] = G : dC.
std::vector<SymMat3> invariant_gradients(SymmetryKind kind, const SymMat3& C,
                                         const SymMat3* A = nullptr,
                                         const UnitVec3* a0 = nullptr);

/// d H_j / d C for every generator, minor-symmetrized.
std::vector<Tensor4> generator_gradients(SymmetryKind kind, const SymMat3& C,
                                         const SymMat3* A = nullptr);

}  // namespace higp
