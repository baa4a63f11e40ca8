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

#include <string>
#include <variant>

#include "higp/tensor.hpp"

namespace higp {

/// Compressible Mooney-Rivlin:
///   Psi = c (J-1)^2 - 2(c1+c2) ln J + c1 (I1-3) + c2 (I2-3),  J = sqrt(I3).
/// The reference parameter naming is ambiguous in the literature this was
/// taken from, so the assignment is explicit here and recorded in output
/// metadata. With stress_free_reference the ln J modulus becomes 2(c1+2c2),
/// which zeroes the reference-state stress; the default keeps the plain
/// form, whose reference stress is 2*c2*I.
struct MooneyRivlinParams {
  double c = 1.0;
  double c1 = 0.2;
  double c2 = 0.8;
  bool stress_free_reference = false;
};

double mooney_rivlin_energy(const MooneyRivlinParams& p, const SymMat3& C);
SymMat3 mooney_rivlin_stress(const MooneyRivlinParams& p, const SymMat3& C);

/// Transversely isotropic reinforcement law (Bonet-Burton form):
///   Psi = [alpha + beta ln J + gamma (I4-1)] (I4-1) - alpha (I5-1)/2.
/// The stress is the exact energy gradient S = 2 dPsi/dC.
struct BonetParams {
  double alpha = 1.585e5;
  double beta = 5e4;
  double gamma = 1.8e5;
  UnitVec3 a0{1.0, 2.0, 1.0};

  SymMat3 structural_tensor() const { return SymMat3::outer(a0.v()); }
};

double bonet_energy(const BonetParams& p, const SymMat3& C);
SymMat3 bonet_stress(const BonetParams& p, const SymMat3& C);

/// Ground-truth law used to synthesize training and test data.
class Law {
 public:
  explicit Law(MooneyRivlinParams p) : params_(p) {}
  explicit Law(BonetParams p) : params_(p) {}

  SymmetryKind kind() const {
    return std::holds_alternative<MooneyRivlinParams>(params_)
               ? SymmetryKind::Iso
               : SymmetryKind::TransIso;
  }
  std::string name() const {
    return kind() == SymmetryKind::Iso ? "mooney_rivlin" : "bonet";
  }

  const MooneyRivlinParams& mooney_rivlin() const {
    return std::get<MooneyRivlinParams>(params_);
  }
  const BonetParams& bonet() const { return std::get<BonetParams>(params_); }

  double energy(const SymMat3& C) const;
  SymMat3 stress(const SymMat3& C) const;

  /// Fiber direction for transversely isotropic laws; null otherwise.
  const UnitVec3* direction() const;

 private:
  std::variant<MooneyRivlinParams, BonetParams> params_;
};

/// Central finite difference of the law stress, 2 dS/dC convention
/// matching the surrogate tangent; oracle-grade only.
Tensor4 law_tangent(const Law& law, const SymMat3& C, double step = 1e-6);

}  // namespace higp
