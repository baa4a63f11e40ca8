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

#include "higp/laws.hpp"

#include <cmath>

namespace higp {

namespace {

double jacobian_from(const SymMat3& C) {
  const double i3 = C.det();
  if (i3 <= 0.0) throw SingularC("det(C) <= 0");
  return std::sqrt(i3);
}

}  // namespace

double mooney_rivlin_energy(const MooneyRivlinParams& p, const SymMat3& C) {
  const InvariantPoint inv = principal_invariants(C);
  const double J = jacobian_from(C);
  const double vol_mod =
      p.stress_free_reference ? 2.0 * (p.c1 + 2.0 * p.c2) : 2.0 * (p.c1 + p.c2);
  return p.c * (J - 1.0) * (J - 1.0) - vol_mod * std::log(J) +
         p.c1 * (inv.i1 - 3.0) + p.c2 * (inv.i2 - 3.0);
}

SymMat3 mooney_rivlin_stress(const MooneyRivlinParams& p, const SymMat3& C) {
  const InvariantPoint inv = principal_invariants(C);
  const double J = jacobian_from(C);
  const double vol_mod =
      p.stress_free_reference ? 2.0 * (p.c1 + 2.0 * p.c2) : 2.0 * (p.c1 + p.c2);
  const SymMat3 I = SymMat3::identity();
  return I * (2.0 * (p.c1 + p.c2 * inv.i1)) - C * (2.0 * p.c2) +
         C.inverse() * (2.0 * p.c * J * (J - 1.0) - vol_mod);
}

double bonet_energy(const BonetParams& p, const SymMat3& C) {
  const double J = jacobian_from(C);
  const auto [i4, i5] = pseudo_invariants(C, p.a0);
  return (p.alpha + p.beta * std::log(J) + p.gamma * (i4 - 1.0)) * (i4 - 1.0) -
         0.5 * p.alpha * (i5 - 1.0);
}

SymMat3 bonet_stress(const BonetParams& p, const SymMat3& C) {
  const double J = jacobian_from(C);
  const auto [i4, i5] = pseudo_invariants(C, p.a0);
  (void)i5;
  const SymMat3 A = p.structural_tensor();
  // S = 2 dPsi/dC with dlnJ/dC = C^-1 / 2, dI4/dC = A, dI5/dC = AC + CA.
  return C.inverse() * (p.beta * (i4 - 1.0)) +
         A * (2.0 * (p.alpha + p.beta * std::log(J) + 2.0 * p.gamma * (i4 - 1.0))) -
         sym_anticommutator(A, C) * p.alpha;
}

double Law::energy(const SymMat3& C) const {
  if (auto* mr = std::get_if<MooneyRivlinParams>(&params_))
    return mooney_rivlin_energy(*mr, C);
  return bonet_energy(std::get<BonetParams>(params_), C);
}

SymMat3 Law::stress(const SymMat3& C) const {
  if (auto* mr = std::get_if<MooneyRivlinParams>(&params_))
    return mooney_rivlin_stress(*mr, C);
  return bonet_stress(std::get<BonetParams>(params_), C);
}

const UnitVec3* Law::direction() const {
  if (auto* b = std::get_if<BonetParams>(&params_)) return &b->a0;
  return nullptr;
}

Tensor4 law_tangent(const Law& law, const SymMat3& C, double step) {
  Tensor4 t;
  for (int k = 0; k < 3; ++k)
    for (int l = k; l < 3; ++l) {
      // Symmetric pair perturbation of unit Frobenius contraction weight.
      SymMat3 dp = C, dm = C;
      const double h = k == l ? step : 0.5 * step;
      dp.at(k, l) += h;
      dm.at(k, l) -= h;
      const SymMat3 diff = (law.stress(dp) - law.stress(dm)) * (1.0 / (2.0 * step));
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          t(i, j, k, l) = 2.0 * diff(i, j);
          if (k != l) t(i, j, l, k) = 2.0 * diff(i, j);
        }
    }
  return t;
}

}  // namespace higp
