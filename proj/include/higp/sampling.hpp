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

#include <cstdint>
#include <optional>
#include <vector>

#include "higp/hull.hpp"
#include "higp/rng.hpp"
#include "higp/tensor.hpp"

namespace higp {

/// Does the triple (i1, i2, i3) belong to a real symmetric tensor with
/// three real non-negative eigenvalues? Uses the cubic-root criterion
/// H = (I1^2 - 3 I2)/9, G = I1 I2 / 3 - I3 - 2 I1^3 / 27, real roots iff
/// G^2 <= 4 H^3, plus non-negative elementary symmetric values.
bool physicality_check(const InvariantPoint& p);

/// Diagonal tensor of reconstructed squared principal stretches for a
/// physical triple. Throws Unphysical when the check fails.
SymMat3 reconstruct_C(const InvariantPoint& p);

/// Simulated annealing schedule: n_steps sweeps, initial step size step0,
/// multiplicative decay per sweep.
struct AnnealConfig {
  int n_steps = 7000;
  double step0 = 1.0;
  double decay = 0.9995;

  static AnnealConfig iso_defaults() { return {7000, 1.0, 0.9995}; }
  static AnnealConfig aniso_defaults() { return {10000, 6.283185307179586, 0.9995}; }

  void validate() const {
    if (n_steps < 0 || step0 <= 0.0 || decay <= 0.0 || decay >= 1.0)
      throw ConfigError("invalid annealing configuration");
  }
};

/// Space-filling design in invariant space plus the strain states that
/// realize it.
struct SampleSet {
  SymmetryKind kind = SymmetryKind::Iso;
  std::vector<InvariantPoint> points;
  std::vector<SymMat3> tensors;                  // realizing C per point
  std::vector<std::array<double, 3>> angles;     // rotation angles (TransIso)
  int pinned_index = -1;                         // the reference state row
  std::uint64_t seed = 0;
  AnnealConfig config;
  double delta = 0.0;

  int size() const { return static_cast<int>(points.size()); }
};

/// Maximin annealing of N points inside the hull (Alg. "evenly spread
/// points in invariant space"): each accepted move strictly increases the
/// moved point's nearest-neighbor distance and keeps it inside the hull
/// and physical. One point is pinned at the reference state (3, 3, 1).
SampleSet anneal_iso(const ConvexHull3& hull, int n_points, const AnnealConfig& cfg,
                     std::uint64_t seed, double delta_metadata = 0.0);

/// Second-stage annealing of per-point rotation angles to spread the
/// pseudo-invariant pairs (I4, I5) while the principal triples stay fixed.
SampleSet anneal_aniso(const SampleSet& iso_set, const UnitVec3& a0,
                       const AnnealConfig& cfg, std::uint64_t seed);

/// Rotations acting on the x-y, x-z and y-z coordinate planes.
Mat3 rotation_xy(double angle);
Mat3 rotation_xz(double angle);
Mat3 rotation_yz(double angle);

/// C rotated by the composition used in the angle annealing:
/// R_xy^T R_xz^T R_yz^T C R_yz R_xz R_xy.
SymMat3 rotate_strain(const SymMat3& C, const std::array<double, 3>& angles);

/// Recover a symmetric tensor whose five invariants match the quintuple,
/// with entries confined to [lb, ub]. Damped Gauss-Newton with multistart
/// from rotated reconstructions of the principal triple; throws
/// NoConvergence when the budget (20 starts x 200 iterations) is spent.
SymMat3 solve_C_from_quintuple(const InvariantPoint& p, const SymMat3& A,
                               const SymMat3& lb, const SymMat3& ub,
                               std::uint64_t seed = 12345);

/// Greedy first-kept duplicate filter: a point is dropped when every
/// coordinate is within 0.01 of an already kept point.
std::vector<InvariantPoint> dedupe(const std::vector<InvariantPoint>& points);
std::vector<int> dedupe_indices(const std::vector<std::vector<double>>& rows,
                                double tol = 0.01);

}  // namespace higp
