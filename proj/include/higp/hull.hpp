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
#include <cstdint>
#include <vector>

#include "higp/tensor.hpp"

namespace higp {

/// Per-component deformation gradient box: diagonal entries in
/// [1-delta, 1+delta], off-diagonal in [-delta, delta].
struct DomainBounds {
  double delta = 0.175;

  std::pair<double, double> component_bounds(int flat_index) const {
    const bool diag = flat_index == 0 || flat_index == 4 || flat_index == 8;
    return diag ? std::pair{1.0 - delta, 1.0 + delta}
                : std::pair{-delta, delta};
  }
};

/// Stratified design over the 9-dimensional F-box: each dimension is cut
/// into n equal bins holding exactly one sample. Deterministic in the seed.
std::vector<Mat3> lhs_sample(const DomainBounds& bounds, int n, std::uint64_t seed);

struct HullFace {
  std::array<int, 3> v;             // vertex indices, outward orientation
  std::array<double, 3> normal;     // unit outward normal
  double offset;                    // normal . x <= offset on the hull
};

/// Triangulated convex hull in (I1, I2, I3) space with packed face-plane
/// arrays for the half-space containment kernel.
struct ConvexHull3 {
  std::vector<std::array<double, 3>> vertices;
  std::vector<HullFace> faces;

  // Face planes in structure-of-arrays form.
  std::vector<double> nx, ny, nz, off;

  bool contains(const std::array<double, 3>& p, double tol = 1e-9) const;
  std::array<std::array<double, 3>, 2> bounding_box() const;
};

/// Convex hull of a 3-D point cloud (incremental construction).
/// Throws DegenerateCloud when all points are coplanar.
ConvexHull3 convex_hull(const std::vector<std::array<double, 3>>& points);

/// Invariant-space hull of the admissible domain: images of an n_cloud
/// LHS sample of F (restricted to det F > 0) under the principal
/// invariants.
ConvexHull3 build_hull(const DomainBounds& bounds, int n_cloud, std::uint64_t seed);

bool point_in_hull(const ConvexHull3& hull, const InvariantPoint& p,
                   double tol = 1e-9);

}  // namespace higp
