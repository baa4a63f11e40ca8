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

#include "higp/sampling.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "higp/kernels.hpp"

namespace higp {

namespace {

constexpr double kDegenerate = 1e-12;

struct CubicShape {
  double H, G;
};

CubicShape cubic_shape(const InvariantPoint& p) {
  const double H = (p.i1 * p.i1 - 3.0 * p.i2) / 9.0;
  const double G = p.i1 * p.i2 / 3.0 - p.i3 - 2.0 * p.i1 * p.i1 * p.i1 / 27.0;
  return {H, G};
}

}  // namespace

bool physicality_check(const InvariantPoint& p) {
  if (p.i1 < 0.0 || p.i2 < 0.0 || p.i3 < 0.0) return false;
  const auto [H, G] = cubic_shape(p);
  if (H < 0.0) return false;
  if (H < kDegenerate) return std::abs(G) < kDegenerate;  // triple root
  // Three real roots iff G^2 <= 4 H^3 (arccos argument in [-1, 1]).
  const double h3 = 4.0 * H * H * H;
  return G * G <= h3 * (1.0 + 1e-10);
}

SymMat3 reconstruct_C(const InvariantPoint& p) {
  if (!physicality_check(p)) throw Unphysical("invariant triple is not realizable");
  const auto [H, G] = cubic_shape(p);
  const double third = p.i1 / 3.0;
  if (H < kDegenerate) return SymMat3::diag(third, third, third);
  double arg = -G / (2.0 * std::pow(H, 1.5));
  arg = std::clamp(arg, -1.0, 1.0);
  const double beta = std::acos(arg);
  const double r = 2.0 * std::sqrt(H);
  const double pi = std::numbers::pi;
  const double l1 = third - r * std::cos((pi - beta) / 3.0);
  const double l2 = third - r * std::cos((pi + beta) / 3.0);
  const double l3 = third + r * std::cos(beta / 3.0);
  return SymMat3::diag(l1, l2, l3);
}

namespace {

// Coordinates of the moving points in structure-of-arrays form for the
// distance kernel.
struct PointCloud3 {
  std::vector<double> x, y, z;

  explicit PointCloud3(int n) : x(n), y(n), z(n) {}
  std::array<const double*, 3> cols() const { return {x.data(), y.data(), z.data()}; }
  void set(int i, const std::array<double, 3>& p) {
    x[i] = p[0];
    y[i] = p[1];
    z[i] = p[2];
  }
  std::array<double, 3> get(int i) const { return {x[i], y[i], z[i]}; }
};

double nearest_sqdist(const std::array<const double*, 3>& cols, std::size_t n,
                      const std::array<double, 3>& q, std::size_t skip,
                      std::vector<double>& scratch) {
  scratch.resize(n);
  const double* col_ptrs[3] = {cols[0], cols[1], cols[2]};
  kernels::sqdist_batch(col_ptrs, 3, n, q.data(), scratch.data());
  return kernels::min_excluding(scratch.data(), n, skip);
}

double nearest_sqdist2(const double* cx, const double* cy, std::size_t n,
                       double qx, double qy, std::size_t skip,
                       std::vector<double>& scratch) {
  scratch.resize(n);
  const double* col_ptrs[2] = {cx, cy};
  const double q[2] = {qx, qy};
  kernels::sqdist_batch(col_ptrs, 2, n, q, scratch.data());
  return kernels::min_excluding(scratch.data(), n, skip);
}

}  // namespace

SampleSet anneal_iso(const ConvexHull3& hull, int n_points, const AnnealConfig& cfg,
                     std::uint64_t seed, double delta_metadata) {
  cfg.validate();
  if (n_points < 2) throw ConfigError("anneal_iso needs at least 2 points");

  Rng rng(seed);
  const auto [lo, hi] = hull.bounding_box();
  PointCloud3 pts(n_points);

  // Rejection-sample the movable points uniformly over the hull's bounding
  // box, keeping only in-hull physical candidates.
  const int kAttemptBudget = 1000000;
  int placed = 0, attempts = 0;
  while (placed < n_points - 1) {
    if (++attempts > kAttemptBudget)
      throw InitializationFailure("could not place initial points in the hull");
    std::array<double, 3> c{rng.uniform(lo[0], hi[0]), rng.uniform(lo[1], hi[1]),
                            rng.uniform(lo[2], hi[2])};
    const InvariantPoint p = InvariantPoint::iso(c[0], c[1], c[2]);
    if (!hull.contains(c) || !physicality_check(p)) continue;
    pts.set(placed++, c);
  }
  const int pinned = n_points - 1;
  pts.set(pinned, {3.0, 3.0, 1.0});

  double step = cfg.step0;
  std::vector<double> scratch;
  for (int sweep = 0; sweep < cfg.n_steps; ++sweep) {
    for (int j = 0; j < n_points; ++j) {
      const auto dir = rng.sphere_direction();
      const double s = rng.uniform(0.0, step);
      if (j == pinned) continue;  // reference state never moves
      const auto cur = pts.get(j);
      const std::array<double, 3> cand{cur[0] + s * dir[0], cur[1] + s * dir[1],
                                       cur[2] + s * dir[2]};
      const InvariantPoint cp = InvariantPoint::iso(cand[0], cand[1], cand[2]);
      if (!physicality_check(cp)) continue;
      const double d_cur = nearest_sqdist(pts.cols(), n_points, cur, j, scratch);
      const double d_new = nearest_sqdist(pts.cols(), n_points, cand, j, scratch);
      if (!(d_new > d_cur)) continue;
      if (!hull.contains(cand)) continue;
      pts.set(j, cand);
    }
    step *= cfg.decay;
  }

  SampleSet set;
  set.kind = SymmetryKind::Iso;
  set.pinned_index = pinned;
  set.seed = seed;
  set.config = cfg;
  set.delta = delta_metadata;
  set.points.reserve(n_points);
  set.tensors.reserve(n_points);
  for (int i = 0; i < n_points; ++i) {
    const auto c = pts.get(i);
    const InvariantPoint p = InvariantPoint::iso(c[0], c[1], c[2]);
    set.points.push_back(p);
    set.tensors.push_back(reconstruct_C(p));
  }
  return set;
}

Mat3 rotation_xy(double a) {
  Mat3 r = Mat3::identity();
  r(0, 0) = std::cos(a);
  r(0, 1) = -std::sin(a);
  r(1, 0) = std::sin(a);
  r(1, 1) = std::cos(a);
  return r;
}

Mat3 rotation_xz(double a) {
  Mat3 r = Mat3::identity();
  r(0, 0) = std::cos(a);
  r(0, 2) = std::sin(a);
  r(2, 0) = -std::sin(a);
  r(2, 2) = std::cos(a);
  return r;
}

Mat3 rotation_yz(double a) {
  Mat3 r = Mat3::identity();
  r(1, 1) = std::cos(a);
  r(1, 2) = -std::sin(a);
  r(2, 1) = std::sin(a);
  r(2, 2) = std::cos(a);
  return r;
}

SymMat3 rotate_strain(const SymMat3& C, const std::array<double, 3>& angles) {
  const Mat3 R = rotation_yz(angles[2]) * rotation_xz(angles[1]) * rotation_xy(angles[0]);
  return SymMat3::sym(R.transposed() * C.full() * R);
}

SampleSet anneal_aniso(const SampleSet& iso_set, const UnitVec3& a0,
                       const AnnealConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  if (iso_set.kind != SymmetryKind::Iso)
    throw KindMismatch("anneal_aniso expects an isotropic sample set");
  if (iso_set.pinned_index < 0)
    throw ConfigError("iso sample set lacks a pinned reference");

  const int n = iso_set.size();
  Rng rng(seed);
  std::vector<std::array<double, 3>> angles(n);
  std::vector<double> i4(n), i5(n);
  const double two_pi = 2.0 * std::numbers::pi;
  for (int j = 0; j < n; ++j) {
    angles[j] = {rng.uniform(0.0, two_pi), rng.uniform(0.0, two_pi),
                 rng.uniform(0.0, two_pi)};
    const auto [a, b] = pseudo_invariants(iso_set.tensors[j], a0);
    i4[j] = a;
    i5[j] = b;
  }

  double step = cfg.step0;
  std::vector<double> scratch;
  for (int sweep = 0; sweep < cfg.n_steps; ++sweep) {
    for (int j = 0; j < n; ++j) {
      const auto dir = rng.sphere_direction();
      const double s = rng.uniform(0.0, step);
      const std::array<double, 3> cand{angles[j][0] + s * dir[0],
                                       angles[j][1] + s * dir[1],
                                       angles[j][2] + s * dir[2]};
      const SymMat3 rot = rotate_strain(iso_set.tensors[j], cand);
      const auto [t4, t5] = pseudo_invariants(rot, a0);
      const double d_cur =
          nearest_sqdist2(i4.data(), i5.data(), n, i4[j], i5[j], j, scratch);
      const double d_new =
          nearest_sqdist2(i4.data(), i5.data(), n, t4, t5, j, scratch);
      if (!(d_new > d_cur)) continue;
      angles[j] = cand;
      i4[j] = t4;
      i5[j] = t5;
    }
    step *= cfg.decay;
  }

  SampleSet out;
  out.kind = SymmetryKind::TransIso;
  out.pinned_index = iso_set.pinned_index;
  out.seed = seed;
  out.config = cfg;
  out.delta = iso_set.delta;
  out.points.reserve(n);
  out.tensors.reserve(n);
  out.angles = std::move(angles);
  for (int j = 0; j < n; ++j) {
    const SymMat3 rot = rotate_strain(iso_set.tensors[j], out.angles[j]);
    const InvariantPoint base = iso_set.points[j];
    const auto [t4, t5] = pseudo_invariants(rot, a0);
    out.points.push_back(
        InvariantPoint::transiso(base.i1, base.i2, base.i3, t4, t5));
    out.tensors.push_back(rot);
  }
  return out;
}

SymMat3 solve_C_from_quintuple(const InvariantPoint& p, const SymMat3& A,
                               const SymMat3& lb, const SymMat3& ub,
                               std::uint64_t seed) {
  if (p.kind != SymmetryKind::TransIso)
    throw KindMismatch("quintuple solve needs a transversely isotropic point");

  // The structural direction is recovered from A = a0 (x) a0.
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es;
  {
    Eigen::Matrix3d af;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) af(i, j) = A(i, j);
    es.compute(af);
  }
  const Eigen::Vector3d av = es.eigenvectors().col(2);
  const UnitVec3 a0(av(0), av(1), av(2));

  const auto residual = [&](const SymMat3& C) {
    Eigen::Matrix<double, 5, 1> r;
    const InvariantPoint q = invariants(SymmetryKind::TransIso, C, &a0);
    r << q.i1 - p.i1, q.i2 - p.i2, q.i3 - p.i3, q.i4 - p.i4, q.i5 - p.i5;
    return r;
  };
  const auto jacobian = [&](const SymMat3& C) {
    const std::vector<SymMat3> g =
        invariant_gradients(SymmetryKind::TransIso, C, &A, &a0);
    Eigen::Matrix<double, 5, 6> J;
    for (int r = 0; r < 5; ++r) {
      // d/d(unique entries): off-diagonal unknowns enter the full tensor twice.
      J(r, 0) = g[r](0, 0);
      J(r, 1) = 2.0 * g[r](0, 1);
      J(r, 2) = 2.0 * g[r](0, 2);
      J(r, 3) = g[r](1, 1);
      J(r, 4) = 2.0 * g[r](1, 2);
      J(r, 5) = g[r](2, 2);
    }
    return J;
  };
  const auto clamp_box = [&](SymMat3& C) {
    for (int k = 0; k < 6; ++k) C.m[k] = std::clamp(C.m[k], lb.m[k], ub.m[k]);
  };

  const InvariantPoint triple = InvariantPoint::iso(p.i1, p.i2, p.i3);
  if (!physicality_check(triple))
    throw Unphysical("principal part of the quintuple is not realizable");
  const SymMat3 base = reconstruct_C(triple);

  Rng rng(seed);
  const int kStarts = 20, kIters = 200;
  const double two_pi = 2.0 * std::numbers::pi;
  for (int start = 0; start < kStarts; ++start) {
    SymMat3 C = start == 0
                    ? base
                    : rotate_strain(base, {rng.uniform(0.0, two_pi),
                                           rng.uniform(0.0, two_pi),
                                           rng.uniform(0.0, two_pi)});
    clamp_box(C);
    for (int it = 0; it < kIters; ++it) {
      const Eigen::Matrix<double, 5, 1> r = residual(C);
      if (r.lpNorm<Eigen::Infinity>() < 1e-10) {
        Eigen::Matrix3d cf;
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) cf(i, j) = C(i, j);
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> ce(cf);
        if (ce.eigenvalues()(0) > 0.0) return C;
        break;  // converged to a non-SPD branch; try another start
      }
      const Eigen::Matrix<double, 5, 6> J = jacobian(C);
      Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(J);
      cod.setThreshold(1e-12);
      const Eigen::Matrix<double, 6, 1> delta = cod.solve(-r);

      // Backtracking on the residual norm.
      double t = 1.0;
      const double r0 = r.squaredNorm();
      bool moved = false;
      for (int ls = 0; ls < 30; ++ls) {
        SymMat3 cand = C;
        for (int k = 0; k < 6; ++k) cand.m[k] += t * delta(k);
        clamp_box(cand);
        if (residual(cand).squaredNorm() < r0) {
          C = cand;
          moved = true;
          break;
        }
        t *= 0.5;
      }
      if (!moved) break;
    }
  }
  throw NoConvergence("quintuple could not be matched within the multistart budget");
}

std::vector<int> dedupe_indices(const std::vector<std::vector<double>>& rows,
                                double tol) {
  std::vector<int> kept;
  for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
    bool dup = false;
    for (int k : kept) {
      bool all_close = true;
      for (std::size_t d = 0; d < rows[i].size() && all_close; ++d)
        all_close = std::abs(rows[i][d] - rows[k][d]) < tol;
      if (all_close) {
        dup = true;
        break;
      }
    }
    if (!dup) kept.push_back(i);
  }
  return kept;
}

std::vector<InvariantPoint> dedupe(const std::vector<InvariantPoint>& points) {
  std::vector<std::vector<double>> rows;
  rows.reserve(points.size());
  for (const auto& p : points) {
    std::vector<double> r(p.dim());
    for (int k = 0; k < p.dim(); ++k) r[k] = p[k];
    rows.push_back(std::move(r));
  }
  const std::vector<int> kept = dedupe_indices(rows);
  std::vector<InvariantPoint> out;
  out.reserve(kept.size());
  for (int i : kept) out.push_back(points[i]);
  return out;
}

}  // namespace higp
