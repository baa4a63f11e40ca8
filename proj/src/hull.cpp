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

#include "higp/hull.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "higp/kernels.hpp"
#include "higp/rng.hpp"

namespace higp {

std::vector<Mat3> lhs_sample(const DomainBounds& bounds, int n, std::uint64_t seed) {
  if (n < 1) throw Error("lhs_sample: n must be >= 1");
  Rng rng(seed);
  std::vector<Mat3> out(n);
  std::vector<int> perm(n);
  for (int k = 0; k < 9; ++k) {
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i)
      std::swap(perm[i], perm[static_cast<int>(rng.below(i + 1))]);
    const auto [lo, hi] = bounds.component_bounds(k);
    const double width = (hi - lo) / n;
    for (int i = 0; i < n; ++i)
      out[i].a[k] = lo + (perm[i] + rng.uniform01()) * width;
  }
  return out;
}

namespace {

using P3 = std::array<double, 3>;

P3 sub(const P3& a, const P3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
P3 cross(const P3& a, const P3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}
double dot(const P3& a, const P3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
double norm(const P3& a) { return std::sqrt(dot(a, a)); }

struct Tri {
  int a, b, c;
  P3 n;        // not normalized during construction
  double d;    // n . x = d on the plane
  bool alive = true;
};

Tri make_tri(const std::vector<P3>& pts, int a, int b, int c, const P3& interior) {
  Tri t{a, b, c, {}, 0.0, true};
  t.n = cross(sub(pts[b], pts[a]), sub(pts[c], pts[a]));
  t.d = dot(t.n, pts[a]);
  if (dot(t.n, interior) > t.d) {  // flip to outward orientation
    std::swap(t.b, t.c);
    t.n = {-t.n[0], -t.n[1], -t.n[2]};
    t.d = -t.d;
  }
  return t;
}

}  // namespace

ConvexHull3 convex_hull(const std::vector<P3>& points) {
  const int n = static_cast<int>(points.size());
  if (n < 4) throw DegenerateCloud("need at least 4 points");

  double scale = 0.0;
  for (const auto& p : points)
    for (double v : p) scale = std::max(scale, std::abs(v));
  scale = std::max(scale, 1.0);
  const double eps = 1e-9 * scale;

  // Initial simplex: two extreme points, the farthest from their line,
  // then the farthest from that plane.
  int i0 = 0, i1 = 0;
  for (int i = 1; i < n; ++i) {
    if (points[i][0] < points[i0][0]) i0 = i;
    if (points[i][0] > points[i1][0]) i1 = i;
  }
  if (norm(sub(points[i1], points[i0])) < eps) {
    for (int i = 0; i < n; ++i)
      if (norm(sub(points[i], points[i0])) > norm(sub(points[i1], points[i0])))
        i1 = i;
  }
  const P3 line = sub(points[i1], points[i0]);
  if (norm(line) < eps) throw DegenerateCloud("all points coincide");
  int i2 = -1;
  double best = eps;
  for (int i = 0; i < n; ++i) {
    const double d = norm(cross(line, sub(points[i], points[i0]))) / norm(line);
    if (d > best) {
      best = d;
      i2 = i;
    }
  }
  if (i2 < 0) throw DegenerateCloud("all points collinear");
  const P3 pn = cross(line, sub(points[i2], points[i0]));
  int i3 = -1;
  best = eps;
  for (int i = 0; i < n; ++i) {
    const double d = std::abs(dot(pn, sub(points[i], points[i0]))) / norm(pn);
    if (d > best) {
      best = d;
      i3 = i;
    }
  }
  if (i3 < 0) throw DegenerateCloud("all points coplanar");

  P3 interior{};
  for (int k = 0; k < 3; ++k)
    interior[k] = 0.25 * (points[i0][k] + points[i1][k] + points[i2][k] + points[i3][k]);

  std::vector<Tri> tris;
  tris.push_back(make_tri(points, i0, i1, i2, interior));
  tris.push_back(make_tri(points, i0, i1, i3, interior));
  tris.push_back(make_tri(points, i0, i2, i3, interior));
  tris.push_back(make_tri(points, i1, i2, i3, interior));

  // Incremental insertion: remove faces visible from the new point and
  // re-triangulate across the horizon edges.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int idx : order) {
    if (idx == i0 || idx == i1 || idx == i2 || idx == i3) continue;
    const P3& p = points[idx];
    std::vector<int> visible;
    for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
      if (!tris[t].alive) continue;
      const double side = dot(tris[t].n, p) - tris[t].d;
      if (side > eps * std::max(1.0, norm(tris[t].n))) visible.push_back(t);
    }
    if (visible.empty()) continue;

    std::map<std::pair<int, int>, int> edge_count;
    for (int t : visible) {
      tris[t].alive = false;
      const int vv[3] = {tris[t].a, tris[t].b, tris[t].c};
      for (int e = 0; e < 3; ++e) {
        int u = vv[e], w = vv[(e + 1) % 3];
        if (u > w) std::swap(u, w);
        edge_count[{u, w}]++;
      }
    }
    for (const auto& [edge, count] : edge_count) {
      if (count != 1) continue;  // interior edge of the visible patch
      tris.push_back(make_tri(points, edge.first, edge.second, idx, interior));
    }
  }

  // Compact vertices and emit unit-normal faces.
  ConvexHull3 hull;
  std::map<int, int> remap;
  for (const Tri& t : tris) {
    if (!t.alive) continue;
    for (int v : {t.a, t.b, t.c})
      if (!remap.count(v)) {
        remap[v] = static_cast<int>(hull.vertices.size());
        hull.vertices.push_back(points[v]);
      }
    const double len = norm(t.n);
    if (len < 1e-300) continue;
    HullFace f;
    f.v = {remap[t.a], remap[t.b], remap[t.c]};
    f.normal = {t.n[0] / len, t.n[1] / len, t.n[2] / len};
    f.offset = t.d / len;
    hull.faces.push_back(f);
  }
  if (hull.faces.size() < 4) throw DegenerateCloud("hull construction collapsed");

  hull.nx.reserve(hull.faces.size());
  for (const HullFace& f : hull.faces) {
    hull.nx.push_back(f.normal[0]);
    hull.ny.push_back(f.normal[1]);
    hull.nz.push_back(f.normal[2]);
    hull.off.push_back(f.offset);
  }
  return hull;
}

bool ConvexHull3::contains(const P3& p, double tol) const {
  return kernels::halfspaces_contain(nx.data(), ny.data(), nz.data(), off.data(),
                                     off.size(), p[0], p[1], p[2], tol);
}

std::array<P3, 2> ConvexHull3::bounding_box() const {
  P3 lo{1e300, 1e300, 1e300}, hi{-1e300, -1e300, -1e300};
  for (const auto& v : vertices)
    for (int k = 0; k < 3; ++k) {
      lo[k] = std::min(lo[k], v[k]);
      hi[k] = std::max(hi[k], v[k]);
    }
  return {lo, hi};
}

ConvexHull3 build_hull(const DomainBounds& bounds, int n_cloud, std::uint64_t seed) {
  const std::vector<Mat3> cloud = lhs_sample(bounds, n_cloud, seed);
  std::vector<P3> pts;
  pts.reserve(cloud.size());
  for (const Mat3& F : cloud) {
    if (F.det() <= 0.0) continue;
    const InvariantPoint p = principal_invariants(right_cauchy_green(F));
    pts.push_back({p.i1, p.i2, p.i3});
  }
  if (pts.size() < 4) throw DegenerateCloud("too few admissible samples");
  return convex_hull(pts);
}

bool point_in_hull(const ConvexHull3& hull, const InvariantPoint& p, double tol) {
  return hull.contains({p.i1, p.i2, p.i3}, tol);
}

}  // namespace higp
