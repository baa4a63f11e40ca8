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

#include "higp/coeffs.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace higp {

namespace {

Eigen::Matrix3d to_eigen(const SymMat3& s) {
  Eigen::Matrix3d m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = s(i, j);
  return m;
}

double residual_of(const CoeffVector& c, const GeneratorBasis& basis,
                   const SymMat3& S) {
  return (reconstruct_stress(c, basis) - S).frobenius();
}

}  // namespace

std::pair<CoeffVector, ExtractionReport> extract_iso(const SymMat3& C,
                                                     const SymMat3& S) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(to_eigen(C));
  if (es.info() != Eigen::Success)
    throw IllConditioned("eigendecomposition of C failed");
  const Eigen::Vector3d lam = es.eigenvalues();
  const Eigen::Matrix3d Q = es.eigenvectors();
  if (lam(0) <= 0.0) throw SingularC("C is not positive definite");

  // S must be diagonal in C's eigenbasis for an isotropic response.
  const Eigen::Matrix3d Sp = Q.transpose() * to_eigen(S) * Q;
  const double snorm = std::max(1.0, to_eigen(S).norm());
  double offdiag = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) offdiag = std::max(offdiag, std::abs(Sp(i, j)));
  if (offdiag > 1e-8 * snorm)
    throw NotCoaxial("S is not diagonal in the eigenbasis of C");

  // Cluster repeated eigenvalues (relative tolerance 1e-8).
  const double scale = std::max({std::abs(lam(0)), std::abs(lam(1)),
                                 std::abs(lam(2)), 1e-300});
  std::array<int, 3> cluster{0, 0, 0};
  int nclusters = 1;
  for (int i = 1; i < 3; ++i) {
    bool merged = false;
    for (int j = 0; j < i && !merged; ++j)
      if (std::abs(lam(i) - lam(j)) <= 1e-8 * scale) {
        cluster[i] = cluster[j];
        merged = true;
      }
    if (!merged) cluster[i] = nclusters++;
  }

  // One equation per distinct eigenvalue: c1 + c2*lam + c3/lam = lam_S.
  Eigen::MatrixXd V(nclusters, 3);
  Eigen::VectorXd b(nclusters);
  std::array<bool, 3> seen{false, false, false};
  int row = 0;
  for (int i = 0; i < 3; ++i) {
    if (seen[cluster[i]]) continue;
    seen[cluster[i]] = true;
    V(row, 0) = 1.0;
    V(row, 1) = lam(i);
    V(row, 2) = 1.0 / lam(i);
    b(row) = Sp(i, i);
    ++row;
  }

  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(V);
  cod.setThreshold(1e-10);
  const Eigen::Vector3d x = cod.solve(b);

  CoeffVector out;
  out.kind = SymmetryKind::Iso;
  out.c = {x(0), x(1), x(2), 0.0, 0.0, 0.0};

  ExtractionReport report;
  report.multiplicity = nclusters == 3   ? EigenMultiplicity::Distinct
                        : nclusters == 2 ? EigenMultiplicity::TwoEqual
                                         : EigenMultiplicity::AllEqual;
  report.rank = static_cast<int>(cod.rank());
  report.rank_deficient = report.rank < 3;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(V);
  const auto& sv = svd.singularValues();
  report.condition = sv(sv.size() - 1) > 0.0 ? sv(0) / sv(sv.size() - 1)
                                             : std::numeric_limits<double>::infinity();
  report.residual = residual_of(out, generator_basis(SymmetryKind::Iso, C), S);
  return {out, report};
}

std::pair<CoeffVector, ExtractionReport> extract_transiso(const SymMat3& C,
                                                          const SymMat3& S,
                                                          const SymMat3& A) {
  const GeneratorBasis basis = generator_basis(SymmetryKind::TransIso, C, &A);

  // Stack all nine entries of each generator; the fully determined six-row
  // variant is less robust.
  Eigen::MatrixXd M(9, 6);
  Eigen::VectorXd b(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int r = 3 * i + j;
      b(r) = S(i, j);
      for (int g = 0; g < 6; ++g) M(r, g) = basis.g[g](i, j);
    }

  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(M);
  cod.setThreshold(1e-10);
  const Eigen::VectorXd x = cod.solve(b);

  CoeffVector out;
  out.kind = SymmetryKind::TransIso;
  for (int g = 0; g < 6; ++g) out.c[g] = x(g);

  ExtractionReport report;
  report.rank = static_cast<int>(cod.rank());
  report.rank_deficient = report.rank < 6;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
  const auto& sv = svd.singularValues();
  report.condition = sv(5) > 0.0 ? sv(0) / sv(5)
                                 : std::numeric_limits<double>::infinity();
  report.residual = residual_of(out, basis, S);
  return {out, report};
}

SymMat3 reconstruct_stress(const CoeffVector& coeffs, const GeneratorBasis& basis) {
  if (coeffs.kind != basis.kind)
    throw KindMismatch("coefficient and basis kinds differ");
  SymMat3 s = SymMat3::zero();
  for (int i = 0; i < coeffs.size(); ++i) s = s + basis.g[i] * coeffs[i];
  return s;
}

}  // namespace higp
