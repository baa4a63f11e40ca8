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

#include "higp/tensor.hpp"

namespace higp {

/// Scalar weights of the generator expansion S = sum_i c_i H_i;
/// 3 values for the isotropic basis, 6 for the transversely isotropic one.
struct CoeffVector {
  SymmetryKind kind = SymmetryKind::Iso;
  std::array<double, 6> c{};

  int size() const { return kind == SymmetryKind::Iso ? 3 : 6; }
  double operator[](int i) const { return c[i]; }
};

enum class EigenMultiplicity { Distinct, TwoEqual, AllEqual };

/// Diagnostics of one extraction solve.
struct ExtractionReport {
  double residual = 0.0;        // |S - sum c_i H_i|_F
  EigenMultiplicity multiplicity = EigenMultiplicity::Distinct;
  double condition = 0.0;       // estimate of the solve matrix conditioning
  bool rank_deficient = false;  // numerical rank below the coefficient count
  int rank = 0;
};

/// Isotropic extraction in principal space. Eigenvalues are clustered at
/// relative tolerance 1e-8; repeated clusters collapse to a reduced system
/// solved in the minimum-norm least-squares sense. Throws NotCoaxial when
/// S is not diagonal in C's eigenbasis.
std::pair<CoeffVector, ExtractionReport> extract_iso(const SymMat3& C,
                                                     const SymMat3& S);

/// Transversely isotropic extraction: all nine entries of the six
/// vectorized generators are stacked into a 9x6 least-squares system and
/// solved by a column-pivoting orthogonal factorization (minimum-norm on
/// rank deficiency).
std::pair<CoeffVector, ExtractionReport> extract_transiso(const SymMat3& C,
                                                          const SymMat3& S,
                                                          const SymMat3& A);

/// sum_i c_i H_i. Throws KindMismatch when the basis kind differs.
SymMat3 reconstruct_stress(const CoeffVector& coeffs, const GeneratorBasis& basis);

}  // namespace higp
