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

#include <cstddef>
#include <limits>

// Data-parallel inner kernels behind the sampler, hull tests and the GP
// correlation assembly. Each kernel has a scalar reference implementation
// and an AVX2 variant; the active one is chosen once at runtime. Both
// variants perform the per-element operations in the same order, so their
// results are bitwise identical (verified by the equivalence tests).

namespace higp::kernels {

/// out[i] = sum_k (cols[k][i] - q[k])^2. Point coordinates are stored
/// column-wise (one contiguous array per dimension).
void sqdist_batch(const double* const* cols, std::size_t dim, std::size_t n,
                  const double* q, double* out);

/// true when nx[i]*x + ny[i]*y + nz[i]*z <= off[i] + tol for every face.
bool halfspaces_contain(const double* nx, const double* ny, const double* nz,
                        const double* off, std::size_t nfaces, double x,
                        double y, double z, double tol);

/// Matern 3/2 correlation of q against n points:
/// out[i] = prod_k (1 + a_ik) * exp(-sum_k a_ik),
/// a_ik = sqrt(3) * |cols[k][i] - q[k]| * inv_theta[k].
void matern32_row(const double* const* cols, std::size_t dim, std::size_t n,
                  const double* q, const double* inv_theta, double* out);

constexpr std::size_t kNoSkip = std::numeric_limits<std::size_t>::max();

/// Minimum of d[0..n) ignoring index `skip`; +inf when nothing remains.
double min_excluding(const double* d, std::size_t n, std::size_t skip);

enum class Isa { Scalar, Avx2 };

/// Instruction set selected for this process (env HIGP_SIMD=scalar|avx2
/// overrides CPU detection).
Isa active_isa();

/// Force a specific implementation; used by the equivalence tests.
void force_isa(Isa isa);

bool avx2_supported();

}  // namespace higp::kernels
