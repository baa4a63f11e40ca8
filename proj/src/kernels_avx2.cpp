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

// Compiled with -mavx2 -ffp-contract=off. No fused multiply-adds: every
// lane performs the same mul/add sequence as the scalar reference so the
// two paths agree bit for bit.

#include "kernels_impl.hpp"

#ifdef HIGP_HAVE_AVX2_TU

#include <immintrin.h>

#include <cmath>

namespace higp::kernels::detail {

namespace {

constexpr std::size_t kMaxDim = 16;

// Column pointers shifted by a row offset, for scalar tail handling.
inline void shift_cols(const double* const* cols, std::size_t dim,
                       std::size_t offset, const double** shifted) {
  for (std::size_t k = 0; k < dim; ++k) shifted[k] = cols[k] + offset;
}

}  // namespace

void sqdist_batch_avx2(const double* const* cols, std::size_t dim,
                       std::size_t n, const double* q, double* out) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t k = 0; k < dim; ++k) {
      const __m256d x = _mm256_loadu_pd(cols[k] + i);
      const __m256d diff = _mm256_sub_pd(x, _mm256_set1_pd(q[k]));
      acc = _mm256_add_pd(acc, _mm256_mul_pd(diff, diff));
    }
    _mm256_storeu_pd(out + i, acc);
  }
  if (i < n) {
    const double* shifted[kMaxDim];
    shift_cols(cols, dim, i, shifted);
    sqdist_batch_scalar(shifted, dim, n - i, q, out + i);
  }
}

bool halfspaces_contain_avx2(const double* nx, const double* ny,
                             const double* nz, const double* off,
                             std::size_t nfaces, double x, double y, double z,
                             double tol) {
  const __m256d vx = _mm256_set1_pd(x);
  const __m256d vy = _mm256_set1_pd(y);
  const __m256d vz = _mm256_set1_pd(z);
  const __m256d vtol = _mm256_set1_pd(tol);
  std::size_t i = 0;
  for (; i + 4 <= nfaces; i += 4) {
    const __m256d t = _mm256_add_pd(
        _mm256_add_pd(_mm256_mul_pd(_mm256_loadu_pd(nx + i), vx),
                      _mm256_mul_pd(_mm256_loadu_pd(ny + i), vy)),
        _mm256_mul_pd(_mm256_loadu_pd(nz + i), vz));
    const __m256d rhs = _mm256_add_pd(_mm256_loadu_pd(off + i), vtol);
    // "not (t <= rhs)" catches NaN the same way the scalar loop does.
    const __m256d bad = _mm256_cmp_pd(t, rhs, _CMP_NLE_UQ);
    if (_mm256_movemask_pd(bad) != 0) return false;
  }
  if (i < nfaces)
    return halfspaces_contain_scalar(nx + i, ny + i, nz + i, off + i,
                                     nfaces - i, x, y, z, tol);
  return true;
}

void matern32_row_avx2(const double* const* cols, std::size_t dim,
                       std::size_t n, const double* q, const double* inv_theta,
                       double* out) {
  constexpr double kSqrt3 = 1.7320508075688772;
  const __m256d sqrt3 = _mm256_set1_pd(kSqrt3);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d absmask =
      _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d s = _mm256_setzero_pd();
    __m256d p = one;
    for (std::size_t k = 0; k < dim; ++k) {
      const __m256d diff =
          _mm256_sub_pd(_mm256_loadu_pd(cols[k] + i), _mm256_set1_pd(q[k]));
      const __m256d a =
          _mm256_mul_pd(_mm256_mul_pd(sqrt3, _mm256_and_pd(diff, absmask)),
                        _mm256_set1_pd(inv_theta[k]));
      s = _mm256_add_pd(s, a);
      p = _mm256_mul_pd(p, _mm256_add_pd(one, a));
    }
    alignas(32) double sv[4], pv[4];
    _mm256_store_pd(sv, s);
    _mm256_store_pd(pv, p);
    for (int lane = 0; lane < 4; ++lane)
      out[i + lane] = pv[lane] * std::exp(-sv[lane]);
  }
  if (i < n) {
    const double* shifted[kMaxDim];
    shift_cols(cols, dim, i, shifted);
    matern32_row_scalar(shifted, dim, n - i, q, inv_theta, out + i);
  }
}

}  // namespace higp::kernels::detail

#endif  // HIGP_HAVE_AVX2_TU
