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

namespace higp::kernels::detail {

void sqdist_batch_scalar(const double* const* cols, std::size_t dim,
                         std::size_t n, const double* q, double* out);
bool halfspaces_contain_scalar(const double* nx, const double* ny,
                               const double* nz, const double* off,
                               std::size_t nfaces, double x, double y, double z,
                               double tol);
void matern32_row_scalar(const double* const* cols, std::size_t dim,
                         std::size_t n, const double* q,
                         const double* inv_theta, double* out);

#if defined(__x86_64__) || defined(_M_X64)
#define HIGP_HAVE_AVX2_TU 1
void sqdist_batch_avx2(const double* const* cols, std::size_t dim,
                       std::size_t n, const double* q, double* out);
bool halfspaces_contain_avx2(const double* nx, const double* ny,
                             const double* nz, const double* off,
                             std::size_t nfaces, double x, double y, double z,
                             double tol);
void matern32_row_avx2(const double* const* cols, std::size_t dim,
                       std::size_t n, const double* q, const double* inv_theta,
                       double* out);
#endif

}  // namespace higp::kernels::detail
