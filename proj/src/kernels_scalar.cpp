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

#include <cmath>

#include "kernels_impl.hpp"

namespace higp::kernels::detail {

void sqdist_batch_scalar(const double* const* cols, std::size_t dim,
                         std::size_t n, const double* q, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
      const double diff = cols[k][i] - q[k];
      acc = acc + diff * diff;
    }
    out[i] = acc;
  }
}

bool halfspaces_contain_scalar(const double* nx, const double* ny,
                               const double* nz, const double* off,
                               std::size_t nfaces, double x, double y, double z,
                               double tol) {
  for (std::size_t i = 0; i < nfaces; ++i) {
    const double t = nx[i] * x + ny[i] * y + nz[i] * z;
    if (!(t <= off[i] + tol)) return false;
  }
  return true;
}

void matern32_row_scalar(const double* const* cols, std::size_t dim,
                         std::size_t n, const double* q,
                         const double* inv_theta, double* out) {
  constexpr double kSqrt3 = 1.7320508075688772;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    double p = 1.0;
    for (std::size_t k = 0; k < dim; ++k) {
      const double a = kSqrt3 * std::abs(cols[k][i] - q[k]) * inv_theta[k];
      s = s + a;
      p = p * (1.0 + a);
    }
    out[i] = p * std::exp(-s);
  }
}

}  // namespace higp::kernels::detail
