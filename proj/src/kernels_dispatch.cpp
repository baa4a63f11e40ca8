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

#include "higp/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "kernels_impl.hpp"

namespace higp::kernels {

namespace {

using SqdistFn = void (*)(const double* const*, std::size_t, std::size_t,
                          const double*, double*);
using HalfspaceFn = bool (*)(const double*, const double*, const double*,
                             const double*, std::size_t, double, double, double,
                             double);
using MaternFn = void (*)(const double* const*, std::size_t, std::size_t,
                          const double*, const double*, double*);

struct Table {
  Isa isa;
  SqdistFn sqdist;
  HalfspaceFn halfspace;
  MaternFn matern;
};

constexpr Table kScalar{Isa::Scalar, detail::sqdist_batch_scalar,
                        detail::halfspaces_contain_scalar,
                        detail::matern32_row_scalar};

#ifdef HIGP_HAVE_AVX2_TU
constexpr Table kAvx2{Isa::Avx2, detail::sqdist_batch_avx2,
                      detail::halfspaces_contain_avx2,
                      detail::matern32_row_avx2};
#endif

Table pick_table() {
  if (const char* env = std::getenv("HIGP_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) return kScalar;
#ifdef HIGP_HAVE_AVX2_TU
    if (std::strcmp(env, "avx2") == 0 && avx2_supported()) return kAvx2;
#endif
  }
#ifdef HIGP_HAVE_AVX2_TU
  if (avx2_supported()) return kAvx2;
#endif
  return kScalar;
}

std::atomic<const Table*> g_table{nullptr};

const Table& table() {
  const Table* t = g_table.load(std::memory_order_acquire);
  if (!t) {
    static const Table chosen = pick_table();
    g_table.store(&chosen, std::memory_order_release);
    t = &chosen;
  }
  return *t;
}

}  // namespace

bool avx2_supported() {
#if defined(HIGP_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

Isa active_isa() { return table().isa; }

void force_isa(Isa isa) {
  static Table forced;
  if (isa == Isa::Scalar) {
    forced = kScalar;
  } else {
#ifdef HIGP_HAVE_AVX2_TU
    forced = kAvx2;
#else
    forced = kScalar;
#endif
  }
  g_table.store(&forced, std::memory_order_release);
}

void sqdist_batch(const double* const* cols, std::size_t dim, std::size_t n,
                  const double* q, double* out) {
  table().sqdist(cols, dim, n, q, out);
}

bool halfspaces_contain(const double* nx, const double* ny, const double* nz,
                        const double* off, std::size_t nfaces, double x,
                        double y, double z, double tol) {
  return table().halfspace(nx, ny, nz, off, nfaces, x, y, z, tol);
}

void matern32_row(const double* const* cols, std::size_t dim, std::size_t n,
                  const double* q, const double* inv_theta, double* out) {
  table().matern(cols, dim, n, q, inv_theta, out);
}

double min_excluding(const double* d, std::size_t n, std::size_t skip) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    if (i == skip) continue;
    if (d[i] < best) best = d[i];
  }
  return best;
}

}  // namespace higp::kernels
