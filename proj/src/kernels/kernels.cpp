// Copyright 2026 The commlex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commlex/kernels.hpp"

#include <atomic>
#include <cmath>
#include <string>

#include "commlex/error.hpp"

namespace commlex::kernels {

namespace scalar {

double sum(const double* v, std::size_t n) {
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    s0 += v[i];
    s1 += v[i + 1];
    s2 += v[i + 2];
    s3 += v[i + 3];
  }
  double s[4] = {s0, s1, s2, s3};
  for (std::size_t j = 0; i + j < n; ++j) s[j] += v[i + j];
  return (s[0] + s[1]) + (s[2] + s[3]);
}

void abs_dev(double c, const double* v, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::fabs(v[i] - c);
}

double centered_sumprod(const double* x, double cx, const double* y, double cy,
                        std::size_t n) {
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    s0 += (x[i] - cx) * (y[i] - cy);
    s1 += (x[i + 1] - cx) * (y[i + 1] - cy);
    s2 += (x[i + 2] - cx) * (y[i + 2] - cy);
    s3 += (x[i + 3] - cx) * (y[i + 3] - cy);
  }
  double s[4] = {s0, s1, s2, s3};
  for (std::size_t j = 0; i + j < n; ++j) {
    s[j] += (x[i + j] - cx) * (y[i + j] - cy);
  }
  return (s[0] + s[1]) + (s[2] + s[3]);
}

double shifted_centered_dot(const double* a, const double* da, double ca,
                            const double* b, const double* db, double cb,
                            std::size_t n) {
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    s0 += (a[i] - da[i] - ca) * (b[i] - db[i] - cb);
    s1 += (a[i + 1] - da[i + 1] - ca) * (b[i + 1] - db[i + 1] - cb);
    s2 += (a[i + 2] - da[i + 2] - ca) * (b[i + 2] - db[i + 2] - cb);
    s3 += (a[i + 3] - da[i + 3] - ca) * (b[i + 3] - db[i + 3] - cb);
  }
  double s[4] = {s0, s1, s2, s3};
  for (std::size_t j = 0; i + j < n; ++j) {
    s[j] += (a[i + j] - da[i + j] - ca) * (b[i + j] - db[i + j] - cb);
  }
  return (s[0] + s[1]) + (s[2] + s[3]);
}

}  // namespace scalar

bool avx2_supported() {
#if defined(COMMLEX_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

Backend detect_backend() {
  return avx2_supported() ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend>& backend_slot() {
  static std::atomic<Backend> slot{detect_backend()};
  return slot;
}

}  // namespace

Backend active_backend() {
  return backend_slot().load(std::memory_order_relaxed);
}

void set_backend(Backend backend) {
  if (backend == Backend::Avx2 && !avx2_supported()) {
    raise(ErrorKind::BadConfig, "AVX2 backend not supported on this CPU");
  }
  backend_slot().store(backend, std::memory_order_relaxed);
}

std::string_view backend_name(Backend backend) {
  return backend == Backend::Avx2 ? "avx2" : "scalar";
}

double sum(const double* v, std::size_t n) {
#ifdef COMMLEX_HAVE_AVX2_KERNELS
  if (active_backend() == Backend::Avx2) return avx2::sum(v, n);
#endif
  return scalar::sum(v, n);
}

void abs_dev(double c, const double* v, double* out, std::size_t n) {
#ifdef COMMLEX_HAVE_AVX2_KERNELS
  if (active_backend() == Backend::Avx2) return avx2::abs_dev(c, v, out, n);
#endif
  scalar::abs_dev(c, v, out, n);
}

double centered_sumprod(const double* x, double cx, const double* y, double cy,
                        std::size_t n) {
#ifdef COMMLEX_HAVE_AVX2_KERNELS
  if (active_backend() == Backend::Avx2) {
    return avx2::centered_sumprod(x, cx, y, cy, n);
  }
#endif
  return scalar::centered_sumprod(x, cx, y, cy, n);
}

double shifted_centered_dot(const double* a, const double* da, double ca,
                            const double* b, const double* db, double cb,
                            std::size_t n) {
#ifdef COMMLEX_HAVE_AVX2_KERNELS
  if (active_backend() == Backend::Avx2) {
    return avx2::shifted_centered_dot(a, da, ca, b, db, cb, n);
  }
#endif
  return scalar::shifted_centered_dot(a, da, ca, b, db, cb, n);
}

}  // namespace commlex::kernels
