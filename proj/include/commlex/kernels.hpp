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

#ifndef COMMLEX_KERNELS_HPP_
#define COMMLEX_KERNELS_HPP_

#include <cstddef>
#include <string_view>

// Reduction kernels behind the correlation statistics. Every kernel
// accumulates into four stripes (stripe j takes elements j, j+4, j+8, ...)
// combined as (s0+s1)+(s2+s3), which is exactly the order an AVX2 4-lane
// register reduces in. With FP contraction off, the scalar and AVX2 variants
// therefore return bit-identical results, and outputs stay byte-stable
// across machines regardless of which variant the dispatcher picks.
namespace commlex::kernels {

enum class Backend { Scalar, Avx2 };

bool avx2_supported();

// Detected once at first use: Avx2 when the CPU supports it, else Scalar.
Backend active_backend();

// Overrides dispatch (tests exercise both paths). Throws
// Error(ErrorKind::BadConfig) if the backend is not usable on this machine.
void set_backend(Backend backend);

std::string_view backend_name(Backend backend);

// sum of v[0..n)
double sum(const double* v, std::size_t n);

// out[i] = |v[i] - c|
void abs_dev(double c, const double* v, double* out, std::size_t n);

// sum of (x[i] - cx) * (y[i] - cy)
double centered_sumprod(const double* x, double cx, const double* y, double cy,
                        std::size_t n);

// sum of (a[i] - da[i] - ca) * (b[i] - db[i] - cb); the inner product of two
// double-centered distance-matrix rows, with da/db the column means and
// ca/cb the row-mean-minus-grand-mean shifts.
double shifted_centered_dot(const double* a, const double* da, double ca,
                            const double* b, const double* db, double cb,
                            std::size_t n);

namespace scalar {
double sum(const double* v, std::size_t n);
void abs_dev(double c, const double* v, double* out, std::size_t n);
double centered_sumprod(const double* x, double cx, const double* y, double cy,
                        std::size_t n);
double shifted_centered_dot(const double* a, const double* da, double ca,
                            const double* b, const double* db, double cb,
                            std::size_t n);
}  // namespace scalar

#if defined(__x86_64__) || defined(__i386__) || defined(_M_X64)
#define COMMLEX_HAVE_AVX2_KERNELS 1
namespace avx2 {
double sum(const double* v, std::size_t n);
void abs_dev(double c, const double* v, double* out, std::size_t n);
double centered_sumprod(const double* x, double cx, const double* y, double cy,
                        std::size_t n);
double shifted_centered_dot(const double* a, const double* da, double ca,
                            const double* b, const double* db, double cb,
                            std::size_t n);
}  // namespace avx2
#endif

}  // namespace commlex::kernels

#endif  // COMMLEX_KERNELS_HPP_
