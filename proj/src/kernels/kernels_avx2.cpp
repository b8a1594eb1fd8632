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

// AVX2 variants. Lane j of the accumulator holds stripe j (elements j, j+4,
// j+8, ...); tail elements land in their stripe and the final reduction is
// (l0+l1)+(l2+l3), the same operation sequence as the scalar kernels, so
// results match them bit for bit. No FMA: mul then add, as written in the
// scalar reference.

#include "commlex/kernels.hpp"

#ifdef COMMLEX_HAVE_AVX2_KERNELS

#include <immintrin.h>

#include <cmath>

namespace commlex::kernels::avx2 {

namespace {

const __m256d kSignMask = _mm256_set1_pd(-0.0);

inline double reduce_with_tail(__m256d acc, const double* tail_terms,
                               std::size_t tail_n) {
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  for (std::size_t j = 0; j < tail_n; ++j) lanes[j] += tail_terms[j];
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

}  // namespace

double sum(const double* v, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_loadu_pd(v + i));
  }
  double tail[3];
  std::size_t tail_n = n - i;
  for (std::size_t j = 0; j < tail_n; ++j) tail[j] = v[i + j];
  return reduce_with_tail(acc, tail, tail_n);
}

void abs_dev(double c, const double* v, double* out, std::size_t n) {
  const __m256d vc = _mm256_set1_pd(c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d d = _mm256_sub_pd(_mm256_loadu_pd(v + i), vc);
    _mm256_storeu_pd(out + i, _mm256_andnot_pd(kSignMask, d));
  }
  for (; i < n; ++i) out[i] = std::fabs(v[i] - c);
}

double centered_sumprod(const double* x, double cx, const double* y, double cy,
                        std::size_t n) {
  const __m256d vcx = _mm256_set1_pd(cx);
  const __m256d vcy = _mm256_set1_pd(cy);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(x + i), vcx);
    __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(y + i), vcy);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(dx, dy));
  }
  double tail[3];
  std::size_t tail_n = n - i;
  for (std::size_t j = 0; j < tail_n; ++j) {
    tail[j] = (x[i + j] - cx) * (y[i + j] - cy);
  }
  return reduce_with_tail(acc, tail, tail_n);
}

double shifted_centered_dot(const double* a, const double* da, double ca,
                            const double* b, const double* db, double cb,
                            std::size_t n) {
  const __m256d vca = _mm256_set1_pd(ca);
  const __m256d vcb = _mm256_set1_pd(cb);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d va = _mm256_sub_pd(
        _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(da + i)), vca);
    __m256d vb = _mm256_sub_pd(
        _mm256_sub_pd(_mm256_loadu_pd(b + i), _mm256_loadu_pd(db + i)), vcb);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(va, vb));
  }
  double tail[3];
  std::size_t tail_n = n - i;
  for (std::size_t j = 0; j < tail_n; ++j) {
    tail[j] = (a[i + j] - da[i + j] - ca) * (b[i + j] - db[i + j] - cb);
  }
  return reduce_with_tail(acc, tail, tail_n);
}

}  // namespace commlex::kernels::avx2

#endif  // COMMLEX_HAVE_AVX2_KERNELS
