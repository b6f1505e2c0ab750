// Copyright 2026 The decohere Authors
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

// Compiled with -mavx2 -mfma. Nothing here may run before the dispatcher has
// confirmed CPU support.

#include <immintrin.h>

#include "decohere/numcore/kernels.hpp"

namespace decohere::numcore::kernels {
namespace {

// Two complex products per register: (ar, ai) * (br, bi) for both lanes.
inline __m256d cmul2(__m256d a, __m256d b) {
  const __m256d are = _mm256_movedup_pd(a);
  const __m256d aim = _mm256_permute_pd(a, 0xF);
  const __m256d bswap = _mm256_permute_pd(b, 0x5);
  return _mm256_fmaddsub_pd(are, b, _mm256_mul_pd(aim, bswap));
}

void cgemm_avx2(std::size_t m, std::size_t n, std::size_t k, const Complex* a,
                const Complex* b, Complex* c) {
  const std::size_t n2 = n & ~std::size_t{1};
  for (std::size_t i = 0; i < m; ++i) {
    double* crow = reinterpret_cast<double*>(c + i * n);
    for (std::size_t j = 0; j < 2 * n; ++j) crow[j] = 0.0;
    for (std::size_t p = 0; p < k; ++p) {
      const Complex aip = a[i * k + p];
      const __m256d are = _mm256_set1_pd(aip.real());
      const __m256d aim = _mm256_set1_pd(aip.imag());
      const double* brow = reinterpret_cast<const double*>(b + p * n);
      std::size_t j = 0;
      for (; j < n2; j += 2) {
        const __m256d bv = _mm256_loadu_pd(brow + 2 * j);
        const __m256d bswap = _mm256_permute_pd(bv, 0x5);
        const __m256d prod =
            _mm256_fmaddsub_pd(are, bv, _mm256_mul_pd(aim, bswap));
        _mm256_storeu_pd(crow + 2 * j,
                         _mm256_add_pd(_mm256_loadu_pd(crow + 2 * j), prod));
      }
      for (; j < n; ++j) {
        reinterpret_cast<Complex*>(crow)[j] += aip * b[p * n + j];
      }
    }
  }
}

void cgemv_avx2(std::size_t m, std::size_t n, const Complex* a,
                const Complex* x, Complex* y) {
  const std::size_t n2 = n & ~std::size_t{1};
  const double* xd = reinterpret_cast<const double*>(x);
  for (std::size_t i = 0; i < m; ++i) {
    const double* arow = reinterpret_cast<const double*>(a + i * n);
    __m256d acc = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j < n2; j += 2) {
      acc = _mm256_add_pd(acc, cmul2(_mm256_loadu_pd(arow + 2 * j),
                                     _mm256_loadu_pd(xd + 2 * j)));
    }
    const __m128d lo = _mm256_castpd256_pd128(acc);
    const __m128d hi = _mm256_extractf128_pd(acc, 1);
    alignas(16) double sum[2];
    _mm_store_pd(sum, _mm_add_pd(lo, hi));
    Complex total{sum[0], sum[1]};
    for (; j < n; ++j) total += a[i * n + j] * x[j];
    y[i] = total;
  }
}

void daxpy_avx2(std::size_t n, double alpha, const double* x, double* y) {
  const __m256d av = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i),
                                            _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void scale_by_real_avx2(std::size_t n, const double* factors, Complex* data) {
  double* d = reinterpret_cast<double*>(data);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m128d f = _mm_loadu_pd(factors + i);
    // (f0, f0, f1, f1)
    const __m256d ff = _mm256_permute4x64_pd(_mm256_castpd128_pd256(f), 0x50);
    _mm256_storeu_pd(d + 2 * i, _mm256_mul_pd(_mm256_loadu_pd(d + 2 * i), ff));
  }
  for (; i < n; ++i) data[i] *= factors[i];
}

}  // namespace

const KernelTable& avx2_table_unchecked() {
  static const KernelTable table{Isa::Avx2, cgemm_avx2, cgemv_avx2, daxpy_avx2,
                                 scale_by_real_avx2};
  return table;
}

}  // namespace decohere::numcore::kernels
