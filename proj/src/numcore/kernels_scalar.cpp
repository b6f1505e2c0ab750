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

#include "decohere/numcore/kernels.hpp"

namespace decohere::numcore::kernels {
namespace {

void cgemm_scalar(std::size_t m, std::size_t n, std::size_t k,
                  const Complex* a, const Complex* b, Complex* c) {
  for (std::size_t i = 0; i < m; ++i) {
    Complex* crow = c + i * n;
    for (std::size_t j = 0; j < n; ++j) crow[j] = Complex{};
    for (std::size_t p = 0; p < k; ++p) {
      const Complex aip = a[i * k + p];
      const Complex* brow = b + p * n;
      for (std::size_t j = 0; j < n; ++j) crow[j] += aip * brow[j];
    }
  }
}

void cgemv_scalar(std::size_t m, std::size_t n, const Complex* a,
                  const Complex* x, Complex* y) {
  for (std::size_t i = 0; i < m; ++i) {
    Complex acc{};
    const Complex* arow = a + i * n;
    for (std::size_t j = 0; j < n; ++j) acc += arow[j] * x[j];
    y[i] = acc;
  }
}

void daxpy_scalar(std::size_t n, double alpha, const double* x, double* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale_by_real_scalar(std::size_t n, const double* factors,
                          Complex* data) {
  for (std::size_t i = 0; i < n; ++i) data[i] *= factors[i];
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{Isa::Scalar, cgemm_scalar, cgemv_scalar,
                                 daxpy_scalar, scale_by_real_scalar};
  return table;
}

}  // namespace decohere::numcore::kernels
