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

#pragma once

// Data-parallel inner loops used by the dense complex algebra and the ODE
// integrator. Each kernel has a portable scalar reference implementation and,
// on x86-64, an AVX2+FMA variant. The active table is selected once at first
// use from the CPU feature bits; DECOHERE_SIMD=scalar forces the reference
// path.
//
// Complex arrays are interleaved (re, im) doubles, matching std::complex.
// Matrices are dense and row-major.

#include <complex>
#include <cstddef>
#include <string_view>

namespace decohere::numcore::kernels {

using Complex = std::complex<double>;

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

struct KernelTable {
  Isa isa;
  /// c (m x n) = a (m x k) * b (k x n). c must not alias a or b.
  void (*cgemm)(std::size_t m, std::size_t n, std::size_t k, const Complex* a,
                const Complex* b, Complex* c);
  /// y (m) = a (m x n) * x (n).
  void (*cgemv)(std::size_t m, std::size_t n, const Complex* a,
                const Complex* x, Complex* y);
  /// y += alpha * x
  void (*daxpy)(std::size_t n, double alpha, const double* x, double* y);
  /// data[i] *= factors[i]
  void (*scale_by_real)(std::size_t n, const double* factors, Complex* data);
};

const KernelTable& scalar_table();

/// The AVX2+FMA table, or nullptr when it was not compiled in or the running
/// CPU lacks the instructions.
const KernelTable* avx2_table();

/// Table used by the rest of the library.
const KernelTable& active();

}  // namespace decohere::numcore::kernels
