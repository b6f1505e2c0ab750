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

#include "decohere/numcore/linalg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "decohere/error.hpp"

namespace decohere::numcore {
namespace {

constexpr int kMaxJacobiSweeps = 100;

void require_square(const ComplexMatrix& m, const char* what) {
  if (!m.is_square()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + " needs a square matrix");
  }
}

void require_hermitian(const ComplexMatrix& m) {
  require_square(m, "Hermitian eigensolver");
  if (!m.all_finite()) {
    throw Error(ErrorCode::NonFinite, "matrix has NaN/Inf entries");
  }
  const double dev = hermiticity_deviation(m);
  if (dev > kHermitianTolerance * std::max(1.0, m.max_abs())) {
    throw Error(ErrorCode::NotHermitian,
                "max |m - m^dagger| = " + std::to_string(dev));
  }
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

double frobenius(const ComplexMatrix& a) {
  double s = 0.0;
  for (const auto& z : a.data()) s += std::norm(z);
  return std::sqrt(s);
}

// Cyclic Jacobi. Each rotation is J = D R with D = diag(1, e^{-i phi}) making
// the pivot real, followed by the classical real rotation.
HermitianEigen jacobi(const ComplexMatrix& m, bool want_vectors) {
  const std::size_t n = m.rows();
  ComplexMatrix a = m;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = avg;
      a(j, i) = std::conj(avg);
    }
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();

  ComplexMatrix v = want_vectors ? ComplexMatrix::identity(n) : ComplexMatrix();
  const double scale = frobenius(a);
  const double target = std::numeric_limits<double>::epsilon() * scale;

  int sweep = 0;
  for (; sweep < kMaxJacobiSweeps; ++sweep) {
    if (scale == 0.0 || off_diagonal_norm(a) <= target) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex g = a(p, q);
        const double absg = std::abs(g);
        if (absg == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Pivot negligible against both diagonal entries: drop it.
        if (sweep > 3 && absg < 1e-18 * std::abs(app) &&
            absg < 1e-18 * std::abs(aqq)) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        const Complex phase = g / absg;
        const Complex phase_c = std::conj(phase);
        const double theta = (aqq - app) / (2.0 * absg);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) /
              (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // a <- a J   (columns p, q)
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp - s * phase_c * akq;
          a(k, q) = s * akp + c * phase_c * akq;
        }
        // a <- J^dagger a   (rows p, q)
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk - s * phase * aqk;
          a(q, k) = s * apk + c * phase * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        if (want_vectors) {
          for (std::size_t k = 0; k < n; ++k) {
            const Complex vkp = v(k, p);
            const Complex vkq = v(k, q);
            v(k, p) = c * vkp - s * phase_c * vkq;
            v(k, q) = s * vkp + c * phase_c * vkq;
          }
        }
      }
    }
  }
  if (sweep == kMaxJacobiSweeps && off_diagonal_norm(a) > target) {
    throw Error(ErrorCode::NoConvergence,
                "Jacobi eigensolver did not converge in " +
                    std::to_string(kMaxJacobiSweeps) + " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  HermitianEigen out;
  out.values.reserve(n);
  for (std::size_t k : order) out.values.push_back(a(k, k).real());
  if (want_vectors) {
    out.vectors = ComplexMatrix(n);
    for (std::size_t col = 0; col < n; ++col)
      for (std::size_t row = 0; row < n; ++row)
        out.vectors(row, col) = v(row, order[col]);
  }
  return out;
}

// Pade(13) numerator/denominator coefficients.
constexpr std::array<double, 14> kPade13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
    1187353796428800.0,  129060195264000.0,   10559470521600.0,
    670442572800.0,      33522128640.0,       1323241920.0,
    40840800.0,          960960.0,            16380.0,
    182.0,               1.0};
constexpr double kTheta13 = 5.371920351148152;

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  require_hermitian(m);
  return jacobi(m, false).values;
}

HermitianEigen hermitian_eigen(const ComplexMatrix& m) {
  require_hermitian(m);
  return jacobi(m, true);
}

ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square(a, "solve");
  if (b.rows() != a.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "solve right-hand side rows");
  }
  const std::size_t n = a.rows();
  ComplexMatrix lu = a;
  ComplexMatrix x = b;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(lu(i, k)) > best) {
        best = std::abs(lu(i, k));
        piv = i;
      }
    }
    if (best == 0.0) {
      throw Error(ErrorCode::InvalidArgument, "singular matrix in solve");
    }
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
      for (std::size_t j = 0; j < x.cols(); ++j) std::swap(x(k, j), x(piv, j));
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex f = lu(i, k) / lu(k, k);
      lu(i, k) = f;
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
      for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) -= f * x(k, j);
    }
  }
  for (std::size_t kk = n; kk-- > 0;) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      Complex s = x(kk, j);
      for (std::size_t c = kk + 1; c < n; ++c) s -= lu(kk, c) * x(c, j);
      x(kk, j) = s / lu(kk, kk);
    }
  }
  return x;
}

ComplexMatrix matrix_exp(const ComplexMatrix& m) {
  require_square(m, "matrix_exp");
  if (!m.all_finite()) {
    throw Error(ErrorCode::NonFinite, "matrix_exp input has NaN/Inf entries");
  }
  const std::size_t n = m.rows();
  const double norm = m.norm1();
  if (norm > kMatrixExpNormLimit) {
    throw Error(ErrorCode::Overflow,
                "matrix_exp input norm " + std::to_string(norm) +
                    " exceeds limit");
  }
  if (norm == 0.0) return ComplexMatrix::identity(n);

  int squarings = 0;
  if (norm > kTheta13) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / kTheta13)));
  }
  const ComplexMatrix a = std::ldexp(1.0, -squarings) * m;
  const ComplexMatrix id = ComplexMatrix::identity(n);
  const ComplexMatrix a2 = a * a;
  const ComplexMatrix a4 = a2 * a2;
  const ComplexMatrix a6 = a4 * a2;
  const auto& b = kPade13;

  ComplexMatrix inner_u = b[13] * a6;
  inner_u.add_scaled(b[11], a4).add_scaled(b[9], a2);
  ComplexMatrix u = a6 * inner_u;
  u.add_scaled(b[7], a6).add_scaled(b[5], a4).add_scaled(b[3], a2).add_scaled(
      b[1], id);
  u = a * u;

  ComplexMatrix inner_v = b[12] * a6;
  inner_v.add_scaled(b[10], a4).add_scaled(b[8], a2);
  ComplexMatrix v = a6 * inner_v;
  v.add_scaled(b[6], a6).add_scaled(b[4], a4).add_scaled(b[2], a2).add_scaled(
      b[0], id);

  ComplexMatrix r = solve(v - u, v + u);
  for (int i = 0; i < squarings; ++i) r = r * r;
  if (!r.all_finite()) {
    throw Error(ErrorCode::Overflow, "matrix_exp result is not finite");
  }
  return r;
}

}  // namespace decohere::numcore
