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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "../support/random_models.hpp"
#include "decohere/error.hpp"
#include "decohere/numcore/linalg.hpp"
#include "decohere/numcore/matrix.hpp"
#include "decohere/numcore/ode.hpp"
#include "decohere/numcore/quadrature.hpp"

using namespace decohere;
using namespace decohere::numcore;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

template <typename F>
ErrorCode error_code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected decohere::Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("matrix basics and column-stacking vectorization", "[numcore]") {
  const ComplexMatrix m{{1.0, 2.0}, {3.0, 4.0}};
  const auto v = vec(m);
  REQUIRE(v.size() == 4);
  CHECK(v[0] == Complex(1.0));
  CHECK(v[1] == Complex(3.0));
  CHECK(v[2] == Complex(2.0));
  CHECK(unvec(v, 2) == m);

  const ComplexMatrix k = kron(pauli::z(), ComplexMatrix::identity(2));
  CHECK(k(0, 0) == Complex(1.0));
  CHECK(k(3, 3) == Complex(-1.0));
  CHECK(k(2, 2) == Complex(-1.0));

  CHECK(error_code_of([&] { (void)(m * ComplexMatrix(3, 3)); }) ==
        ErrorCode::DimensionMismatch);
}

TEST_CASE("vec(A X B) = (B^T kron A) vec(X)", "[numcore][property]") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = testing::random_matrix(rng, 3, 3);
    const auto x = testing::random_matrix(rng, 3, 3);
    const auto b = testing::random_matrix(rng, 3, 3);
    const auto lhs = vec(a * x * b);
    const auto rhs = multiply(kron(b.transpose(), a), vec(x));
    for (std::size_t i = 0; i < lhs.size(); ++i)
      CHECK(std::abs(lhs[i] - rhs[i]) < 1e-12);
  }
}

TEST_CASE("hermitian_eigenvalues examples", "[numcore][eigen]") {
  const auto id = hermitian_eigenvalues(ComplexMatrix::identity(2));
  CHECK(id == std::vector<double>{1.0, 1.0});

  const auto z = hermitian_eigenvalues(pauli::z());
  CHECK_THAT(z[0], WithinAbs(-1.0, 1e-15));
  CHECK_THAT(z[1], WithinAbs(1.0, 1e-15));

  // trace 5, det 6 - 2 = 4 -> {1, 4}
  const ComplexMatrix h{{2.0, Complex(1.0, 1.0)}, {Complex(1.0, -1.0), 3.0}};
  const auto ev = hermitian_eigenvalues(h);
  CHECK_THAT(ev[0], WithinAbs(1.0, 1e-13));
  CHECK_THAT(ev[1], WithinAbs(4.0, 1e-13));
}

TEST_CASE("hermitian_eigen reconstructs and rejects non-Hermitian input",
          "[numcore][eigen]") {
  std::mt19937_64 rng(3);
  for (std::size_t d : {1u, 2u, 5u, 8u, 16u, 64u}) {
    const auto m = testing::random_hermitian(rng, d);
    const auto eig = hermitian_eigen(m);
    REQUIRE(std::is_sorted(eig.values.begin(), eig.values.end()));
    const ComplexMatrix rebuilt = eig.vectors *
                                  ComplexMatrix::diagonal(std::span<const double>(eig.values)) *
                                  eig.vectors.adjoint();
    CHECK(max_abs_difference(rebuilt, m) <= 1e-9 * m.max_abs());
    const ComplexMatrix gram = eig.vectors.adjoint() * eig.vectors;
    CHECK(max_abs_difference(gram, ComplexMatrix::identity(d)) < 1e-12);
  }

  ComplexMatrix bad{{1.0, 2.0}, {0.0, 1.0}};
  CHECK(error_code_of([&] { hermitian_eigenvalues(bad); }) ==
        ErrorCode::NotHermitian);
}

TEST_CASE("eigenvalues are unitarily invariant", "[numcore][eigen][property]") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = 1 + trial % 8;
    const auto m = testing::random_hermitian(rng, d);
    const auto u = testing::random_unitary(rng, d);
    const ComplexMatrix rotated = u * m * u.adjoint();
    // Rounding in U m U^dagger leaves a ~1e-15 anti-Hermitian part.
    const ComplexMatrix sym = 0.5 * (rotated + rotated.adjoint());
    const auto a = hermitian_eigenvalues(m);
    const auto b = hermitian_eigenvalues(sym);
    for (std::size_t k = 0; k < d; ++k) CHECK(std::abs(a[k] - b[k]) < 1e-9);
  }
}

TEST_CASE("matrix_exp examples", "[numcore][expm]") {
  CHECK(max_abs_difference(matrix_exp(ComplexMatrix(3)),
                           ComplexMatrix::identity(3)) == 0.0);

  const ComplexMatrix d = ComplexMatrix::diagonal(std::vector<Complex>{0.3, -2.0});
  const ComplexMatrix ed = matrix_exp(d);
  CHECK_THAT(ed(0, 0).real(), WithinRel(std::exp(0.3), 1e-14));
  CHECK_THAT(ed(1, 1).real(), WithinRel(std::exp(-2.0), 1e-14));
  CHECK(std::abs(ed(0, 1)) == 0.0);

  // exp(i theta sigma_y) = cos(theta) I + i sin(theta) sigma_y
  const double theta = std::numbers::pi / 2;
  const ComplexMatrix r = matrix_exp(Complex(0.0, theta) * pauli::y());
  const ComplexMatrix expected{{0.0, 1.0}, {-1.0, 0.0}};
  CHECK(max_abs_difference(r, expected) < 1e-10);
}

TEST_CASE("matrix_exp inverse pair and direct sums", "[numcore][expm][property]") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = 2 + trial % 5;
    ComplexMatrix m = testing::random_matrix(rng, d, d);
    m *= (10.0 * (trial + 1) / 20.0) / m.norm1();  // norms up to 10
    const ComplexMatrix prod = matrix_exp(m) * matrix_exp(-1.0 * m);
    CHECK(max_abs_difference(prod, ComplexMatrix::identity(d)) <= 1e-9);

    const ComplexMatrix n = testing::random_matrix(rng, 3, 3);
    const ComplexMatrix lhs = matrix_exp(direct_sum(m, n));
    const ComplexMatrix rhs = direct_sum(matrix_exp(m), matrix_exp(n));
    CHECK(max_abs_difference(lhs, rhs) <= 1e-10 * std::max(1.0, rhs.max_abs()));
  }
  ComplexMatrix huge = ComplexMatrix::identity(2);
  huge *= 2e6;
  CHECK(error_code_of([&] { matrix_exp(huge); }) == ErrorCode::Overflow);
}

TEST_CASE("solve agrees with the product", "[numcore]") {
  std::mt19937_64 rng(9);
  const auto a = testing::random_matrix(rng, 6, 6);
  const auto x = testing::random_matrix(rng, 6, 2);
  CHECK(max_abs_difference(solve(a, a * x), x) < 1e-10);
}

TEST_CASE("integrate_adaptive examples", "[numcore][quadrature]") {
  const QuadratureSpec spec;
  const auto one =
      integrate_semi_infinite([](double w) { return std::exp(-w); }, 0.0, 1.0, spec);
  CHECK_THAT(one.value, WithinAbs(1.0, 1e-10));

  // b / (a^2 + b^2), a = b = 1
  const auto half = integrate_semi_infinite(
      [](double w) { return std::exp(-w) * std::sin(w); }, 0.0, 1.0, spec);
  CHECK_THAT(half.value, WithinAbs(0.5, 1e-10));

  // Frullani: (1/2) ln(1 + t^2), t = 1
  const auto frullani = integrate_semi_infinite(
      [](double w) {
        const double s = std::sin(0.5 * w);
        return w == 0.0 ? 0.0 : std::exp(-w) * 2.0 * s * s / w;
      },
      0.0, 1.0, spec);
  CHECK_THAT(frullani.value, WithinAbs(0.5 * std::log(2.0), 1e-10));
  CHECK(frullani.error <= 1e-10);
}

TEST_CASE("integrate_adaptive is additive", "[numcore][quadrature][property]") {
  const QuadratureSpec spec;
  auto f = [](double x) { return x * x * std::exp(-0.3 * x) * std::cos(4.0 * x); };
  for (double mid : {0.3, 1.7, 4.2}) {
    const auto whole = integrate_adaptive(f, 0.0, 6.0, spec);
    const auto left = integrate_adaptive(f, 0.0, mid, spec);
    const auto right = integrate_adaptive(f, mid, 6.0, spec);
    CHECK(std::abs(whole.value - (left.value + right.value)) <=
          whole.error + left.error + right.error + 1e-15);
  }
  // Reversed limits flip the sign.
  CHECK_THAT(integrate_adaptive(f, 6.0, 0.0, spec).value,
             WithinAbs(-integrate_adaptive(f, 0.0, 6.0, spec).value, 1e-14));
}

TEST_CASE("integrate_adaptive error paths", "[numcore][quadrature]") {
  QuadratureSpec spec;
  CHECK(error_code_of([&] {
          integrate_adaptive([](double x) { return 1.0 / (x - 0.5); }, 0.0, 1.0,
                             spec, std::vector<double>{0.5});
        }) == ErrorCode::NonFinite);
  spec.max_subdivisions = 3;
  CHECK(error_code_of([&] {
          integrate_adaptive([](double x) { return std::sin(200.0 * x * x); }, 0.0,
                             10.0, spec);
        }) == ErrorCode::MaxSubdivisions);
  spec = QuadratureSpec{};
  spec.abs_tol = 1e-16;
  CHECK(error_code_of([&] { spec.validate(); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("breakpoints handle many oscillations", "[numcore][quadrature]") {
  const double t = 40.0;
  std::vector<double> cuts;
  for (int k = 1; k * std::numbers::pi / t < 40.0; ++k)
    cuts.push_back(k * std::numbers::pi / t);
  // integral of e^{-w} cos(w t) = 1/(1+t^2)
  const auto r = integrate_semi_infinite(
      [t](double w) { return std::exp(-w) * std::cos(w * t); }, 0.0, 1.0,
      QuadratureSpec{}, cuts);
  CHECK_THAT(r.value, WithinAbs(1.0 / (1.0 + t * t), 1e-10));
}

TEST_CASE("ode_solve examples", "[numcore][ode]") {
  const OdeSpec spec;
  const std::vector<double> grid{0.0, 0.5, 1.0};

  const auto still = ode_solve(
      [](double, std::span<const double>, std::span<double> dy) {
        for (auto& v : dy) v = 0.0;
      },
      std::vector<double>{1.5, -2.0}, grid, spec);
  for (const auto& s : still) CHECK(s == std::vector<double>{1.5, -2.0});

  const auto decay = ode_solve(
      [](double, std::span<const double> y, std::span<double> dy) { dy[0] = -y[0]; },
      std::vector<double>{1.0}, grid, spec);
  CHECK_THAT(decay.back()[0], WithinAbs(std::exp(-1.0), 1e-8));

  // y' = i y as a real pair
  const auto rot = ode_solve(
      [](double, std::span<const double> y, std::span<double> dy) {
        dy[0] = -y[1];
        dy[1] = y[0];
      },
      std::vector<double>{1.0, 0.0}, std::vector<double>{0.0, std::numbers::pi},
      spec);
  CHECK_THAT(rot.back()[0], WithinAbs(-1.0, 1e-8));
  CHECK_THAT(rot.back()[1], WithinAbs(0.0, 1e-8));
}

TEST_CASE("ode_solve halving tolerances moves results by less than the coarse tolerance",
          "[numcore][ode][property]") {
  auto rhs = [](double t, std::span<const double> y, std::span<double> dy) {
    dy[0] = y[1];
    dy[1] = -y[0] - 0.1 * y[1] + std::cos(1.3 * t);
  };
  std::vector<double> grid;
  for (int i = 0; i <= 20; ++i) grid.push_back(0.5 * i);
  OdeSpec coarse;
  coarse.abs_tol = coarse.rel_tol = 1e-8;
  OdeSpec fine = coarse;
  fine.abs_tol = fine.rel_tol = 5e-9;
  const auto a = ode_solve(rhs, std::vector<double>{1.0, 0.0}, grid, coarse);
  const auto b = ode_solve(rhs, std::vector<double>{1.0, 0.0}, grid, fine);
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t k = 0; k < 2; ++k)
      CHECK(std::abs(a[i][k] - b[i][k]) <
            coarse.abs_tol + coarse.rel_tol * std::abs(b[i][k]));
}

TEST_CASE("ode_solve error paths", "[numcore][ode]") {
  OdeSpec spec;
  auto blowup = [](double, std::span<const double> y, std::span<double> dy) {
    dy[0] = y[0] * y[0];
  };
  const auto code = error_code_of([&] {
    ode_solve(blowup, std::vector<double>{1.0}, std::vector<double>{0.0, 2.0}, spec);
  });
  CHECK((code == ErrorCode::StepUnderflow || code == ErrorCode::NonFinite ||
         code == ErrorCode::MaxSteps));

  spec.max_steps = 3;
  CHECK(error_code_of([&] {
          ode_solve([](double, std::span<const double> y,
                       std::span<double> dy) { dy[0] = -50.0 * y[0]; },
                    std::vector<double>{1.0}, std::vector<double>{0.0, 10.0}, spec);
        }) == ErrorCode::MaxSteps);
  CHECK(error_code_of([&] {
          ode_solve([](double, std::span<const double>, std::span<double>) {},
                    std::vector<double>{1.0}, std::vector<double>{0.0, 0.0},
                    OdeSpec{});
        }) == ErrorCode::InvalidArgument);
}
