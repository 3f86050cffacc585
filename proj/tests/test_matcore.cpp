// Copyright 2026 The ChannelForge Authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "channelforge/errors.hpp"
#include "channelforge/linalg.hpp"
#include "channelforge/matrix.hpp"
#include "oracles.hpp"

using namespace channelforge;
using namespace std::complex_literals;

TEST_CASE("matrix construction and shape checks") {
  const ComplexMatrix m{{1, 2i}, {3, 4}};
  CHECK(m.rows() == 2);
  CHECK(m(0, 1) == 2i);
  CHECK_THROWS_AS(ComplexMatrix(0, 3), DimensionError);
  CHECK_THROWS_AS(ComplexMatrix(2, 2, std::vector<cplx>(3)), DimensionError);
  CHECK_THROWS_AS((ComplexMatrix{{1, 2}, {3}}), DimensionError);
  CHECK_THROWS_AS(ComplexMatrix(2, 3) * ComplexMatrix(2, 3), DimensionError);
  CHECK_THROWS_AS(ComplexMatrix(2, 2) + ComplexMatrix(3, 3), DimensionError);
  CHECK(ComplexMatrix().empty());
}

TEST_CASE("adjoint, trace and Hilbert-Schmidt inner product") {
  const ComplexMatrix a{{1, 2i}, {3, 4.0 - 1i}};
  const ComplexMatrix b{{0, 1}, {1i, 2}};
  CHECK(adjoint(a) == ComplexMatrix{{1, 3}, {-2i, 4.0 + 1i}});
  CHECK(trace(a) == cplx(5, -1));
  // tr(A^dagger B) = sum conj(a_ij) b_ij
  const cplx expected = std::conj(a(0, 1)) * b(0, 1) + std::conj(a(1, 0)) * b(1, 0) +
                        std::conj(a(1, 1)) * b(1, 1);
  CHECK(std::abs(hs_inner(a, b) - expected) < 1e-15);
  CHECK(std::abs(hs_inner(a, b) - trace(adjoint(a) * b)) < 1e-14);
}

TEST_CASE("Pauli algebra") {
  for (int k = 1; k <= 3; ++k) {
    CHECK(max_abs_difference(pauli(k) * pauli(k), pauli(0)) == 0.0);
    CHECK(trace(pauli(k)) == cplx{});
  }
  CHECK(max_abs_difference(pauli(1) * pauli(2), 1i * pauli(3)) == 0.0);
  CHECK_THROWS(pauli(4));
}

TEST_CASE("kron block layout") {
  const ComplexMatrix x{{1, 2}, {3, 4}};
  const ComplexMatrix y{{0, 1i}, {1, 0}};
  const ComplexMatrix k = kron(x, y);
  REQUIRE(k.rows() == 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) CHECK(k(i * 2 + r, j * 2 + c) == x(i, j) * y(r, c));
}

TEST_CASE("vec is row-major and (X (x) Y) vec(Z) = vec(X Z Y^T)") {
  const ComplexMatrix z{{1, 2}, {3, 4}};
  const ComplexMatrix v = vec(z);
  CHECK(v == ComplexMatrix::column({1, 2, 3, 4}));
  CHECK(mat(v, 2) == z);

  oracle::Source src(11);
  for (std::size_t n : {2u, 3u, 4u}) {
    const ComplexMatrix x = src.ginibre(n, n), y = src.ginibre(n, n), w = src.ginibre(n, n);
    CHECK(max_abs_difference(kron(x, y) * vec(w), vec(x * w * transpose(y))) < 1e-12);
  }
}

TEST_CASE("vec of the identity threads through a product") {
  // |Z>> = (Z (x) 1)|1>>
  oracle::Source src(12);
  const ComplexMatrix z = src.ginibre(3, 3);
  const ComplexMatrix one = ComplexMatrix::identity(3);
  CHECK(max_abs_difference(kron(z, one) * vec(one), vec(z)) < 1e-14);
  CHECK(max_abs_difference(kron(one, transpose(z)) * vec(one), vec(z)) < 1e-14);
}

TEST_CASE("reshuffle moves the documented indices and is involutive") {
  oracle::Source src(13);
  for (std::size_t n : {2u, 3u}) {
    const ComplexMatrix a = src.ginibre(n * n, n * n);
    const ComplexMatrix b = reshuffle(a, n);
    for (std::size_t ip = 0; ip < n; ++ip)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t jp = 0; jp < n; ++jp)
          for (std::size_t j = 0; j < n; ++j)
            CHECK(b(ip * n + i, jp * n + j) == a(ip * n + jp, i * n + j));
    CHECK(reshuffle(b, n) == a);
  }
  CHECK_THROWS_AS(reshuffle(ComplexMatrix(3, 3), 2), DimensionError);
}

TEST_CASE("partial trace against explicit index sums") {
  oracle::Source src(14);
  const std::size_t d1 = 2, d2 = 3;
  const ComplexMatrix m = src.ginibre(d1 * d2, d1 * d2);
  ComplexMatrix keep_first(d1, d1), keep_second(d2, d2);
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t j = 0; j < d1; ++j)
      for (std::size_t a = 0; a < d2; ++a) keep_first(i, j) += m(i * d2 + a, j * d2 + a);
  for (std::size_t a = 0; a < d2; ++a)
    for (std::size_t b = 0; b < d2; ++b)
      for (std::size_t i = 0; i < d1; ++i) keep_second(a, b) += m(i * d2 + a, i * d2 + b);
  CHECK(max_abs_difference(partial_trace(m, d1, d2, Factor::second), keep_first) < 1e-14);
  CHECK(max_abs_difference(partial_trace(m, d1, d2, Factor::first), keep_second) < 1e-14);
  CHECK_THROWS_AS(partial_trace(m, 2, 2, Factor::first), DimensionError);
}

TEST_CASE("partial traces of |X>><<Y|") {
  // tr_second(|X>><<Y|) = X Y^dagger and tr_first(|X>><<Y|) = X^T conj(Y).
  oracle::Source src(15);
  const ComplexMatrix x = src.ginibre(3, 3), y = src.ginibre(3, 3);
  const ComplexMatrix p = outer(vec(x), vec(y));
  CHECK(max_abs_difference(partial_trace(p, 3, 3, Factor::second), x * adjoint(y)) < 1e-13);
  CHECK(max_abs_difference(partial_trace(p, 3, 3, Factor::first), transpose(x) * conjugate(y)) <
        1e-13);
}

TEST_CASE("hermitian_eig on closed-form 2x2 cases") {
  // [[a, b], [conj b, d]] has eigenvalues (a+d)/2 +- sqrt(((a-d)/2)^2 + |b|^2).
  const double a = 0.7, d = -0.4;
  const cplx b{0.3, -0.5};
  const ComplexMatrix h{{a, b}, {std::conj(b), d}};
  const double mid = 0.5 * (a + d), rad = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(b));
  const EigDecomposition eig = hermitian_eig(h);
  CHECK(eig.eigenvalues[0] == doctest::Approx(mid + rad).epsilon(1e-14));
  CHECK(eig.eigenvalues[1] == doctest::Approx(mid - rad).epsilon(1e-14));
  CHECK(eig.residual < 1e-14);

  const EigDecomposition px = hermitian_eig(pauli(1));
  CHECK(px.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(px.eigenvalues[1] == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("hermitian_eig matches Eigen on random Hermitian matrices") {
  oracle::Source src(16);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = static_cast<std::size_t>(src.integer(1, 16));
    const ComplexMatrix g = src.ginibre(n, n);
    const ComplexMatrix h = hermitian_part(g);
    const EigDecomposition eig = hermitian_eig(h);
    const std::vector<double> ref = oracle::eigenvalues_desc(h);
    REQUIRE(eig.eigenvalues.size() == n);
    for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(eig.eigenvalues[k] - ref[k]) < 1e-11);
    CHECK(eig.residual < 1e-11);
    const ComplexMatrix v = eig.eigenvectors;
    CHECK(max_abs_difference(adjoint(v) * v, ComplexMatrix::identity(n)) < 1e-12);
  }
}

TEST_CASE("hermitian_eig handles degenerate spectra and fixes eigenvector phases") {
  oracle::Source src(17);
  const ComplexMatrix u = src.unitary(4);
  const std::vector<double> diag{2.0, 2.0, -1.0, -1.0};
  const ComplexMatrix h = u * ComplexMatrix::diagonal(diag) * adjoint(u);
  const EigDecomposition eig = hermitian_eig(h);
  for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(eig.eigenvalues[k] - diag[k]) < 1e-12);
  CHECK(eig.residual < 1e-12);
  for (std::size_t k = 0; k < 4; ++k) {
    const ComplexMatrix v = eig.eigenvector(k);
    std::size_t first = 0;
    while (std::abs(v(first, 0)) <= 1e-12) ++first;
    CHECK(v(first, 0).imag() == 0.0);
    CHECK(v(first, 0).real() > 0.0);
  }
  // Repeated runs are bit identical.
  CHECK(hermitian_eig(h).eigenvectors == eig.eigenvectors);
}

TEST_CASE("hermitian_eig rejects non-Hermitian and non-finite input") {
  const ComplexMatrix h{{1, 1}, {0, 1}};
  CHECK_THROWS_AS(hermitian_eig(h), NotHermitianError);
  try {
    hermitian_eig(h);
  } catch (const NotHermitianError& e) {
    CHECK(e.deviation() == 1.0);
  }
  CHECK_NOTHROW(hermitian_eig(h, 2.0));
  const ComplexMatrix bad{{std::nan(""), 0}, {0, 1}};
  CHECK_THROWS(hermitian_eig(bad));
  CHECK_THROWS_AS(hermitian_eig(ComplexMatrix(2, 3)), DimensionError);
}

TEST_CASE("orthonormal_complement completes an isometry") {
  oracle::Source src(18);
  const ComplexMatrix u = src.unitary(6);
  ComplexMatrix iso(6, 2);
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 2; ++c) iso(r, c) = u(r, c);
  const ComplexMatrix rest = orthonormal_complement(iso);
  REQUIRE(rest.rows() == 6);
  REQUIRE(rest.cols() == 4);
  CHECK(max_abs_difference(adjoint(rest) * rest, ComplexMatrix::identity(4)) < 1e-12);
  CHECK(max_abs(adjoint(iso) * rest) < 1e-12);
  CHECK(orthonormal_complement(iso) == rest);
  CHECK(orthonormal_complement(u).empty());
}

TEST_CASE("orthonormal_complement picks canonical vectors when they are free") {
  // Complement of e_0 in C^3 is spanned by e_1, e_2 exactly.
  const ComplexMatrix e0 = ComplexMatrix::column({1, 0, 0});
  const ComplexMatrix rest = orthonormal_complement(e0);
  CHECK(rest == ComplexMatrix{{0, 0}, {1, 0}, {0, 1}});
}

TEST_CASE("unitarity deviation") {
  CHECK(unitarity_deviation(pauli(2)) == 0.0);
  CHECK(unitarity_deviation(ComplexMatrix{{1, 0}, {0, 2}}) == 3.0);
}
