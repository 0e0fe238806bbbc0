#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "generator.hpp"
#include "linalg.hpp"
#include "oracles.hpp"

using namespace specbound;

namespace {

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  REQUIRE(a.size() == b.size());
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

Matrix dense(std::size_t rows, std::size_t cols, std::initializer_list<Complex> values) {
  return Matrix(rows, cols, std::vector<Complex>(values));
}

}  // namespace

TEST_CASE("matrix products and adjoints") {
  const Matrix a = dense(2, 3, {1.0, 2.0, Complex(0, 1), 0.0, -1.0, 3.0});
  const Matrix b = a.adjoint();
  CHECK(b.rows() == 3);
  CHECK(b(2, 0) == Complex(0, -1));
  const Matrix g = a * b;
  CHECK(g(0, 0) == Complex(6.0, 0.0));
  CHECK(g(1, 1) == Complex(10.0, 0.0));
  CHECK(std::abs(g(0, 1) - std::conj(g(1, 0))) == 0.0);
}

TEST_CASE("zero-sized shapes are legal") {
  const Matrix e(3, 0);
  CHECK(e.empty());
  CHECK((Matrix(2, 3) * e).cols() == 0);
  CHECK(spectral_norm(e) == 0.0);
  CHECK(singular_values(Matrix(0, 2)).size() == 2);
}

TEST_CASE("block extraction and hstack") {
  Matrix a(3, 3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) a(r, c) = static_cast<double>(3 * r + c);
  const Matrix blk = a.block(1, 1, 2, 2);
  CHECK(blk(0, 0) == Complex(4.0));
  CHECK(blk(1, 1) == Complex(8.0));
  const Matrix h = hstack(a.block(0, 0, 3, 1), a.block(0, 1, 3, 2));
  CHECK(h == a);
}

TEST_CASE("Hermitian construction symmetrizes or rejects") {
  const Matrix a = dense(2, 2, {1.0, Complex(2, 1), Complex(2, -1), 3.0});
  CHECK_NOTHROW(HermitianMatrix(a, Symmetry::Strict));

  const Matrix skewed = dense(2, 2, {1.0, 2.0, 2.5, 3.0});
  const HermitianMatrix sym(skewed);
  CHECK(sym(0, 1) == Complex(2.25));
  CHECK(sym(1, 0) == Complex(2.25));
  CHECK_THROWS_AS(HermitianMatrix(skewed, Symmetry::Strict), Error);

  const Matrix imag_diag = dense(2, 2, {Complex(1, 0.5), 0.0, 0.0, 1.0});
  CHECK(HermitianMatrix(imag_diag)(0, 0).imag() == 0.0);
}

TEST_CASE("Jacobi matches the closed-form 2x2 spectrum") {
  Rng rng(7);
  for (int t = 0; t < 1000; ++t) {
    const double a = rng.uniform(-3, 3), d = rng.uniform(-3, 3);
    const Complex b = rng.complex_normal();
    const auto got = eigenvalues(HermitianMatrix(dense(2, 2, {a, b, std::conj(b), d})));
    const auto want = oracle::eig2(a, b, d);
    REQUIRE(max_abs_diff(got, want) <= 1e-10);
  }
}

TEST_CASE("Jacobi matches the Cardano 3x3 spectrum") {
  Rng rng(8);
  for (int t = 0; t < 1000; ++t) {
    double m[3][3];
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) m[i][j] = m[j][i] = rng.uniform(-2, 2);
    Matrix a(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) a(i, j) = m[i][j];
    REQUIRE(max_abs_diff(eigenvalues(HermitianMatrix(a)), oracle::eig3_symmetric(m)) <= 1e-10);
  }
}

TEST_CASE("Jacobi agrees with Sturm bisection on random Hermitian matrices") {
  Rng rng(9);
  for (std::size_t n = 1; n <= 16; ++n) {
    const HermitianMatrix a = random_hermitian(n, rng);
    const auto got = eigenvalues(a);
    CHECK(std::is_sorted(got.rbegin(), got.rend()));
    CHECK(max_abs_diff(got, oracle::eigenvalues(a.matrix())) <= 1e-10 * (1.0 + a.frobenius_norm()));
  }
}

TEST_CASE("eigenvectors satisfy AV = V diag(lambda) with unitary V") {
  Rng rng(10);
  const HermitianMatrix a = random_hermitian(9, rng);
  const auto eig = hermitian_eigen(a);
  const Matrix& v = eig.vectors.matrix();
  const Matrix residual = a.matrix() * v - v * Matrix::diagonal(eig.values.values);
  CHECK(residual.frobenius_norm() <= 1e-12 * a.frobenius_norm() * 9);
  CHECK(orthonormality_defect(v) <= 9e-12);
}

TEST_CASE("exactly diagonal input keeps its entries") {
  const std::vector<double> d{0.5, 3.0, -1.0, 3.0};
  const auto got = eigenvalues(HermitianMatrix::diagonal(d));
  CHECK(got == std::vector<double>{3.0, 3.0, 0.5, -1.0});
}

TEST_CASE("sweep cap raises ConvergenceError") {
  Rng rng(11);
  const HermitianMatrix a = random_hermitian(12, rng);
  CHECK_THROWS_AS(hermitian_eigen(a, {1e-13, 1}), ConvergenceError);
}

TEST_CASE("spectral norm and singular values against the oracle") {
  Rng rng(12);
  for (std::size_t p = 1; p <= 6; ++p)
    for (std::size_t q = 1; q <= 6; ++q) {
      const Matrix b = random_complex(p, q, rng);
      const auto want = oracle::singular_values(b);
      const auto got = singular_values(b);
      REQUIRE(got.size() == std::max(p, q));
      CHECK(max_abs_diff(got, want) <= 1e-10 * (1.0 + want[0]));
      CHECK(std::abs(spectral_norm(b) - want[0]) <= 1e-10 * want[0]);
    }
}

TEST_CASE("svd reconstructs B") {
  Rng rng(13);
  for (auto [p, q] : {std::pair{4, 2}, {2, 5}, {3, 3}}) {
    const Matrix b = random_complex(p, q, rng);
    const auto s = svd(b);
    Matrix sigma(p, q);
    for (std::size_t i = 0; i < std::min<std::size_t>(p, q); ++i) sigma(i, i) = s.values[i];
    const Matrix back = s.left * sigma * s.right.adjoint();
    CHECK((back - b).frobenius_norm() <= 1e-11 * b.frobenius_norm());
    CHECK(orthonormality_defect(s.left) <= 1e-11);
    CHECK(orthonormality_defect(s.right) <= 1e-11);
  }
}

TEST_CASE("Jordan-Wielandt spectrum is symmetric about zero") {
  Rng rng(14);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t p = rng.index(1, 5), q = rng.index(1, 5);
    const Matrix b = random_complex(p, q, rng);
    const auto ev = eigenvalues(jordan_wielandt(b));
    const std::size_t n = ev.size();
    for (std::size_t i = 0; i < n; ++i) REQUIRE(std::abs(ev[i] + ev[n - 1 - i]) <= 1e-10 * (1.0 + ev[0]));
  }
}

TEST_CASE("orthonormal completion yields a unitary") {
  Rng rng(15);
  for (std::size_t n = 2; n <= 10; ++n) {
    const std::size_t m = rng.index(1, n - 1);
    const Matrix x1 = random_orthonormal(n, m, rng);
    const Matrix x2 = orthonormal_completion(x1);
    REQUIRE(x2.cols() == n - m);
    CHECK(orthonormality_defect(hstack(x1, x2)) <= n * 1e-12);
  }
  // Standard basis columns, where a naive fill would pick a duplicate.
  Matrix e1(3, 1);
  e1(0, 0) = 1.0;
  CHECK(orthonormality_defect(hstack(e1, orthonormal_completion(e1))) <= 3e-12);
  Matrix bad(3, 1);
  bad(0, 0) = 2.0;
  CHECK_THROWS_AS(orthonormal_completion(bad), Error);
}

TEST_CASE("strike removes a row and column and interlaces") {
  Rng rng(16);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = rng.index(2, 8);
    const HermitianMatrix a = random_hermitian(n, rng);
    const std::size_t i = rng.index(0, n - 1);
    const HermitianMatrix s = strike(a, i);
    REQUIRE(s.dim() == n - 1);
    const auto la = eigenvalues(a);
    const auto ls = eigenvalues(s);
    const double tol = 1e-10 * (1.0 + a.frobenius_norm());
    for (std::size_t k = 0; k + 1 < n; ++k) {
      REQUIRE(ls[k] <= la[k] + tol);
      REQUIRE(ls[k] >= la[k + 1] - tol);
    }
  }
  CHECK_THROWS_AS(strike(HermitianMatrix::diagonal(std::vector<double>{1.0}), 3), Error);
}

TEST_CASE("spectrum validation") {
  Spectrum s{{3.0, 1.0, 2.0}, std::nullopt};
  CHECK_THROWS_AS(s.validate(), Error);
  Spectrum t{{3.0, 2.0}, std::vector<Block>{Block::One}};
  CHECK_THROWS_AS(t.validate(), Error);
}
