#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "generator.hpp"
#include "lanczos.hpp"

using namespace specbound;

namespace {

HermitianMatrix linear_diag(std::size_t n) {
  return demo_matrix({.dim = n, .spectrum = DemoSpectrum::Linear});
}

}  // namespace

TEST_CASE("full-dimension run recovers the spectrum") {
  const auto a = HermitianMatrix::diagonal(std::vector<double>{1.0, 2.0});
  const auto s = lanczos(a, 2, 3);
  REQUIRE(s.steps() == 2);
  const auto t = eigenvalues(s.tridiagonal());
  CHECK(t[0] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(t[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("one step is the Rayleigh quotient of the start vector") {
  Rng rng(41);
  const auto a = random_hermitian(6, rng);
  const auto s = lanczos(a, 1, 7);
  REQUIRE(s.steps() == 1);
  CHECK(s.beta.empty());
  const Matrix q = s.q;
  CHECK(s.alpha[0] == doctest::Approx((q.adjoint() * a.matrix() * q)(0, 0).real()).epsilon(1e-14));
  CHECK(q.column_norm(0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("basis stays orthonormal and T = Q*AQ") {
  Rng rng(42);
  const auto a = random_hermitian(60, rng);
  const auto s = lanczos(a, 25, 1);
  REQUIRE(s.steps() == 25);
  CHECK(orthonormality_defect(s.q) <= 25 * 1e-10);
  const Matrix t = s.q.adjoint() * a.matrix() * s.q;
  const Matrix diff = t - s.tridiagonal().matrix();
  const double scale = spectral_norm(a.matrix());
  for (std::size_t r = 0; r < 25; ++r)
    for (std::size_t c = 0; c < 25; ++c) REQUIRE(std::abs(diff(r, c)) <= 1e-9 * scale);
}

TEST_CASE("Ritz values interlace between consecutive step counts") {
  Rng rng(43);
  const auto a = random_hermitian(30, rng);
  const double tol = 1e-10 * spectral_norm(a.matrix());
  for (std::size_t k = 1; k < 12; ++k) {
    const auto small = eigenvalues(lanczos(a, k, 9).tridiagonal());
    const auto big = eigenvalues(lanczos(a, k + 1, 9).tridiagonal());
    for (std::size_t i = 0; i < k; ++i) {
      REQUIRE(small[i] <= big[i] + tol);
      REQUIRE(small[i] >= big[i + 1] - tol);
    }
  }
}

TEST_CASE("invariant start terminates early") {
  // Three distinct eigenvalues: the Krylov space is exhausted after 3 steps.
  const auto a = HermitianMatrix::diagonal(std::vector<double>{1, 1, 2, 2, 3, 3});
  const auto s = lanczos(a, 6, 2);
  CHECK(s.steps() == 3);
  const auto t = eigenvalues(s.tridiagonal());
  CHECK(t[0] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(t[2] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("extreme Ritz values of diag(1..100) move toward the ends") {
  const auto a = linear_diag(100);
  const auto s = lanczos(a, 15, 1);
  const auto t = eigenvalues(s.tridiagonal());
  CHECK(t.front() <= 100.0);
  CHECK(t.back() >= 1.0);
  CHECK(t.front() > 95.0);
  CHECK(t.back() < 6.0);
  const auto sub = ritz_subspace(a, s, 2);
  REQUIRE(sub.ritz.size() == 2);
  CHECK(sub.ritz[0] == doctest::Approx(t.front()).epsilon(1e-12));
  CHECK(sub.ritz[1] == doctest::Approx(t.back()).epsilon(1e-12));
}

TEST_CASE("extreme-pair selection splits high and low") {
  Rng rng(44);
  const auto a = random_hermitian(20, rng);
  const auto s = lanczos(a, 8, 4);
  const auto t = eigenvalues(s.tridiagonal());
  const auto three = ritz_subspace(a, s, 3);
  REQUIRE(three.ritz.size() == 3);
  CHECK(three.ritz[0] == doctest::Approx(t[0]).epsilon(1e-12));
  CHECK(three.ritz[1] == doctest::Approx(t[1]).epsilon(1e-12));
  CHECK(three.ritz[2] == doctest::Approx(t[7]).epsilon(1e-12));
  const auto one = ritz_subspace(a, s, 1);
  CHECK(one.ritz[0] == doctest::Approx(t[0]).epsilon(1e-12));
  const auto all = ritz_subspace(a, s, 8);
  CHECK(all.x1.cols() == 8);
  const auto picked = ritz_subspace(a, s, 0, std::vector<std::size_t>{4});
  CHECK(picked.ritz[0] == doctest::Approx(t[4]).epsilon(1e-12));
  CHECK_THROWS_AS(ritz_subspace(a, s, 9), Error);
  CHECK_THROWS_AS(lanczos(a, 0, 1), Error);
  CHECK_THROWS_AS(lanczos(a, 21, 1), Error);
}

TEST_CASE("demo spectra") {
  const auto spiked = demo_spectrum(10, DemoSpectrum::Spiked);
  CHECK(spiked.front() == -3.0);
  CHECK(spiked.back() == 3.0);
  CHECK(spiked[2] == -1.0);
  CHECK(spiked[7] == 1.0);
  CHECK(demo_spectrum(4, DemoSpectrum::Linear) == std::vector<double>{1, 2, 3, 4});
  CHECK_THROWS_AS(demo_spectrum(5, DemoSpectrum::Spiked), Error);
  const auto noisy = demo_matrix({.dim = 30, .seed = 3, .noise = 0.01});
  CHECK(noisy.matrix() == demo_matrix({.dim = 30, .seed = 3, .noise = 0.01}).matrix());
}

TEST_CASE("demo certification: extremes are certified far below the interior") {
  const auto r = lanczos_demo({.seed = 1, .noise = 0.01}, true);
  REQUIRE(r.rows.size() == 15);
  std::vector<double> interior;
  for (std::size_t i = 1; i + 1 < r.rows.size(); ++i) interior.push_back(r.rows[i].per_column_bound);
  std::sort(interior.begin(), interior.end());
  const double median = interior[interior.size() / 2];
  for (const auto* row : {&r.rows.front(), &r.rows.back()}) {
    CHECK(row->per_column_bound < r.whole_r_norm);
    CHECK(row->per_column_bound * 10.0 <= median);
    CHECK(*row->true_error_column <= row->per_column_bound + 1e-12);
  }
  CHECK(check_certification(r, 1e-9 * (1.0 + *r.norm_a)).violations == 0);
}
