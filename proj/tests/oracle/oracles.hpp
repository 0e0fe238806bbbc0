// Reference computations used only by the tests. None of them shares code
// with the library's Jacobi kernel.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "linalg.hpp"

namespace oracle {

using specbound::Complex;
using specbound::Matrix;

/// Eigenvalues of [[a, b], [conj(b), d]], descending.
inline std::vector<double> eig2(double a, Complex b, double d) {
  const double mean = 0.5 * (a + d);
  const double radius = std::hypot(0.5 * (a - d), std::abs(b));
  return {mean + radius, mean - radius};
}

/// Eigenvalues of a real symmetric 3×3 by the trigonometric Cardano form, descending.
inline std::vector<double> eig3_symmetric(const double (&m)[3][3]) {
  const double p1 = m[0][1] * m[0][1] + m[0][2] * m[0][2] + m[1][2] * m[1][2];
  const double q = (m[0][0] + m[1][1] + m[2][2]) / 3.0;
  if (p1 == 0.0) {
    std::vector<double> d{m[0][0], m[1][1], m[2][2]};
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
  }
  const double p2 = (m[0][0] - q) * (m[0][0] - q) + (m[1][1] - q) * (m[1][1] - q) +
                    (m[2][2] - q) * (m[2][2] - q) + 2.0 * p1;
  const double p = std::sqrt(p2 / 6.0);
  double b[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b[i][j] = (m[i][j] - (i == j ? q : 0.0)) / p;
  const double det = b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) -
                     b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
                     b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
  const double r = std::clamp(det / 2.0, -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;
  const double e1 = q + 2.0 * p * std::cos(phi);
  const double e3 = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
  return {e1, 3.0 * q - e1 - e3, e3};
}

/// Householder reduction to real symmetric tridiagonal form (diagonal d,
/// off-diagonal magnitudes e) with the same spectrum.
inline void tridiagonalize(Matrix a, std::vector<double>& d, std::vector<double>& e) {
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double xnorm = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) xnorm += std::norm(a(i, k));
    xnorm = std::sqrt(xnorm);
    if (xnorm == 0.0) continue;
    const Complex x0 = a(k + 1, k);
    const Complex phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : Complex(1.0);
    std::vector<Complex> v(n, 0.0);
    for (std::size_t i = k + 1; i < n; ++i) v[i] = a(i, k);
    v[k + 1] += phase * xnorm;
    double vnorm = 0.0;
    for (const auto& z : v) vnorm += std::norm(z);
    vnorm = std::sqrt(vnorm);
    for (auto& z : v) z /= vnorm;
    // A ← (I − 2vv*) A (I − 2vv*)
    std::vector<Complex> av(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) av[i] += a(i, j) * v[j];
    Complex vav = 0.0;
    for (std::size_t i = 0; i < n; ++i) vav += std::conj(v[i]) * av[i];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        a(i, j) += -2.0 * av[i] * std::conj(v[j]) - 2.0 * v[i] * std::conj(av[j]) +
                   4.0 * vav * v[i] * std::conj(v[j]);
  }
  d.assign(n, 0.0);
  e.assign(n > 0 ? n - 1 : 0, 0.0);
  for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i).real();
  for (std::size_t i = 0; i + 1 < n; ++i) e[i] = std::abs(a(i + 1, i));
}

/// Number of eigenvalues of the tridiagonal (d, e) strictly below x.
inline std::size_t sturm_count(const std::vector<double>& d, const std::vector<double>& e, double x) {
  std::size_t count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double off = i > 0 ? e[i - 1] * e[i - 1] / q : 0.0;
    q = d[i] - x - off;
    if (q == 0.0) q = -std::numeric_limits<double>::min();
    if (q < 0.0) ++count;
  }
  return count;
}

/// Eigenvalues of a Hermitian matrix by tridiagonalization and Sturm bisection, descending.
inline std::vector<double> eigenvalues(const Matrix& a) {
  const std::size_t n = a.rows();
  std::vector<double> d, e;
  tridiagonalize(a, d, e);
  double radius = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double r = std::abs(d[i]);
    if (i > 0) r += e[i - 1];
    if (i + 1 < n) r += e[i];
    radius = std::max(radius, r);
  }
  std::vector<double> values(n);
  for (std::size_t k = 0; k < n; ++k) {
    // k-th smallest eigenvalue
    double lo = -radius - 1.0, hi = radius + 1.0;
    for (int it = 0; it < 200 && hi - lo > 4 * std::numeric_limits<double>::epsilon() * (std::abs(lo) + std::abs(hi)); ++it) {
      const double mid = 0.5 * (lo + hi);
      if (sturm_count(d, e, mid) > k) hi = mid;
      else lo = mid;
    }
    values[n - 1 - k] = 0.5 * (lo + hi);
  }
  return values;
}

/// Singular values of B (max(p, q) entries, zero padded), from the
/// eigenvalues of [[O, B], [B*, O]] assembled here.
inline std::vector<double> singular_values(const Matrix& b) {
  const std::size_t p = b.rows(), q = b.cols();
  Matrix jw(p + q, p + q);
  for (std::size_t r = 0; r < p; ++r)
    for (std::size_t c = 0; c < q; ++c) {
      jw(r, p + c) = b(r, c);
      jw(p + c, r) = std::conj(b(r, c));
    }
  const auto ev = eigenvalues(jw);
  std::vector<double> s;
  for (std::size_t i = 0; i < std::max(p, q); ++i) s.push_back(std::abs(ev[i]));
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

/// min |x − y| by exhaustive search.
inline double brute_gap(const std::vector<double>& s1, const std::vector<double>& s2) {
  double best = std::numeric_limits<double>::infinity();
  for (double x : s1)
    for (double y : s2) best = std::min(best, std::abs(x - y));
  return best;
}

}  // namespace oracle
