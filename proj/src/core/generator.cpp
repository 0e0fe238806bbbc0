#include "generator.hpp"

#include <cmath>

namespace specbound {

const char* to_string(Ensemble e) noexcept {
  switch (e) {
    case Ensemble::GaussianHermitian: return "gaussian";
    case Ensemble::ClusteredSpectrum: return "clustered";
    case Ensemble::SharedEigenvalue: return "shared";
  }
  return "unknown";
}

Matrix random_complex(std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.complex_normal();
  return m;
}

HermitianMatrix random_hermitian(std::size_t n, Rng& rng) {
  const Matrix z = random_complex(n, n, rng);
  const double scale = n > 0 ? 1.0 / std::sqrt(static_cast<double>(n)) : 1.0;
  return HermitianMatrix((z + z.adjoint()) * Complex(0.5 * scale));
}

Matrix random_unitary(std::size_t n, Rng& rng) {
  Matrix u = random_complex(n, n, rng);
  for (std::size_t c = 0; c < n; ++c) {
    auto x = u.column(c);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t prev = 0; prev < c; ++prev) {
        Complex dot{};
        for (std::size_t r = 0; r < n; ++r) dot += std::conj(u(r, prev)) * x[r];
        for (std::size_t r = 0; r < n; ++r) x[r] -= dot * u(r, prev);
      }
    }
    double nrm = 0.0;
    for (const auto& z : x) nrm += std::norm(z);
    nrm = std::sqrt(nrm);
    for (auto& z : x) z /= nrm;
    u.set_column(c, x);
  }
  return u;
}

Matrix random_orthonormal(std::size_t n, std::size_t m, Rng& rng) {
  return random_unitary(n, rng).block(0, 0, n, m);
}

HermitianMatrix with_spectrum(const std::vector<double>& values, Rng& rng) {
  const Matrix u = random_unitary(values.size(), rng);
  return HermitianMatrix(u * Matrix::diagonal(values) * u.adjoint());
}

Matrix scaled_coupling(std::size_t rows, std::size_t cols, double scale, Rng& rng) {
  Matrix e = random_complex(rows, cols, rng);
  if (scale == 0.0 || e.empty()) return Matrix(rows, cols);
  const double nrm = spectral_norm(e);
  return e * Complex(scale / nrm);
}

namespace {

HermitianMatrix clustered_block(std::size_t dim, double anchor, double lo, double hi, Rng& rng) {
  std::vector<double> values{anchor};
  for (std::size_t i = 1; i < dim; ++i) values.push_back(rng.uniform(lo, hi));
  return with_spectrum(values, rng);
}

// Gaussian Hermitian block whose row/column `slot` is decoupled with diagonal `value`.
HermitianMatrix with_isolated_value(std::size_t dim, double value, Rng& rng) {
  Matrix h = random_hermitian(dim, rng).matrix();
  const std::size_t slot = rng.index(0, dim - 1);
  for (std::size_t k = 0; k < dim; ++k) {
    h(slot, k) = 0.0;
    h(k, slot) = 0.0;
  }
  h(slot, slot) = value;
  return HermitianMatrix(h);
}

}  // namespace

BlockHermitian generate(const GeneratorSpec& spec) {
  if (spec.m == 0 || spec.n == 0) throw Error(ErrorCode::InvalidArgument, "generator needs m, n >= 1");
  Rng rng(spec.seed);
  HermitianMatrix h1;
  HermitianMatrix h2;
  switch (spec.ensemble) {
    case Ensemble::GaussianHermitian:
      h1 = random_hermitian(spec.m, rng);
      h2 = random_hermitian(spec.n, rng);
      break;
    case Ensemble::ClusteredSpectrum:
      h1 = clustered_block(spec.m, spec.gap_target, spec.gap_target, spec.gap_target + 1.0, rng);
      h2 = clustered_block(spec.n, 0.0, -1.0, 0.0, rng);
      break;
    case Ensemble::SharedEigenvalue: {
      const double shared = rng.uniform(-1.0, 1.0);
      h1 = with_isolated_value(spec.m, shared, rng);
      h2 = with_isolated_value(spec.n, shared, rng);
      break;
    }
  }
  Matrix e = scaled_coupling(spec.n, spec.m, spec.coupling_scale, rng);
  return BlockHermitian(std::move(h1), std::move(h2), std::move(e));
}

}  // namespace specbound
