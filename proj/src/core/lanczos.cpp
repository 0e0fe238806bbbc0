#include "lanczos.hpp"

#include <cmath>
#include <sstream>

#include "random.hpp"

namespace specbound {

HermitianMatrix LanczosState::tridiagonal() const {
  const std::size_t k = alpha.size();
  Matrix t(k, k);
  for (std::size_t j = 0; j < k; ++j) t(j, j) = alpha[j];
  for (std::size_t j = 0; j + 1 < k; ++j) {
    t(j + 1, j) = beta[j];
    t(j, j + 1) = beta[j];
  }
  return HermitianMatrix(t);
}

namespace {

using Vector = std::vector<Complex>;

Complex dot(const Vector& x, const Vector& y) {
  Complex s{};
  for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return s;
}

double norm(const Vector& x) { return std::sqrt(dot(x, x).real()); }

Vector apply(const HermitianMatrix& a, const Vector& x) {
  const std::size_t n = a.dim();
  Vector y(n);
  for (std::size_t r = 0; r < n; ++r) {
    Complex s{};
    for (std::size_t c = 0; c < n; ++c) s += a(r, c) * x[c];
    y[r] = s;
  }
  return y;
}

}  // namespace

LanczosState lanczos(const HermitianMatrix& a, std::size_t k, std::uint64_t seed) {
  const std::size_t n = a.dim();
  if (k == 0 || k > n) {
    std::ostringstream msg;
    msg << "Lanczos step count " << k << " must lie in [1, " << n << "]";
    throw Error(ErrorCode::InvalidArgument, msg.str());
  }
  const double breakdown = 1e-13 * a.frobenius_norm();

  Rng rng(seed);
  Vector q(n);
  for (auto& z : q) z = rng.uniform(-1.0, 1.0);
  const double q_norm = norm(q);
  for (auto& z : q) z /= q_norm;

  std::vector<Vector> basis{q};
  LanczosState state;
  state.seed = seed;
  for (std::size_t j = 0; j < k; ++j) {
    Vector w = apply(a, basis[j]);
    const double alpha = dot(basis[j], w).real();
    state.alpha.push_back(alpha);
    for (std::size_t i = 0; i < n; ++i) {
      w[i] -= alpha * basis[j][i];
      if (j > 0) w[i] -= state.beta[j - 1] * basis[j - 1][i];
    }
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& v : basis) {
        const Complex h = dot(v, w);
        for (std::size_t i = 0; i < n; ++i) w[i] -= h * v[i];
      }
    }
    if (j + 1 == k) break;
    const double beta = norm(w);
    if (beta < breakdown) break;
    state.beta.push_back(beta);
    for (auto& z : w) z /= beta;
    basis.push_back(std::move(w));
  }

  const std::size_t steps = state.alpha.size();
  state.q = Matrix(n, steps);
  for (std::size_t j = 0; j < steps; ++j) state.q.set_column(j, basis[j]);
  return state;
}

SubspaceApproximation ritz_subspace(const HermitianMatrix& a, const LanczosState& state,
                                    std::size_t m,
                                    const std::optional<std::vector<std::size_t>>& indices) {
  const std::size_t k = state.steps();
  std::vector<std::size_t> chosen;
  if (indices) {
    chosen = *indices;
    for (std::size_t idx : chosen)
      if (idx >= k) throw Error(ErrorCode::InvalidArgument, "Ritz index out of range");
  } else {
    if (m == 0 || m > k) {
      std::ostringstream msg;
      msg << "cannot select " << m << " Ritz pairs from " << k << " Lanczos steps";
      throw Error(ErrorCode::InvalidArgument, msg.str());
    }
    const std::size_t high = (m + 1) / 2;
    const std::size_t low = m / 2;
    for (std::size_t i = 0; i < high; ++i) chosen.push_back(i);
    for (std::size_t i = k - low; i < k; ++i) chosen.push_back(i);
  }
  const auto eig = hermitian_eigen(state.tridiagonal());
  Matrix w(k, chosen.size());
  for (std::size_t c = 0; c < chosen.size(); ++c) {
    w.set_column(c, eig.vectors.matrix().column(chosen[c]));
  }
  return SubspaceApproximation::from_basis(a, state.q * w);
}

std::vector<double> demo_spectrum(std::size_t dim, DemoSpectrum kind) {
  std::vector<double> values(dim);
  if (kind == DemoSpectrum::Linear) {
    for (std::size_t i = 0; i < dim; ++i) values[i] = static_cast<double>(i + 1);
    return values;
  }
  if (dim < 6) throw Error(ErrorCode::InvalidArgument, "spiked demo spectrum needs dim >= 6");
  values.front() = -3.0;
  values[1] = -2.0;
  values[dim - 2] = 2.0;
  values.back() = 3.0;
  const std::size_t bulk = dim - 4;
  for (std::size_t i = 0; i < bulk; ++i)
    values[i + 2] = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(bulk - 1);
  return values;
}

HermitianMatrix demo_matrix(const DemoOptions& options) {
  Matrix a = Matrix::diagonal(demo_spectrum(options.dim, options.spectrum));
  if (options.noise > 0.0) {
    Rng rng(derive_seed(options.seed, 1));
    for (std::size_t p = 0; p < options.dim; ++p) {
      const std::size_t r = rng.index(0, options.dim - 1);
      const std::size_t c = rng.index(0, options.dim - 1);
      if (r == c) continue;
      const double v = options.noise * rng.normal();
      a(r, c) += v;
      a(c, r) += v;
    }
  }
  return HermitianMatrix(a);
}

CertificationReport lanczos_demo(const DemoOptions& options, bool run_oracle) {
  const HermitianMatrix a = demo_matrix(options);
  const LanczosState state = lanczos(a, options.steps, options.seed);
  const std::size_t m = options.select == 0 ? state.steps() : options.select;
  const SubspaceApproximation sub = ritz_subspace(a, state, m);
  return certify(sub.a, sub.x1, {.run_oracle = run_oracle});
}

}  // namespace specbound
