#include "certifier.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bounds.hpp"

namespace specbound {

namespace {

void require_orthonormal(const Matrix& x1) {
  const double tol = 1e-10 * static_cast<double>(std::max<std::size_t>(x1.cols(), 1));
  const double defect = orthonormality_defect(x1);
  if (!(defect <= tol)) {
    std::ostringstream msg;
    msg << "subspace basis is not orthonormal: ||X1*X1 - I||_F = " << defect;
    throw Error(ErrorCode::InvalidArgument, msg.str());
  }
}

void require_shapes(const HermitianMatrix& a, const Matrix& x1) {
  if (x1.rows() != a.dim()) {
    throw Error(ErrorCode::Dimension, "subspace basis row count must equal the matrix dimension");
  }
}

}  // namespace

HermitianMatrix rayleigh_quotient(const HermitianMatrix& a, const Matrix& x1) {
  require_shapes(a, x1);
  require_orthonormal(x1);
  return HermitianMatrix(x1.adjoint() * (a.matrix() * x1));
}

SubspaceApproximation SubspaceApproximation::from_basis(HermitianMatrix a, Matrix x1) {
  HermitianMatrix h1 = rayleigh_quotient(a, x1);
  std::vector<double> ritz = eigenvalues(h1);
  return {std::move(a), std::move(x1), std::move(h1), std::move(ritz)};
}

Matrix residual_matrix(const HermitianMatrix& a, const Matrix& x1, const HermitianMatrix& h1) {
  require_shapes(a, x1);
  if (h1.dim() != x1.cols()) throw Error(ErrorCode::Dimension, "H1 does not match the basis width");
  return a.matrix() * x1 - x1 * h1.matrix();
}

Coupling coupling_block(const HermitianMatrix& a, const Matrix& x1) {
  require_shapes(a, x1);
  Coupling out;
  out.x2 = orthonormal_completion(x1);
  out.e = out.x2.adjoint() * (a.matrix() * x1);
  out.norm_e = spectral_norm(out.e);
  out.norm_r = spectral_norm(residual_matrix(a, x1, rayleigh_quotient(a, x1)));
  const double tol = 1e-10 * (1.0 + spectral_norm(a.matrix()));
  if (!(std::abs(out.norm_e - out.norm_r) <= tol)) {
    std::ostringstream msg;
    msg << "||E|| = " << out.norm_e << " disagrees with ||R|| = " << out.norm_r;
    throw Error(ErrorCode::Numerical, msg.str());
  }
  return out;
}

RitzBasis rotate_to_diagonal(const Matrix& x1, const HermitianMatrix& h1) {
  if (h1.dim() != x1.cols()) throw Error(ErrorCode::Dimension, "H1 does not match the basis width");
  const auto eig = hermitian_eigen(h1);
  RitzBasis out{x1 * eig.vectors.matrix(), eig.values.values};
  for (std::size_t c = 0; c < out.x1.cols(); ++c) {
    std::size_t arg = 0;
    double big = -1.0;
    for (std::size_t r = 0; r < out.x1.rows(); ++r) {
      const double mag = std::abs(out.x1(r, c));
      if (mag > big) {
        big = mag;
        arg = r;
      }
    }
    if (big <= 0.0) continue;
    const Complex phase = std::conj(out.x1(arg, c)) / big;
    for (std::size_t r = 0; r < out.x1.rows(); ++r) out.x1(r, c) *= phase;
    out.x1(arg, c) = big;
  }
  return out;
}

std::vector<std::vector<Complex>> column_residuals(const HermitianMatrix& a, const Matrix& x1,
                                                   const std::vector<double>& ritz) {
  require_shapes(a, x1);
  if (ritz.size() != x1.cols()) throw Error(ErrorCode::Dimension, "one Ritz value per column required");
  const Matrix ax = a.matrix() * x1;
  std::vector<std::vector<Complex>> out(x1.cols(), std::vector<Complex>(x1.rows()));
  for (std::size_t c = 0; c < x1.cols(); ++c)
    for (std::size_t r = 0; r < x1.rows(); ++r) out[c][r] = ax(r, c) - x1(r, c) * ritz[c];
  return out;
}

namespace {

double nearest_distance(double value, const std::vector<double>& others) {
  double gap = kNotApplicable;
  for (double mu : others) gap = std::min(gap, std::abs(value - mu));
  return gap;
}

double vector_norm(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

// Position (1-based) of `value` ahead of every equal entry of `others`.
std::size_t position_among(double value, const std::vector<double>& others) {
  std::size_t above = 0;
  for (double mu : others)
    if (mu > value) ++above;
  return above + 1;
}

}  // namespace

double struck_gap(const HermitianMatrix& projected, std::size_t i, double ritz_value) {
  return nearest_distance(ritz_value, eigenvalues(strike(projected, i)));
}

CertificationReport certify(const HermitianMatrix& a, const Matrix& x1,
                            const CertifyOptions& options) {
  require_shapes(a, x1);
  const std::size_t n = a.dim();
  const std::size_t m = x1.cols();
  if (m == 0 || m >= n) {
    std::ostringstream msg;
    msg << "certification needs 1 <= m < N, got m = " << m << ", N = " << n;
    throw Error(ErrorCode::InvalidArgument, msg.str());
  }
  const HermitianMatrix h1 = rayleigh_quotient(a, x1);
  const RitzBasis basis = rotate_to_diagonal(x1, h1);
  const auto& ritz = basis.ritz;

  const Coupling coupling = coupling_block(a, basis.x1);
  const Matrix x = hstack(basis.x1, coupling.x2);
  const HermitianMatrix projected(x.adjoint() * (a.matrix() * x));
  const HermitianMatrix h2(projected.matrix().block(m, m, n - m, n - m));
  const auto gaps = per_index_gaps(ritz, eigenvalues(h2));

  CertificationReport report;
  report.dim = n;
  report.m = m;
  report.norm_e = coupling.norm_e;
  report.whole_r_norm = coupling.norm_r;

  std::vector<double> lambda;
  if (options.run_oracle) {
    lambda = eigenvalues(a);
    report.norm_a = std::max(std::abs(lambda.front()), std::abs(lambda.back()));
  }

  const auto residuals = column_residuals(a, basis.x1, ritz);
  report.rows.resize(m);
  for (std::size_t pos = 0; pos < gaps.size(); ++pos) {
    if (gaps.origin[pos] != Block::One) continue;
    auto& row = report.rows[gaps.origin_index[pos]];
    row.global_index = pos + 1;
    row.eta = gaps.eta_i[pos];
  }
  for (std::size_t i = 0; i < m; ++i) {
    auto& row = report.rows[i];
    row.ritz_value = ritz[i];
    row.col_residual_norm = vector_norm(residuals[i]);
    const auto rest = eigenvalues(strike(projected, i));
    row.hat_eta = nearest_distance(ritz[i], rest);
    row.column_index = position_among(ritz[i], rest);
    row.per_column_bound = main_bound(row.col_residual_norm, row.hat_eta);
    row.whole_bound = main_bound(report.whole_r_norm, row.eta);
    if (options.run_oracle) {
      row.true_error = std::abs(lambda[row.global_index - 1] - ritz[i]);
      row.true_error_column = std::abs(lambda[row.column_index - 1] - ritz[i]);
    }
  }
  return report;
}

CertificationCheck check_certification(const CertificationReport& report, double tolerance) {
  CertificationCheck check;
  for (const auto& row : report.rows) {
    if (row.per_column_bound > report.whole_r_norm + tolerance) ++check.violations;
    if (row.true_error) {
      const double whole = row.whole_bound - *row.true_error;
      check.worst_whole_slack = std::min(check.worst_whole_slack, whole);
      if (whole < -tolerance) ++check.violations;
    }
    if (row.true_error_column) {
      const double column = row.per_column_bound - *row.true_error_column;
      check.worst_column_slack = std::min(check.worst_column_slack, column);
      if (column < -tolerance) ++check.violations;
    }
  }
  return check;
}

}  // namespace specbound
