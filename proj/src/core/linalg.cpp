#include "linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace specbound {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::Dimension: return "dimension mismatch";
    case ErrorCode::NotHermitian: return "matrix is not Hermitian";
    case ErrorCode::NoConvergence: return "no convergence";
    case ErrorCode::Io: return "i/o error";
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::Unsupported: return "unsupported";
    case ErrorCode::Degenerate: return "degenerate partition";
    case ErrorCode::Numerical: return "numerical failure";
  }
  return "unknown";
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw Error(ErrorCode::Dimension, "matrix entry count does not match shape");
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> values) {
  Matrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

Matrix Matrix::column_vector(std::span<const Complex> values) {
  return Matrix(values.size(), 1, {values.begin(), values.end()});
}

Matrix Matrix::adjoint() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = std::conj((*this)(r, c));
  return t;
}

Matrix Matrix::block(std::size_t row0, std::size_t col0, std::size_t nrows,
                     std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) {
    throw Error(ErrorCode::Dimension, "block exceeds matrix bounds");
  }
  Matrix b(nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r)
    for (std::size_t c = 0; c < ncols; ++c) b(r, c) = (*this)(row0 + r, col0 + c);
  return b;
}

void Matrix::set_block(std::size_t row0, std::size_t col0, const Matrix& src) {
  if (row0 + src.rows() > rows_ || col0 + src.cols() > cols_) {
    throw Error(ErrorCode::Dimension, "block exceeds matrix bounds");
  }
  for (std::size_t r = 0; r < src.rows(); ++r)
    for (std::size_t c = 0; c < src.cols(); ++c) (*this)(row0 + r, col0 + c) = src(r, c);
}

std::vector<Complex> Matrix::column(std::size_t c) const {
  std::vector<Complex> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, std::span<const Complex> values) {
  if (values.size() != rows_) throw Error(ErrorCode::Dimension, "column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

double Matrix::column_norm(std::size_t c) const {
  double s = 0.0;
  for (std::size_t r = 0; r < rows_; ++r) s += std::norm((*this)(r, c));
  return std::sqrt(s);
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

bool Matrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorCode::Dimension, "shape mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorCode::Dimension, "shape mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw Error(ErrorCode::Dimension, "shape mismatch in *");
  Matrix out(lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

Matrix hstack(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.rows() != rhs.rows()) throw Error(ErrorCode::Dimension, "hstack row mismatch");
  Matrix out(lhs.rows(), lhs.cols() + rhs.cols());
  out.set_block(0, 0, lhs);
  out.set_block(0, lhs.cols(), rhs);
  return out;
}

double orthonormality_defect(const Matrix& x) {
  Matrix g = x.adjoint() * x;
  g -= Matrix::identity(x.cols());
  return g.frobenius_norm();
}

// -------------------------------------------------------------- Spectrum

void Spectrum::validate() const {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!(values[i - 1] >= values[i])) {
      throw Error(ErrorCode::InvalidArgument, "spectrum values are not descending");
    }
  }
  if (provenance && provenance->size() != values.size()) {
    throw Error(ErrorCode::Dimension, "spectrum provenance length mismatch");
  }
}

// ------------------------------------------------------- HermitianMatrix

HermitianMatrix::HermitianMatrix(const Matrix& a, Symmetry mode) : m_(a.rows(), a.cols()) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::Dimension, "Hermitian matrix must be square");
  if (!a.all_finite()) throw Error(ErrorCode::InvalidArgument, "matrix has non-finite entries");
  if (mode == Symmetry::Strict) {
    const double asym = (a - a.adjoint()).frobenius_norm();
    if (asym > kStrictAsymmetry * a.frobenius_norm()) {
      std::ostringstream msg;
      msg << "asymmetry " << asym << " exceeds relative tolerance " << kStrictAsymmetry;
      throw Error(ErrorCode::NotHermitian, msg.str());
    }
  }
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i) {
    m_(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex v = 0.5 * (a(i, j) + std::conj(a(j, i)));
      m_(i, j) = v;
      m_(j, i) = std::conj(v);
    }
  }
}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> values) {
  return HermitianMatrix(Matrix::diagonal(values));
}

double HermitianMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) t += m_(i, i).real();
  return t;
}

// --------------------------------------------------------- UnitaryMatrix

UnitaryMatrix::UnitaryMatrix(Matrix u) : u_(std::move(u)) {
  if (u_.rows() != u_.cols()) throw Error(ErrorCode::Dimension, "unitary matrix must be square");
  const double defect = orthonormality_defect(u_);
  const double tol = kTolerancePerDim * static_cast<double>(std::max<std::size_t>(u_.rows(), 1));
  if (!(defect <= tol)) {
    std::ostringstream msg;
    msg << "matrix is not unitary: ||U*U - I||_F = " << defect;
    throw Error(ErrorCode::Numerical, msg.str());
  }
}

// ---------------------------------------------------------------- Jacobi

namespace {

double off_diagonal_mass(const Matrix& a) {
  double s = 0.0;
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// One complex Jacobi rotation annihilating a(p, q). G = [[c, s·w], [−s·conj(w), c]]
// with w = a_pq / |a_pq|; A ← G* A G and V ← V G.
void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
  const Complex b = a(p, q);
  const double abs_b = std::abs(b);
  if (abs_b == 0.0) return;
  const Complex w = b / abs_b;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * abs_b);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
  const double c = 1.0 / std::hypot(1.0, t);
  const double s = t * c;
  const Complex sw = s * w;
  const Complex swc = s * std::conj(w);

  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    const Complex nkp = c * akp - swc * akq;
    const Complex nkq = sw * akp + c * akq;
    a(k, p) = nkp;
    a(p, k) = std::conj(nkp);
    a(k, q) = nkq;
    a(q, k) = std::conj(nkq);
  }
  a(p, p) = app - t * abs_b;
  a(q, q) = aqq + t * abs_b;
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  for (std::size_t k = 0; k < v.rows(); ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp - swc * vkq;
    v(k, q) = sw * vkp + c * vkq;
  }
}

}  // namespace

EigenDecomposition hermitian_eigen(const HermitianMatrix& a, const JacobiOptions& options) {
  const std::size_t n = a.dim();
  Matrix work = a.matrix();
  Matrix v = Matrix::identity(n);
  const double threshold = options.relative_tolerance * a.frobenius_norm();

  double off = off_diagonal_mass(work);
  int sweep = 0;
  while (off > threshold) {
    if (sweep == options.max_sweeps) {
      std::ostringstream msg;
      msg << "Jacobi eigensolver did not converge in " << options.max_sweeps
          << " sweeps; off-diagonal mass " << off << " (threshold " << threshold << ")";
      throw ConvergenceError(msg.str(), off);
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(work, v, p, q);
    off = off_diagonal_mass(work);
    ++sweep;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return work(i, i).real() > work(j, j).real();
  });

  Spectrum spectrum;
  spectrum.values.reserve(n);
  Matrix vectors(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    spectrum.values.push_back(work(order[k], order[k]).real());
    for (std::size_t r = 0; r < n; ++r) vectors(r, k) = v(r, order[k]);
  }
  return {std::move(spectrum), UnitaryMatrix(std::move(vectors))};
}

std::vector<double> eigenvalues(const HermitianMatrix& a) {
  return hermitian_eigen(a).values.values;
}

double spectral_norm(const Matrix& m) {
  if (m.empty()) return 0.0;
  const Matrix gram = m.rows() <= m.cols() ? m * m.adjoint() : m.adjoint() * m;
  const auto values = eigenvalues(HermitianMatrix(gram));
  return std::sqrt(std::max(0.0, values.front()));
}

HermitianMatrix jordan_wielandt(const Matrix& b) {
  const std::size_t p = b.rows();
  const std::size_t q = b.cols();
  Matrix aug(p + q, p + q);
  aug.set_block(0, p, b);
  aug.set_block(p, 0, b.adjoint());
  return HermitianMatrix(aug);
}

namespace {

// Gram–Schmidt the candidate columns (in order) against each other; columns
// that collapse are replaced from an orthonormal completion of the rest.
Matrix orthonormal_columns(std::vector<std::vector<Complex>> candidates, std::size_t dim) {
  std::vector<std::vector<Complex>> accepted;
  std::vector<std::size_t> accepted_slot;
  std::vector<std::size_t> missing;
  for (std::size_t slot = 0; slot < candidates.size(); ++slot) {
    auto& x = candidates[slot];
    double before = 0.0;
    for (const auto& z : x) before += std::norm(z);
    before = std::sqrt(before);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& y : accepted) {
        Complex dot{};
        for (std::size_t r = 0; r < dim; ++r) dot += std::conj(y[r]) * x[r];
        for (std::size_t r = 0; r < dim; ++r) x[r] -= dot * y[r];
      }
    }
    double after = 0.0;
    for (const auto& z : x) after += std::norm(z);
    after = std::sqrt(after);
    if (before == 0.0 || after < 0.5 * before) {
      missing.push_back(slot);
      continue;
    }
    for (auto& z : x) z /= after;
    accepted.push_back(x);
    accepted_slot.push_back(slot);
  }
  Matrix out(dim, dim);
  for (std::size_t k = 0; k < accepted.size(); ++k) out.set_column(accepted_slot[k], accepted[k]);
  for (std::size_t slot = candidates.size(); slot < dim; ++slot) missing.push_back(slot);
  if (!missing.empty()) {
    Matrix basis(dim, accepted.size());
    for (std::size_t k = 0; k < accepted.size(); ++k) basis.set_column(k, accepted[k]);
    const Matrix fill = orthonormal_completion(basis);
    for (std::size_t k = 0; k < missing.size(); ++k) out.set_column(missing[k], fill.column(k));
  }
  return out;
}

}  // namespace

SingularValueDecomposition svd(const Matrix& b) {
  const std::size_t p = b.rows();
  const std::size_t q = b.cols();
  const std::size_t r = std::min(p, q);
  SingularValueDecomposition out;
  out.values.values.assign(std::max(p, q), 0.0);
  if (b.empty()) {
    out.left = Matrix::identity(p);
    out.right = Matrix::identity(q);
    return out;
  }
  const auto eig = hermitian_eigen(jordan_wielandt(b));
  const Matrix& w = eig.vectors.matrix();
  std::vector<std::vector<Complex>> us;
  std::vector<std::vector<Complex>> vs;
  for (std::size_t i = 0; i < r; ++i) {
    out.values.values[i] = std::max(0.0, eig.values[i]);
    std::vector<Complex> u(p);
    std::vector<Complex> v(q);
    for (std::size_t k = 0; k < p; ++k) u[k] = w(k, i);
    for (std::size_t k = 0; k < q; ++k) v[k] = w(p + k, i);
    us.push_back(std::move(u));
    vs.push_back(std::move(v));
  }
  out.left = orthonormal_columns(std::move(us), p);
  out.right = orthonormal_columns(std::move(vs), q);
  return out;
}

std::vector<double> singular_values(const Matrix& b) {
  const std::size_t p = b.rows();
  const std::size_t q = b.cols();
  std::vector<double> values(std::max(p, q), 0.0);
  if (b.empty()) return values;
  const auto eig = eigenvalues(jordan_wielandt(b));
  for (std::size_t i = 0; i < std::min(p, q); ++i) values[i] = std::max(0.0, eig[i]);
  return values;
}

Matrix orthonormal_completion(const Matrix& x1) {
  const std::size_t n = x1.rows();
  const std::size_t m = x1.cols();
  if (m > n) throw Error(ErrorCode::Dimension, "basis has more columns than rows");
  const double defect = orthonormality_defect(x1);
  if (!(defect <= 1e-10)) {
    std::ostringstream msg;
    msg << "basis is not orthonormal: ||X1*X1 - I||_F = " << defect;
    throw Error(ErrorCode::InvalidArgument, msg.str());
  }
  const std::size_t want = n - m;
  Matrix x2(n, want);
  if (want == 0) return x2;

  // Residuals of the standard basis vectors against span(X1), one per column.
  Matrix residual = Matrix::identity(n) - x1 * x1.adjoint();
  std::vector<bool> used(n, false);
  std::vector<std::vector<Complex>> basis;
  for (std::size_t c = 0; c < m; ++c) basis.push_back(x1.column(c));

  for (std::size_t t = 0; t < want; ++t) {
    std::size_t best = n;
    double best_norm = -1.0;
    for (std::size_t k = 0; k < n; ++k) {
      if (used[k]) continue;
      const double nrm = residual.column_norm(k);
      if (nrm > best_norm) {
        best_norm = nrm;
        best = k;
      }
    }
    used[best] = true;
    std::vector<Complex> x(n, 0.0);
    x[best] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& y : basis) {
        Complex dot{};
        for (std::size_t r = 0; r < n; ++r) dot += std::conj(y[r]) * x[r];
        for (std::size_t r = 0; r < n; ++r) x[r] -= dot * y[r];
      }
    }
    double nrm = 0.0;
    for (const auto& z : x) nrm += std::norm(z);
    nrm = std::sqrt(nrm);
    if (nrm < 1e-8) {
      throw Error(ErrorCode::Numerical, "orthonormal completion lost rank");
    }
    for (auto& z : x) z /= nrm;
    x2.set_column(t, x);
    for (std::size_t k = 0; k < n; ++k) {
      if (used[k]) continue;
      Complex dot{};
      for (std::size_t r = 0; r < n; ++r) dot += std::conj(x[r]) * residual(r, k);
      for (std::size_t r = 0; r < n; ++r) residual(r, k) -= dot * x[r];
    }
    basis.push_back(std::move(x));
  }

  const double tol = UnitaryMatrix::kTolerancePerDim * static_cast<double>(n);
  const double self = orthonormality_defect(x2);
  const double cross = (x1.adjoint() * x2).frobenius_norm();
  if (!(std::hypot(self, std::sqrt(2.0) * cross) <= tol)) {
    std::ostringstream msg;
    msg << "orthonormal completion lost orthogonality (" << self << ", " << cross << ")";
    throw Error(ErrorCode::Numerical, msg.str());
  }
  return x2;
}

HermitianMatrix strike(const HermitianMatrix& a, std::size_t index) {
  const std::size_t n = a.dim();
  if (index >= n) {
    std::ostringstream msg;
    msg << "strike index " << index << " out of range for dimension " << n;
    throw Error(ErrorCode::InvalidArgument, msg.str());
  }
  Matrix out(n - 1, n - 1);
  for (std::size_t r = 0, rr = 0; r < n; ++r) {
    if (r == index) continue;
    for (std::size_t c = 0, cc = 0; c < n; ++c) {
      if (c == index) continue;
      out(rr, cc++) = a(r, c);
    }
    ++rr;
  }
  return HermitianMatrix(out);
}

}  // namespace specbound
