#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "error.hpp"

namespace specbound {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Zero-sized shapes (0×n, n×0) are legal.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> values);
  static Matrix column_vector(std::span<const Complex> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Complex> entries() const noexcept { return data_; }

  Matrix adjoint() const;
  Matrix block(std::size_t row0, std::size_t col0, std::size_t nrows,
               std::size_t ncols) const;
  void set_block(std::size_t row0, std::size_t col0, const Matrix& src);

  std::vector<Complex> column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const Complex> values);
  double column_norm(std::size_t c) const;

  double frobenius_norm() const;
  bool all_finite() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(Complex s);

  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(Matrix lhs, Complex s) { return lhs *= s; }
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// [lhs, rhs] side by side.
Matrix hstack(const Matrix& lhs, const Matrix& rhs);
/// ‖X*X − I‖_F
double orthonormality_defect(const Matrix& x);

enum class Block { One, Two };

struct Spectrum {
  std::vector<double> values;  // descending
  std::optional<std::vector<Block>> provenance;

  std::size_t size() const noexcept { return values.size(); }
  bool empty() const noexcept { return values.empty(); }
  double operator[](std::size_t i) const { return values[i]; }

  /// Throws if values are not descending or provenance has the wrong length.
  void validate() const;
};

enum class Symmetry { Symmetrize, Strict };

/// Square matrix with conj(a_ji) == a_ij held exactly and a real diagonal.
class HermitianMatrix {
 public:
  static constexpr double kStrictAsymmetry = 1e-8;

  HermitianMatrix() = default;
  /// Stores (a + a*)/2. In strict mode a relative asymmetry
  /// ‖a − a*‖_F > 1e-8 ‖a‖_F is rejected instead.
  explicit HermitianMatrix(const Matrix& a, Symmetry mode = Symmetry::Symmetrize);

  static HermitianMatrix diagonal(std::span<const double> values);

  std::size_t dim() const noexcept { return m_.rows(); }
  const Matrix& matrix() const noexcept { return m_; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  double frobenius_norm() const { return m_.frobenius_norm(); }
  double trace() const;

 private:
  Matrix m_;
};

/// Columns form a unitary matrix up to ‖U*U − I‖_F ≤ dim × 1e-12.
class UnitaryMatrix {
 public:
  static constexpr double kTolerancePerDim = 1e-12;

  UnitaryMatrix() = default;
  explicit UnitaryMatrix(Matrix u);

  std::size_t dim() const noexcept { return u_.rows(); }
  const Matrix& matrix() const noexcept { return u_; }

 private:
  Matrix u_;
};

struct JacobiOptions {
  double relative_tolerance = 1e-13;
  int max_sweeps = 30;
};

struct EigenDecomposition {
  Spectrum values;       // descending
  UnitaryMatrix vectors;  // column j pairs with values[j]
};

/// Cyclic (row order) complex Jacobi. Stops when the off-diagonal Frobenius
/// mass drops to relative_tolerance × ‖A‖_F; throws ConvergenceError after
/// max_sweeps.
EigenDecomposition hermitian_eigen(const HermitianMatrix& a,
                                   const JacobiOptions& options = {});

/// Eigenvalues only, descending.
std::vector<double> eigenvalues(const HermitianMatrix& a);

/// Largest singular value; 0 for an empty or zero matrix.
double spectral_norm(const Matrix& m);

struct SingularValueDecomposition {
  Spectrum values;  // max(p, q) entries, zero padded
  Matrix left;      // p×p unitary
  Matrix right;     // q×q unitary
};

/// SVD through the eigendecomposition of the Jordan–Wielandt matrix.
SingularValueDecomposition svd(const Matrix& b);
/// Singular values only (max(p, q) entries, zero padded).
std::vector<double> singular_values(const Matrix& b);

/// [[O, B], [B*, O]]
HermitianMatrix jordan_wielandt(const Matrix& b);

/// Columns X2 with [X1, X2] unitary. X1 must have orthonormal columns.
Matrix orthonormal_completion(const Matrix& x1);

/// Removes row and column `index` (zero-based).
HermitianMatrix strike(const HermitianMatrix& a, std::size_t index);

}  // namespace specbound
