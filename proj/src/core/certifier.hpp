#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "linalg.hpp"

namespace specbound {

/// An approximate invariant subspace span(X1) of A together with its
/// Rayleigh quotient H1 = X1*AX1.
struct SubspaceApproximation {
  HermitianMatrix a;
  Matrix x1;
  HermitianMatrix h1;
  std::vector<double> ritz;  // eigenvalues of H1, descending

  static SubspaceApproximation from_basis(HermitianMatrix a, Matrix x1);
};

HermitianMatrix rayleigh_quotient(const HermitianMatrix& a, const Matrix& x1);

/// R = A·X1 − X1·H1
Matrix residual_matrix(const HermitianMatrix& a, const Matrix& x1, const HermitianMatrix& h1);

struct Coupling {
  Matrix e;   // X2*AX1, (N−m)×m
  Matrix x2;  // orthonormal completion of X1
  double norm_e = 0.0;
  double norm_r = 0.0;
};

/// Completes X1 to a unitary [X1, X2] and returns E = X2*AX1. Throws
/// Numerical if ‖E‖ and ‖R‖ disagree beyond 1e-10 (1 + ‖A‖).
Coupling coupling_block(const HermitianMatrix& a, const Matrix& x1);

struct RitzBasis {
  Matrix x1;                // Ritz vectors; largest-magnitude entry real positive
  std::vector<double> ritz;  // descending
};

/// X1' = X1·W where H1 = W Λ W*.
RitzBasis rotate_to_diagonal(const Matrix& x1, const HermitianMatrix& h1);

/// r_i = A x_i − x_i λ̃_i for each Ritz column.
std::vector<std::vector<Complex>> column_residuals(const HermitianMatrix& a, const Matrix& x1,
                                                   const std::vector<double>& ritz);

/// Strikes row/column i of X*AX and returns min |λ̃_i − μ| over the remaining
/// spectrum. `projected` is X*AX with the Ritz block leading.
double struck_gap(const HermitianMatrix& projected, std::size_t i, double ritz_value);

struct CertificationRow {
  double ritz_value = 0.0;
  std::size_t global_index = 0;  // 1-based position j_i in the spectrum of H1 ⊕ H2
  double col_residual_norm = 0.0;
  double hat_eta = 0.0;
  double per_column_bound = 0.0;
  double eta = 0.0;  // gap to the spectrum of H2
  double whole_bound = 0.0;
  /// 1-based position of λ̃_i among {λ̃_i} ∪ λ(Ĥ_i), the index the
  /// per-column bound pairs with.
  std::size_t column_index = 0;
  std::optional<double> true_error;         // |λ_{j_i} − λ̃_i|
  std::optional<double> true_error_column;  // |λ_{column_index} − λ̃_i|
};

struct CertificationReport {
  std::size_t dim = 0;
  std::size_t m = 0;
  double whole_r_norm = 0.0;
  double norm_e = 0.0;
  std::optional<double> norm_a;
  std::vector<CertificationRow> rows;
};

struct CertifyOptions {
  bool run_oracle = false;
};

/// Full residual-based certification of the Ritz values of span(X1).
CertificationReport certify(const HermitianMatrix& a, const Matrix& x1,
                            const CertifyOptions& options = {});

struct CertificationCheck {
  std::size_t violations = 0;
  double worst_column_slack = std::numeric_limits<double>::infinity();
  double worst_whole_slack = std::numeric_limits<double>::infinity();
};

CertificationCheck check_certification(const CertificationReport& report, double tolerance);

}  // namespace specbound
