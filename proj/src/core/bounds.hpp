#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "linalg.hpp"

namespace specbound {

/// A = [[H1, E*], [E, H2]] with H1 m×m, H2 n×n and E n×m.
class BlockHermitian {
 public:
  BlockHermitian(HermitianMatrix h1, HermitianMatrix h2, Matrix e);

  /// Splits A so that the leading `m` rows/columns form H1.
  static BlockHermitian split(const HermitianMatrix& a, std::size_t m);

  std::size_t m() const noexcept { return h1_.dim(); }
  std::size_t n() const noexcept { return h2_.dim(); }
  const HermitianMatrix& h1() const noexcept { return h1_; }
  const HermitianMatrix& h2() const noexcept { return h2_; }
  const Matrix& e() const noexcept { return e_; }

  HermitianMatrix assemble() const;
  /// diag(H1, H2)
  HermitianMatrix decoupled() const;

 private:
  HermitianMatrix h1_;
  HermitianMatrix h2_;
  Matrix e_;
};

struct GapProfile {
  std::vector<double> merged;      // λ̃, descending
  std::vector<Block> provenance;   // display tag; shared values are tagged Block::One
  std::vector<Block> origin;       // block each merged value was taken from
  std::vector<std::size_t> origin_index;  // position inside its own block
  std::vector<double> eta_i;
  double eta = 0.0;

  std::size_t size() const noexcept { return merged.size(); }
};

/// min |μ1 − μ2| over both spectra. Throws Degenerate on an empty input.
double spectral_gap(const std::vector<double>& s1, const std::vector<double>& s2);

/// Stable descending merge (Block::One before equal Block::Two values) with
/// each value's distance to the other block's spectrum.
GapProfile per_index_gaps(const std::vector<double>& s1, const std::vector<double>& s2);

inline constexpr double kNotApplicable = std::numeric_limits<double>::infinity();

double weyl_bound(const Matrix& e);
/// ‖E‖²/η, or +∞ when η == 0.
double quadratic_bound(double norm_e, double eta);
/// 2‖E‖² / (gap + sqrt(gap² + 4‖E‖²)); exactly ‖E‖ at gap 0 and 0 at ‖E‖ = 0.
double main_bound(double norm_e, double gap);

struct TwoByTwo {
  double lambda_plus;
  double lambda_minus;
  double shift;
};

/// Eigenvalues of [[α, ε], [ε, β]] and the common displacement from α, β.
TwoByTwo exact_2x2(double alpha, double beta, double eps);

/// M(λ) = H1 − λI − E*(H2 − λI)⁻¹E. Throws Numerical when λ is within
/// 1e-10 ‖A‖ of the spectrum of H2.
HermitianMatrix shifted_schur_complement(const BlockHermitian& p, double lambda);

struct BoundRow {
  double lambda_tilde = 0.0;
  Block provenance = Block::One;
  double eta_i = 0.0;
  double weyl = 0.0;
  double quadratic = 0.0;  // kNotApplicable when the global gap vanishes
  double main_i = 0.0;
  double main_global = 0.0;
  std::optional<double> lambda;     // eigenvalue of A at the same position
  std::optional<double> true_diff;  // |λ_i − λ̃_i|
};

struct BoundReport {
  std::size_t m = 0;
  std::size_t n = 0;
  double norm_e = 0.0;
  double eta = 0.0;
  bool quadratic_applicable = false;
  std::optional<double> norm_a;  // filled when the oracle ran
  std::vector<BoundRow> rows;
};

BoundReport eigen_bound_report(const BlockHermitian& p, bool run_oracle);

/// Checked relations of a BoundReport.
struct BoundCheck {
  std::size_t violations = 0;
  double worst_slack = kNotApplicable;  // min_i (main_i − true_diff_i)
};

/// Validity (true_diff ≤ main_i), main_i ≤ main_global ≤ ‖E‖, and
/// main ≤ quadratic when the gap is positive. `tolerance` is absolute.
BoundCheck check_bound_report(const BoundReport& report, double tolerance);

// ------------------------------------------------------- singular values

/// B = [[G1, E1], [E2, G2]] with G1 m×k, E1 m×ℓ, E2 n×k, G2 n×ℓ.
struct BlockRectangular {
  Matrix g1;
  Matrix e1;
  Matrix e2;
  Matrix g2;

  /// Splits B after `row_split` rows and `col_split` columns.
  static BlockRectangular split(const Matrix& b, std::size_t row_split, std::size_t col_split);

  Matrix assemble() const;
  Matrix decoupled() const;
  void validate() const;
};

struct SingularBoundRow {
  double sigma_tilde = 0.0;
  Block provenance = Block::One;
  double eta_i = 0.0;
  double main_i = 0.0;
  double main_global = 0.0;
  std::optional<double> sigma;
  std::optional<double> true_diff;
};

struct SingularBoundReport {
  std::size_t m = 0, n = 0, k = 0, l = 0;
  double epsilon = 0.0;
  double eta = 0.0;
  std::optional<double> norm_b;
  std::vector<SingularBoundRow> rows;  // i ≤ min(m+n, k+ℓ)
  /// Largest |σ_i| and |σ̃_i| over the indices beyond min(m+n, k+ℓ); oracle only.
  std::optional<double> tail_max;
};

/// Throws Degenerate when G1 or G2 is empty; use sv_degenerate_report there.
SingularBoundReport sv_bound_report(const BlockRectangular& b, bool run_oracle);

BoundCheck check_singular_report(const SingularBoundReport& report, double tolerance);

/// 2‖E‖² / (2σ̃ + sqrt(σ̃² + 4‖E‖²))
double sv_degenerate_bound(double sigma_tilde, double norm_e);

struct DegenerateRow {
  double sigma_tilde = 0.0;
  double bound = 0.0;
  std::optional<double> sigma;
  std::optional<double> true_diff;
};

struct DegenerateReport {
  std::size_t p = 0, q = 0;
  double norm_e = 0.0;
  std::vector<DegenerateRow> rows;  // i ≤ min(p, q)
};

/// B = [G E] against B̃ = [G O].
DegenerateReport sv_degenerate_report(const Matrix& g, const Matrix& e, bool run_oracle);

/// Rewrites a split with an empty diagonal block as [G E] (transposing or
/// permuting columns where needed; singular values are unaffected).
std::pair<Matrix, Matrix> degenerate_pieces(const BlockRectangular& b);

BoundCheck check_degenerate_report(const DegenerateReport& report, double tolerance);

}  // namespace specbound
