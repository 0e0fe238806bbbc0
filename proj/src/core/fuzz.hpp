#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "certifier.hpp"
#include "report.hpp"

namespace specbound {

/// Outcome of one family of seeded trials. Trial t uses derive_seed(seed, t),
/// so any failure reproduces from (seed, trial) alone.
struct FuzzFamily {
  std::string name;
  std::size_t trials = 0;
  std::size_t violations = 0;
  double worst_slack = std::numeric_limits<double>::infinity();
  std::optional<std::size_t> first_failure;
};

struct FuzzOptions {
  std::size_t trials = 10000;
  std::size_t max_dim = 12;  // blocks are at most max_dim / 2 on a side
  std::uint64_t seed = 0;
};

// Individual trial builders, exposed for replaying a failing trial.
BlockHermitian eigen_trial_instance(std::uint64_t seed, std::size_t trial, std::size_t max_block);
BlockRectangular singular_trial_instance(std::uint64_t seed, std::size_t trial, std::size_t max_block);
std::pair<Matrix, Matrix> degenerate_trial_instance(std::uint64_t seed, std::size_t trial,
                                                    std::size_t max_block);
std::pair<HermitianMatrix, Matrix> certify_trial_instance(std::uint64_t seed, std::size_t trial,
                                                          std::size_t max_dim);

/// |λ_i − λ̃_i| ≤ main_i ≤ main_global ≤ ‖E‖ and main ≤ ‖E‖²/η, tolerance 1e-9 (1 + ‖A‖).
FuzzFamily fuzz_eigen(std::size_t trials, std::size_t max_block, std::uint64_t seed);
/// Block singular value bounds and the zero tail, tolerance 1e-9 (1 + ‖B‖).
FuzzFamily fuzz_singular(std::size_t trials, std::size_t max_block, std::uint64_t seed);
/// One-sided [G E] bound, tolerance 1e-10.
FuzzFamily fuzz_degenerate(std::size_t trials, std::size_t max_block, std::uint64_t seed);
/// Residual certification on random (A, X1), tolerance 1e-9 (1 + ‖A‖).
FuzzFamily fuzz_certify(std::size_t trials, std::size_t max_dim, std::uint64_t seed);

struct FuzzSummary {
  FuzzOptions options;
  std::vector<FuzzFamily> families;

  std::size_t violations() const;
};

/// The eigenvalue and block singular value families.
FuzzSummary run_fuzz(const FuzzOptions& options);

ReportDocument to_document(const FuzzSummary& summary);

}  // namespace specbound
