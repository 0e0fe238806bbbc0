#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "certifier.hpp"
#include "linalg.hpp"

namespace specbound {

struct LanczosState {
  Matrix q;                  // N×k orthonormal Krylov basis
  std::vector<double> alpha;  // diagonal of T (k)
  std::vector<double> beta;   // subdiagonal of T (k − 1)
  std::uint64_t seed = 0;

  std::size_t steps() const noexcept { return alpha.size(); }
  /// The k×k tridiagonal T = Q*AQ.
  HermitianMatrix tridiagonal() const;
};

/// k steps of Lanczos with two-pass full reorthogonalization from a seeded
/// random unit start vector. Stops early (returning fewer columns) once
/// β_j < 1e-13 ‖A‖_F.
LanczosState lanczos(const HermitianMatrix& a, std::size_t k, std::uint64_t seed);

/// Ritz pairs of a Lanczos run handed to the certifier. By default all k
/// pairs when m == k, otherwise the ⌈m/2⌉ largest and ⌊m/2⌋ smallest;
/// `indices` (zero-based positions in the descending Ritz list) overrides.
SubspaceApproximation ritz_subspace(const HermitianMatrix& a, const LanczosState& state,
                                    std::size_t m,
                                    const std::optional<std::vector<std::size_t>>& indices = {});

enum class DemoSpectrum {
  Spiked,  // {−3, −2, linspace(−1, 1, dim − 4), 2, 3}: isolated extremes
  Linear,  // 1, 2, …, dim
};

struct DemoOptions {
  std::size_t dim = 100;
  std::size_t steps = 15;
  std::size_t select = 0;  // 0 keeps every Ritz pair
  std::uint64_t seed = 0;
  DemoSpectrum spectrum = DemoSpectrum::Spiked;
  double noise = 0.0;  // scale of the sparse symmetric perturbation
};

std::vector<double> demo_spectrum(std::size_t dim, DemoSpectrum kind);

/// diag(demo_spectrum) plus `noise` times a sparse real symmetric matrix
/// with about dim off-diagonal pairs of standard normal entries.
HermitianMatrix demo_matrix(const DemoOptions& options);

/// lanczos → ritz_subspace → certify on demo_matrix.
CertificationReport lanczos_demo(const DemoOptions& options, bool run_oracle);

}  // namespace specbound
