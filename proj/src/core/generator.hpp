#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "bounds.hpp"
#include "linalg.hpp"
#include "random.hpp"

namespace specbound {

enum class Ensemble { GaussianHermitian, ClusteredSpectrum, SharedEigenvalue };

const char* to_string(Ensemble e) noexcept;

struct GeneratorSpec {
  std::size_t m = 1;
  std::size_t n = 1;
  double gap_target = 1.0;
  double coupling_scale = 0.1;
  std::uint64_t seed = 0;
  Ensemble ensemble = Ensemble::GaussianHermitian;
};

/// Deterministic for a fixed spec.
///  - GaussianHermitian: H1, H2 Hermitian with complex Gaussian entries.
///  - ClusteredSpectrum: λ(H1) ⊂ [gap, gap + 1] containing gap, λ(H2) ⊂ [−1, 0]
///    containing 0, each conjugated by a random unitary; the block gap is the
///    target up to rounding.
///  - SharedEigenvalue: both blocks carry the same decoupled diagonal entry,
///    so the computed spectra share a value bit for bit and η = 0.
/// E is complex Gaussian rescaled to ‖E‖ = coupling_scale.
BlockHermitian generate(const GeneratorSpec& spec);

// Building blocks shared by the generator, the fuzz harness and the tests.
Matrix random_complex(std::size_t rows, std::size_t cols, Rng& rng);
HermitianMatrix random_hermitian(std::size_t n, Rng& rng);
Matrix random_unitary(std::size_t n, Rng& rng);
/// First m columns of a random unitary.
Matrix random_orthonormal(std::size_t n, std::size_t m, Rng& rng);
/// U diag(values) U* for a random unitary U.
HermitianMatrix with_spectrum(const std::vector<double>& values, Rng& rng);
/// Complex Gaussian with spectral norm exactly `scale` (zero when scale == 0).
Matrix scaled_coupling(std::size_t rows, std::size_t cols, double scale, Rng& rng);

}  // namespace specbound
