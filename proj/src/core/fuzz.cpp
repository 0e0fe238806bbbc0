#include "fuzz.hpp"

#include <algorithm>
#include <cmath>

#include "generator.hpp"
#include "random.hpp"

namespace specbound {

namespace {

// Stream offsets keep the families' seeds disjoint for the same base seed.
constexpr std::uint64_t kEigenStream = 0;
constexpr std::uint64_t kSingularStream = 1ULL << 40;
constexpr std::uint64_t kDegenerateStream = 2ULL << 40;
constexpr std::uint64_t kCertifyStream = 3ULL << 40;

double log_uniform(Rng& rng, double lo, double hi) {
  return std::exp(rng.uniform(std::log(lo), std::log(hi)));
}

// U diag(values) V* for a p×q target; values beyond min(p, q) are ignored.
Matrix with_singular_values(std::size_t p, std::size_t q, const std::vector<double>& values, Rng& rng) {
  Matrix s(p, q);
  for (std::size_t i = 0; i < std::min({p, q, values.size()}); ++i) s(i, i) = values[i];
  return random_unitary(p, rng) * s * random_unitary(q, rng).adjoint();
}

// Gaussian block with one decoupled entry `value`: an exact singular value.
Matrix with_isolated_singular_value(std::size_t p, std::size_t q, double value, Rng& rng) {
  Matrix g = random_complex(p, q, rng);
  const std::size_t r = rng.index(0, p - 1);
  const std::size_t c = rng.index(0, q - 1);
  for (std::size_t k = 0; k < q; ++k) g(r, k) = 0.0;
  for (std::size_t k = 0; k < p; ++k) g(k, c) = 0.0;
  g(r, c) = value;
  return g;
}

Matrix orthonormalize(Matrix x) {
  for (std::size_t c = 0; c < x.cols(); ++c) {
    auto v = x.column(c);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t prev = 0; prev < c; ++prev) {
        Complex dot{};
        for (std::size_t r = 0; r < x.rows(); ++r) dot += std::conj(x(r, prev)) * v[r];
        for (std::size_t r = 0; r < x.rows(); ++r) v[r] -= dot * x(r, prev);
      }
    }
    double nrm = 0.0;
    for (const auto& z : v) nrm += std::norm(z);
    nrm = std::sqrt(nrm);
    for (auto& z : v) z /= nrm;
    x.set_column(c, v);
  }
  return x;
}

void record(FuzzFamily& family, std::size_t trial, std::size_t violations, double slack) {
  ++family.trials;
  family.worst_slack = std::min(family.worst_slack, slack);
  if (violations > 0) {
    family.violations += violations;
    if (!family.first_failure) family.first_failure = trial;
  }
}

}  // namespace

BlockHermitian eigen_trial_instance(std::uint64_t seed, std::size_t trial, std::size_t max_block) {
  Rng rng(derive_seed(seed, kEigenStream + trial));
  GeneratorSpec spec;
  spec.ensemble = static_cast<Ensemble>(trial % 3);
  spec.m = rng.index(1, max_block);
  spec.n = rng.index(1, max_block);
  spec.gap_target = rng.uniform(0.0, 2.0);
  spec.coupling_scale = trial % 17 == 5 ? 0.0 : log_uniform(rng, 1e-3, 2.0);
  spec.seed = rng.next();
  return generate(spec);
}

BlockRectangular singular_trial_instance(std::uint64_t seed, std::size_t trial, std::size_t max_block) {
  Rng rng(derive_seed(seed, kSingularStream + trial));
  const std::size_t m = rng.index(1, max_block);
  const std::size_t k = rng.index(1, max_block);
  const std::size_t n = rng.index(1, max_block);
  const std::size_t l = rng.index(1, max_block);
  BlockRectangular b;
  switch (trial % 3) {
    case 0:
      b.g1 = random_complex(m, k, rng);
      b.g2 = random_complex(n, l, rng);
      break;
    case 1: {
      const double gap = rng.uniform(0.0, 2.0);
      std::vector<double> s1{1.0 + gap};
      std::vector<double> s2{1.0};
      for (std::size_t i = 1; i < std::min(m, k); ++i) s1.push_back(rng.uniform(1.0 + gap, 2.0 + gap));
      for (std::size_t i = 1; i < std::min(n, l); ++i) s2.push_back(rng.uniform(0.0, 1.0));
      b.g1 = with_singular_values(m, k, s1, rng);
      b.g2 = with_singular_values(n, l, s2, rng);
      break;
    }
    default: {
      const double shared = rng.uniform(0.1, 2.0);
      b.g1 = with_isolated_singular_value(m, k, shared, rng);
      b.g2 = with_isolated_singular_value(n, l, shared, rng);
      break;
    }
  }
  const double scale = log_uniform(rng, 1e-3, 2.0);
  b.e1 = scaled_coupling(m, l, scale, rng);
  b.e2 = scaled_coupling(n, k, scale * rng.uniform(0.0, 1.0), rng);
  return b;
}

std::pair<Matrix, Matrix> degenerate_trial_instance(std::uint64_t seed, std::size_t trial,
                                                    std::size_t max_block) {
  Rng rng(derive_seed(seed, kDegenerateStream + trial));
  const std::size_t p = rng.index(1, max_block);
  const std::size_t k = rng.index(1, max_block);
  const std::size_t l = rng.index(1, max_block);
  Matrix g = random_complex(p, k, rng);
  Matrix e = scaled_coupling(p, l, log_uniform(rng, 1e-3, 2.0), rng);
  return {std::move(g), std::move(e)};
}

std::pair<HermitianMatrix, Matrix> certify_trial_instance(std::uint64_t seed, std::size_t trial,
                                                          std::size_t max_dim) {
  Rng rng(derive_seed(seed, kCertifyStream + trial));
  const std::size_t n = rng.index(2, std::max<std::size_t>(2, max_dim));
  const std::size_t m = rng.index(1, n - 1);
  HermitianMatrix a = random_hermitian(n, rng);
  Matrix x1;
  if (trial % 2 == 0) {
    x1 = random_orthonormal(n, m, rng);
  } else {
    // Perturbed eigenvectors: the regime the certificates are meant for.
    const auto eig = hermitian_eigen(a);
    const std::size_t first = rng.index(0, n - m);
    Matrix v = eig.vectors.matrix().block(0, first, n, m);
    v += random_complex(n, m, rng) * Complex(log_uniform(rng, 1e-6, 1e-1));
    x1 = orthonormalize(std::move(v));
  }
  return {std::move(a), std::move(x1)};
}

FuzzFamily fuzz_eigen(std::size_t trials, std::size_t max_block, std::uint64_t seed) {
  FuzzFamily family;
  family.name = "eigen";
  for (std::size_t t = 0; t < trials; ++t) {
    const auto report = eigen_trial_instance(seed, t, max_block);
    const auto bounds = eigen_bound_report(report, true);
    const auto check = check_bound_report(bounds, 1e-9 * (1.0 + *bounds.norm_a));
    record(family, t, check.violations, check.worst_slack);
  }
  return family;
}

FuzzFamily fuzz_singular(std::size_t trials, std::size_t max_block, std::uint64_t seed) {
  FuzzFamily family;
  family.name = "singular";
  for (std::size_t t = 0; t < trials; ++t) {
    const auto report = sv_bound_report(singular_trial_instance(seed, t, max_block), true);
    const auto check = check_singular_report(report, 1e-9 * (1.0 + *report.norm_b));
    record(family, t, check.violations, check.worst_slack);
  }
  return family;
}

FuzzFamily fuzz_degenerate(std::size_t trials, std::size_t max_block, std::uint64_t seed) {
  FuzzFamily family;
  family.name = "degenerate";
  for (std::size_t t = 0; t < trials; ++t) {
    const auto [g, e] = degenerate_trial_instance(seed, t, max_block);
    const auto check = check_degenerate_report(sv_degenerate_report(g, e, true), 1e-10);
    record(family, t, check.violations, check.worst_slack);
  }
  return family;
}

FuzzFamily fuzz_certify(std::size_t trials, std::size_t max_dim, std::uint64_t seed) {
  FuzzFamily family;
  family.name = "certify";
  for (std::size_t t = 0; t < trials; ++t) {
    const auto [a, x1] = certify_trial_instance(seed, t, max_dim);
    const auto report = certify(a, x1, {.run_oracle = true});
    const auto check = check_certification(report, 1e-9 * (1.0 + *report.norm_a));
    record(family, t, check.violations, std::min(check.worst_column_slack, check.worst_whole_slack));
  }
  return family;
}

std::size_t FuzzSummary::violations() const {
  std::size_t total = 0;
  for (const auto& f : families) total += f.violations;
  return total;
}

FuzzSummary run_fuzz(const FuzzOptions& options) {
  const std::size_t max_block = std::max<std::size_t>(1, options.max_dim / 2);
  FuzzSummary summary{options, {}};
  summary.families.push_back(fuzz_eigen(options.trials, max_block, options.seed));
  summary.families.push_back(fuzz_singular(options.trials, max_block, options.seed));
  return summary;
}

ReportDocument to_document(const FuzzSummary& summary) {
  ReportDocument doc;
  doc.kind = "fuzz";
  doc.descriptors = {{"trials", static_cast<std::int64_t>(summary.options.trials)},
                     {"max_dim", static_cast<std::int64_t>(summary.options.max_dim)}};
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& f : summary.families) worst = std::min(worst, f.worst_slack);
  doc.summary = {{"violations", static_cast<std::int64_t>(summary.violations())},
                 {"worst_slack", worst}};
  doc.columns = {{"family", ColumnType::Text},
                 {"trials", ColumnType::Integer},
                 {"violations", ColumnType::Integer},
                 {"worst_slack", ColumnType::Real},
                 {"first_failure", ColumnType::Integer}};
  for (const auto& f : summary.families) {
    doc.rows.push_back({f.name, static_cast<std::int64_t>(f.trials),
                        static_cast<std::int64_t>(f.violations), f.worst_slack,
                        f.first_failure ? Cell{static_cast<std::int64_t>(*f.first_failure)} : Cell{}});
  }
  return doc;
}

}  // namespace specbound
