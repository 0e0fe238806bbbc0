#include "bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace specbound {

// -------------------------------------------------------- BlockHermitian

BlockHermitian::BlockHermitian(HermitianMatrix h1, HermitianMatrix h2, Matrix e)
    : h1_(std::move(h1)), h2_(std::move(h2)), e_(std::move(e)) {
  if (h1_.dim() == 0 || h2_.dim() == 0) {
    throw Error(ErrorCode::Degenerate, "both diagonal blocks must be nonempty");
  }
  if (e_.rows() != h2_.dim() || e_.cols() != h1_.dim()) {
    std::ostringstream msg;
    msg << "coupling block is " << e_.rows() << "x" << e_.cols() << ", expected "
        << h2_.dim() << "x" << h1_.dim();
    throw Error(ErrorCode::Dimension, msg.str());
  }
  if (!e_.all_finite()) throw Error(ErrorCode::InvalidArgument, "coupling block has non-finite entries");
}

BlockHermitian BlockHermitian::split(const HermitianMatrix& a, std::size_t m) {
  const std::size_t n_total = a.dim();
  if (m == 0 || m >= n_total) {
    std::ostringstream msg;
    msg << "split " << m << " must lie strictly between 0 and " << n_total;
    throw Error(ErrorCode::InvalidArgument, msg.str());
  }
  const Matrix& full = a.matrix();
  const std::size_t n = n_total - m;
  return BlockHermitian(HermitianMatrix(full.block(0, 0, m, m)),
                        HermitianMatrix(full.block(m, m, n, n)), full.block(m, 0, n, m));
}

HermitianMatrix BlockHermitian::assemble() const {
  Matrix a(m() + n(), m() + n());
  a.set_block(0, 0, h1_.matrix());
  a.set_block(m(), m(), h2_.matrix());
  a.set_block(m(), 0, e_);
  a.set_block(0, m(), e_.adjoint());
  return HermitianMatrix(a);
}

HermitianMatrix BlockHermitian::decoupled() const {
  Matrix a(m() + n(), m() + n());
  a.set_block(0, 0, h1_.matrix());
  a.set_block(m(), m(), h2_.matrix());
  return HermitianMatrix(a);
}

// ------------------------------------------------------------------ gaps

namespace {

// Distance from x to the closest entry of an ascending list.
double distance_to(const std::vector<double>& ascending, double x) {
  if (ascending.empty()) return kNotApplicable;
  const auto it = std::lower_bound(ascending.begin(), ascending.end(), x);
  double best = kNotApplicable;
  if (it != ascending.end()) best = std::abs(*it - x);
  if (it != ascending.begin()) best = std::min(best, std::abs(x - *std::prev(it)));
  return best;
}

std::vector<double> ascending_copy(const std::vector<double>& values) {
  std::vector<double> out(values);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

double spectral_gap(const std::vector<double>& s1, const std::vector<double>& s2) {
  if (s1.empty() || s2.empty()) {
    throw Error(ErrorCode::Degenerate, "spectral gap needs two nonempty spectra");
  }
  struct Tagged {
    double value;
    int block;
  };
  std::vector<Tagged> all;
  all.reserve(s1.size() + s2.size());
  for (double v : s1) all.push_back({v, 0});
  for (double v : s2) all.push_back({v, 1});
  std::sort(all.begin(), all.end(), [](const Tagged& a, const Tagged& b) { return a.value < b.value; });
  double gap = kNotApplicable;
  for (std::size_t i = 1; i < all.size(); ++i) {
    if (all[i].block != all[i - 1].block) gap = std::min(gap, all[i].value - all[i - 1].value);
  }
  return gap;
}

GapProfile per_index_gaps(const std::vector<double>& s1, const std::vector<double>& s2) {
  std::vector<std::size_t> order1(s1.size());
  std::vector<std::size_t> order2(s2.size());
  for (std::size_t i = 0; i < s1.size(); ++i) order1[i] = i;
  for (std::size_t i = 0; i < s2.size(); ++i) order2[i] = i;
  const auto descending = [](const std::vector<double>& s) {
    return [&s](std::size_t a, std::size_t b) { return s[a] > s[b]; };
  };
  std::stable_sort(order1.begin(), order1.end(), descending(s1));
  std::stable_sort(order2.begin(), order2.end(), descending(s2));
  const auto asc1 = ascending_copy(s1);
  const auto asc2 = ascending_copy(s2);

  GapProfile gp;
  const std::size_t total = s1.size() + s2.size();
  gp.merged.reserve(total);
  gp.eta = kNotApplicable;
  std::size_t i1 = 0;
  std::size_t i2 = 0;
  while (i1 < s1.size() || i2 < s2.size()) {
    const bool take_first =
        i2 == s2.size() || (i1 < s1.size() && s1[order1[i1]] >= s2[order2[i2]]);
    const Block origin = take_first ? Block::One : Block::Two;
    const std::size_t index = take_first ? order1[i1++] : order2[i2++];
    const double value = take_first ? s1[index] : s2[index];
    const double eta = distance_to(take_first ? asc2 : asc1, value);
    gp.merged.push_back(value);
    gp.origin.push_back(origin);
    gp.origin_index.push_back(index);
    gp.eta_i.push_back(eta);
    gp.provenance.push_back(eta == 0.0 ? Block::One : origin);
    gp.eta = std::min(gp.eta, eta);
  }
  return gp;
}

// ---------------------------------------------------------------- bounds

double weyl_bound(const Matrix& e) { return spectral_norm(e); }

double quadratic_bound(double norm_e, double eta) {
  if (eta == 0.0) return kNotApplicable;
  return norm_e * norm_e / eta;
}

double main_bound(double norm_e, double gap) {
  if (norm_e == 0.0) return 0.0;
  if (gap == 0.0) return norm_e;
  return 2.0 * norm_e * norm_e / (gap + std::hypot(gap, 2.0 * norm_e));
}

TwoByTwo exact_2x2(double alpha, double beta, double eps) {
  if (alpha < beta) std::swap(alpha, beta);
  const double e = std::abs(eps);
  const double d = alpha - beta;
  const double shift = e == 0.0 ? 0.0 : 2.0 * e * e / (d + std::hypot(d, 2.0 * e));
  return {alpha + shift, beta - shift, shift};
}

HermitianMatrix shifted_schur_complement(const BlockHermitian& p, double lambda) {
  const auto eig = hermitian_eigen(p.h2());
  const double scale = spectral_norm(p.assemble().matrix());
  double distance = kNotApplicable;
  for (double mu : eig.values.values) distance = std::min(distance, std::abs(mu - lambda));
  if (!(distance > 1e-10 * scale)) {
    std::ostringstream msg;
    msg << "shift " << lambda << " lies within " << distance << " of the spectrum of H2";
    throw Error(ErrorCode::Numerical, msg.str());
  }
  // E*(H2 − λI)⁻¹E = W* diag(1/(μ − λ)) W with W = V*E.
  const Matrix w = eig.vectors.matrix().adjoint() * p.e();
  Matrix scaled = w;
  for (std::size_t j = 0; j < scaled.rows(); ++j) {
    const double inv = 1.0 / (eig.values[j] - lambda);
    for (std::size_t c = 0; c < scaled.cols(); ++c) scaled(j, c) *= inv;
  }
  Matrix m = p.h1().matrix() - w.adjoint() * scaled;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= lambda;
  return HermitianMatrix(m);
}

BoundReport eigen_bound_report(const BlockHermitian& p, bool run_oracle) {
  BoundReport report;
  report.m = p.m();
  report.n = p.n();
  const auto gaps = per_index_gaps(eigenvalues(p.h1()), eigenvalues(p.h2()));
  report.norm_e = weyl_bound(p.e());
  report.eta = gaps.eta;

  double scale = report.norm_e;
  for (double v : gaps.merged) scale = std::max(scale, std::abs(v) + report.norm_e);
  // Gaps at rounding level do not make the quadratic bound meaningful.
  report.quadratic_applicable = report.eta > 1e-14 * scale && report.eta > 0.0;
  const double quadratic =
      report.quadratic_applicable ? quadratic_bound(report.norm_e, report.eta) : kNotApplicable;
  const double global = main_bound(report.norm_e, report.eta);

  std::vector<double> lambda;
  if (run_oracle) {
    lambda = eigenvalues(p.assemble());
    report.norm_a = std::max(std::abs(lambda.front()), std::abs(lambda.back()));
  }

  report.rows.reserve(gaps.size());
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    BoundRow row;
    row.lambda_tilde = gaps.merged[i];
    row.provenance = gaps.provenance[i];
    row.eta_i = gaps.eta_i[i];
    row.weyl = report.norm_e;
    row.quadratic = quadratic;
    row.main_i = main_bound(report.norm_e, row.eta_i);
    row.main_global = global;
    if (run_oracle) {
      row.lambda = lambda[i];
      row.true_diff = std::abs(lambda[i] - row.lambda_tilde);
    }
    report.rows.push_back(row);
  }
  return report;
}

namespace {

void note_diff(BoundCheck& check, std::optional<double> diff, double bound, double tolerance) {
  if (!diff) return;
  const double slack = bound - *diff;
  check.worst_slack = std::min(check.worst_slack, slack);
  if (slack < -tolerance) ++check.violations;
}

void note_order(BoundCheck& check, double smaller, double larger, double tolerance) {
  if (smaller > larger + tolerance) ++check.violations;
}

}  // namespace

BoundCheck check_bound_report(const BoundReport& report, double tolerance) {
  BoundCheck check;
  for (const auto& row : report.rows) {
    note_diff(check, row.true_diff, row.main_i, tolerance);
    note_order(check, row.main_i, row.main_global, tolerance);
    note_order(check, row.main_global, row.weyl, tolerance);
    if (report.quadratic_applicable && row.main_global > row.quadratic * (1.0 + 1e-12)) {
      ++check.violations;
    }
  }
  return check;
}

// ------------------------------------------------------- singular values

BlockRectangular BlockRectangular::split(const Matrix& b, std::size_t row_split,
                                         std::size_t col_split) {
  if (row_split > b.rows() || col_split > b.cols()) {
    throw Error(ErrorCode::InvalidArgument, "split exceeds matrix shape");
  }
  const std::size_t n = b.rows() - row_split;
  const std::size_t l = b.cols() - col_split;
  return {b.block(0, 0, row_split, col_split), b.block(0, col_split, row_split, l),
          b.block(row_split, 0, n, col_split), b.block(row_split, col_split, n, l)};
}

void BlockRectangular::validate() const {
  if (g1.rows() != e1.rows() || e2.rows() != g2.rows() || g1.cols() != e2.cols() ||
      e1.cols() != g2.cols()) {
    throw Error(ErrorCode::Dimension, "blocks of B are not conformal");
  }
}

Matrix BlockRectangular::assemble() const {
  validate();
  Matrix b(g1.rows() + g2.rows(), g1.cols() + g2.cols());
  b.set_block(0, 0, g1);
  b.set_block(0, g1.cols(), e1);
  b.set_block(g1.rows(), 0, e2);
  b.set_block(g1.rows(), g1.cols(), g2);
  return b;
}

Matrix BlockRectangular::decoupled() const {
  validate();
  Matrix b(g1.rows() + g2.rows(), g1.cols() + g2.cols());
  b.set_block(0, 0, g1);
  b.set_block(g1.rows(), g1.cols(), g2);
  return b;
}

SingularBoundReport sv_bound_report(const BlockRectangular& b, bool run_oracle) {
  b.validate();
  if (b.g1.empty() || b.g2.empty()) {
    throw Error(ErrorCode::Degenerate,
                "a diagonal block of B is empty; use the one-sided [G E] bound");
  }
  SingularBoundReport report;
  report.m = b.g1.rows();
  report.k = b.g1.cols();
  report.n = b.g2.rows();
  report.l = b.g2.cols();
  const auto s1 = singular_values(b.g1);
  const auto s2 = singular_values(b.g2);
  const auto gaps = per_index_gaps(s1, s2);
  report.epsilon = std::max(spectral_norm(b.e1), spectral_norm(b.e2));
  report.eta = spectral_gap(s1, s2);
  const double global = main_bound(report.epsilon, report.eta);

  const std::size_t p = report.m + report.n;
  const std::size_t q = report.k + report.l;
  const std::size_t r = std::min(p, q);
  const std::size_t full = std::max(p, q);

  std::vector<double> jw;
  if (run_oracle) {
    const Matrix bb = b.assemble();
    jw = eigenvalues(jordan_wielandt(bb));
    report.norm_b = std::max(0.0, jw.front());
    double tail = 0.0;
    for (std::size_t i = r; i < full; ++i) tail = std::max(tail, std::abs(jw[i]));
    for (std::size_t i = r; i < std::min(full, gaps.size()); ++i) {
      tail = std::max(tail, std::abs(gaps.merged[i]));
    }
    report.tail_max = tail;
  }

  report.rows.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    SingularBoundRow row;
    row.sigma_tilde = gaps.merged[i];
    row.provenance = gaps.provenance[i];
    row.eta_i = gaps.eta_i[i];
    row.main_i = main_bound(report.epsilon, row.eta_i);
    row.main_global = global;
    if (run_oracle) {
      row.sigma = std::max(0.0, jw[i]);
      row.true_diff = std::abs(*row.sigma - row.sigma_tilde);
    }
    report.rows.push_back(row);
  }
  return report;
}

BoundCheck check_singular_report(const SingularBoundReport& report, double tolerance) {
  BoundCheck check;
  for (const auto& row : report.rows) {
    note_diff(check, row.true_diff, row.main_i, tolerance);
    note_order(check, row.main_i, row.main_global, tolerance);
    note_order(check, row.main_global, report.epsilon, tolerance);
  }
  if (report.tail_max && *report.tail_max > 1e-10) ++check.violations;
  return check;
}

double sv_degenerate_bound(double sigma_tilde, double norm_e) {
  if (norm_e == 0.0) return 0.0;
  if (sigma_tilde == 0.0) return norm_e;
  return 2.0 * norm_e * norm_e / (2.0 * sigma_tilde + std::hypot(sigma_tilde, 2.0 * norm_e));
}

DegenerateReport sv_degenerate_report(const Matrix& g, const Matrix& e, bool run_oracle) {
  if (g.rows() != e.rows()) throw Error(ErrorCode::Dimension, "G and E must have equal row counts");
  DegenerateReport report;
  report.p = g.rows();
  report.q = g.cols() + e.cols();
  if (report.p == 0 || report.q == 0) throw Error(ErrorCode::InvalidArgument, "B = [G E] is empty");
  Matrix tilde(report.p, report.q);
  tilde.set_block(0, 0, g);
  const auto sigma_tilde = singular_values(tilde);
  report.norm_e = spectral_norm(e);
  std::vector<double> sigma;
  if (run_oracle) sigma = singular_values(hstack(g, e));
  const std::size_t r = std::min(report.p, report.q);
  for (std::size_t i = 0; i < r; ++i) {
    DegenerateRow row;
    row.sigma_tilde = sigma_tilde[i];
    row.bound = sv_degenerate_bound(row.sigma_tilde, report.norm_e);
    if (run_oracle) {
      row.sigma = sigma[i];
      row.true_diff = std::abs(sigma[i] - row.sigma_tilde);
    }
    report.rows.push_back(row);
  }
  return report;
}

std::pair<Matrix, Matrix> degenerate_pieces(const BlockRectangular& b) {
  b.validate();
  if (b.g2.rows() == 0) return {b.g1, b.e1};
  if (b.g1.rows() == 0) return {b.g2, b.e2};
  if (b.g1.cols() == 0) return {b.g2.adjoint(), b.e1.adjoint()};
  if (b.g2.cols() == 0) return {b.g1.adjoint(), b.e2.adjoint()};
  throw Error(ErrorCode::InvalidArgument, "partition is not degenerate");
}

BoundCheck check_degenerate_report(const DegenerateReport& report, double tolerance) {
  BoundCheck check;
  for (const auto& row : report.rows) note_diff(check, row.true_diff, row.bound, tolerance);
  return check;
}

}  // namespace specbound
