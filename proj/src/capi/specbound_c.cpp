#include "specbound/specbound.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "bounds.hpp"
#include "certifier.hpp"
#include "fuzz.hpp"
#include "lanczos.hpp"
#include "matrix_market.hpp"
#include "report.hpp"

struct sb_matrix {
  specbound::Matrix value;
};

struct sb_report {
  specbound::ReportDocument doc;
};

namespace {

thread_local std::string last_error;

sb_status to_status(specbound::ErrorCode code) {
  using specbound::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return SB_ERR_INVALID_ARGUMENT;
    case ErrorCode::Dimension: return SB_ERR_DIMENSION;
    case ErrorCode::NotHermitian: return SB_ERR_NOT_HERMITIAN;
    case ErrorCode::NoConvergence: return SB_ERR_NO_CONVERGENCE;
    case ErrorCode::Io: return SB_ERR_IO;
    case ErrorCode::Parse: return SB_ERR_PARSE;
    case ErrorCode::Unsupported: return SB_ERR_UNSUPPORTED;
    case ErrorCode::Degenerate: return SB_ERR_DEGENERATE;
    case ErrorCode::Numerical: return SB_ERR_NUMERICAL;
  }
  return SB_ERR_INTERNAL;
}

sb_status fail(sb_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes at the boundary.
template <typename F>
sb_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return SB_OK;
  } catch (const specbound::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SB_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SB_ERR_INTERNAL, "unknown exception");
  }
}

void require(bool condition, const char* what) {
  if (!condition) throw specbound::Error(specbound::ErrorCode::InvalidArgument, what);
}

sb_report* wrap(specbound::ReportDocument doc) { return new sb_report{std::move(doc)}; }

const specbound::Cell* find_cell(const sb_report* r, std::size_t row, const char* column) {
  if (!r || !column || row >= r->doc.rows.size()) return nullptr;
  const auto idx = r->doc.column_index(column);
  return idx ? &r->doc.rows[row][*idx] : nullptr;
}

sb_status numeric(const specbound::Cell* cell, double* out, const char* name) {
  if (!out) return fail(SB_ERR_INVALID_ARGUMENT, "null output pointer");
  if (!cell) return fail(SB_ERR_INVALID_ARGUMENT, std::string("no field named ") + (name ? name : "(null)"));
  if (const auto* d = std::get_if<double>(cell)) {
    *out = *d;
  } else if (const auto* i = std::get_if<std::int64_t>(cell)) {
    *out = static_cast<double>(*i);
  } else if (const auto* b = std::get_if<bool>(cell)) {
    *out = *b ? 1.0 : 0.0;
  } else {
    return fail(SB_ERR_INVALID_ARGUMENT, std::string("field ") + name + " is empty or not numeric");
  }
  last_error.clear();
  return SB_OK;
}

}  // namespace

extern "C" {

const char* sb_version(void) { return specbound::kToolVersion; }

const char* sb_status_string(sb_status status) {
  switch (status) {
    case SB_OK: return "ok";
    case SB_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SB_ERR_DIMENSION: return "dimension mismatch";
    case SB_ERR_NOT_HERMITIAN: return "matrix is not Hermitian";
    case SB_ERR_NO_CONVERGENCE: return "eigensolver did not converge";
    case SB_ERR_IO: return "I/O error";
    case SB_ERR_PARSE: return "parse error";
    case SB_ERR_UNSUPPORTED: return "unsupported input";
    case SB_ERR_DEGENERATE: return "degenerate partition";
    case SB_ERR_NUMERICAL: return "numerical failure";
    case SB_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* sb_last_error(void) { return last_error.c_str(); }

sb_status sb_matrix_create(size_t rows, size_t cols, const double* real, const double* imag,
                           sb_matrix** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    require(real != nullptr || rows * cols == 0, "null entry array");
    specbound::Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) {
        const std::size_t k = r * cols + c;
        m(r, c) = {real[k], imag ? imag[k] : 0.0};
      }
    *out = new sb_matrix{std::move(m)};
  });
}

sb_status sb_matrix_read_mm(const char* path, sb_matrix** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    *out = new sb_matrix{specbound::read_matrix_market_file(path).matrix};
  });
}

sb_status sb_matrix_write_mm(const sb_matrix* m, const char* path, int hermitian) {
  return guarded([&] {
    require(m != nullptr && path != nullptr, "null argument");
    specbound::write_matrix_market_file(path, m->value, hermitian != 0);
  });
}

size_t sb_matrix_rows(const sb_matrix* m) { return m ? m->value.rows() : 0; }
size_t sb_matrix_cols(const sb_matrix* m) { return m ? m->value.cols() : 0; }

sb_status sb_matrix_get(const sb_matrix* m, size_t row, size_t col, double* real, double* imag) {
  return guarded([&] {
    require(m != nullptr, "null matrix");
    if (row >= m->value.rows() || col >= m->value.cols())
      throw specbound::Error(specbound::ErrorCode::Dimension, "entry index out of range");
    const auto z = m->value(row, col);
    if (real) *real = z.real();
    if (imag) *imag = z.imag();
  });
}

void sb_matrix_free(sb_matrix* m) { delete m; }

sb_status sb_eigen_bound(const sb_matrix* a, size_t split, int oracle, sb_report** out) {
  return guarded([&] {
    require(a != nullptr && out != nullptr, "null argument");
    const specbound::HermitianMatrix h(a->value, specbound::Symmetry::Strict);
    const auto p = specbound::BlockHermitian::split(h, split);
    *out = wrap(specbound::to_document(specbound::eigen_bound_report(p, oracle != 0)));
  });
}

sb_status sb_singular_bound(const sb_matrix* b, size_t row_split, size_t col_split, int oracle,
                            sb_report** out) {
  return guarded([&] {
    require(b != nullptr && out != nullptr, "null argument");
    const auto blocks = specbound::BlockRectangular::split(b->value, row_split, col_split);
    const bool degenerate = row_split == 0 || col_split == 0 || row_split == b->value.rows() ||
                            col_split == b->value.cols();
    if (degenerate) {
      const auto [g, e] = specbound::degenerate_pieces(blocks);
      *out = wrap(specbound::to_document(specbound::sv_degenerate_report(g, e, oracle != 0)));
    } else {
      *out = wrap(specbound::to_document(specbound::sv_bound_report(blocks, oracle != 0)));
    }
  });
}

sb_status sb_certify(const sb_matrix* a, const sb_matrix* x1, int oracle, sb_report** out) {
  return guarded([&] {
    require(a != nullptr && x1 != nullptr && out != nullptr, "null argument");
    const specbound::HermitianMatrix h(a->value, specbound::Symmetry::Strict);
    *out = wrap(specbound::to_document(specbound::certify(h, x1->value, {.run_oracle = oracle != 0})));
  });
}

void sb_demo_options_init(sb_demo_options* options) {
  if (!options) return;
  options->dim = 100;
  options->steps = 15;
  options->select = 0;
  options->seed = 0;
  options->spectrum = SB_SPECTRUM_SPIKED;
  options->noise = 0.01;
  options->oracle = 1;
}

sb_status sb_lanczos_demo(const sb_demo_options* options, sb_report** out) {
  return guarded([&] {
    require(options != nullptr && out != nullptr, "null argument");
    specbound::DemoOptions demo;
    demo.dim = options->dim;
    demo.steps = options->steps;
    demo.select = options->select;
    demo.seed = options->seed;
    demo.spectrum = options->spectrum == SB_SPECTRUM_LINEAR ? specbound::DemoSpectrum::Linear
                                                            : specbound::DemoSpectrum::Spiked;
    demo.noise = options->noise;
    auto doc = specbound::to_document(specbound::lanczos_demo(demo, options->oracle != 0));
    doc.kind = "lanczos_demo";
    doc.descriptors.push_back({"steps", static_cast<std::int64_t>(demo.steps)});
    doc.descriptors.push_back(
        {"spectrum", std::string(demo.spectrum == specbound::DemoSpectrum::Linear ? "linear" : "spiked")});
    doc.descriptors.push_back({"noise", demo.noise});
    doc.seed = demo.seed;
    *out = wrap(std::move(doc));
  });
}

void sb_fuzz_options_init(sb_fuzz_options* options) {
  if (!options) return;
  options->trials = 10000;
  options->max_dim = 12;
  options->seed = 0;
}

sb_status sb_fuzz(const sb_fuzz_options* options, sb_report** out, size_t* violations) {
  return guarded([&] {
    require(options != nullptr && out != nullptr, "null argument");
    require(options->max_dim >= 2, "max_dim must be at least 2");
    const auto summary = specbound::run_fuzz({options->trials, options->max_dim, options->seed});
    if (violations) *violations = summary.violations();
    auto doc = specbound::to_document(summary);
    doc.seed = options->seed;
    *out = wrap(std::move(doc));
  });
}

const char* sb_report_kind(const sb_report* r) { return r ? r->doc.kind.c_str() : ""; }
size_t sb_report_row_count(const sb_report* r) { return r ? r->doc.rows.size() : 0; }
size_t sb_report_column_count(const sb_report* r) { return r ? r->doc.columns.size() : 0; }

const char* sb_report_column_name(const sb_report* r, size_t column) {
  if (!r || column >= r->doc.columns.size()) return nullptr;
  return r->doc.columns[column].name.c_str();
}

sb_status sb_report_get(const sb_report* r, size_t row, const char* column, double* out) {
  return numeric(find_cell(r, row, column), out, column);
}

sb_status sb_report_summary(const sb_report* r, const char* key, double* out) {
  return numeric(r && key ? r->doc.summary_value(key) : nullptr, out, key);
}

void sb_report_set_seed(sb_report* r, uint64_t seed) {
  if (r) r->doc.seed = seed;
}

void sb_report_stamp(sb_report* r) {
  if (r) r->doc.timestamp = specbound::utc_timestamp();
}

sb_status sb_report_render(const sb_report* r, sb_format format, char** out) {
  return guarded([&] {
    require(r != nullptr && out != nullptr, "null argument");
    specbound::ReportFormat f = specbound::ReportFormat::Table;
    if (format == SB_FORMAT_CSV) f = specbound::ReportFormat::Csv;
    else if (format == SB_FORMAT_JSON) f = specbound::ReportFormat::Json;
    else require(format == SB_FORMAT_TABLE, "unknown report format");
    const std::string text = specbound::render(r->doc, f);
    char* buffer = static_cast<char*>(std::malloc(text.size() + 1));
    if (!buffer) throw std::bad_alloc();
    std::memcpy(buffer, text.c_str(), text.size() + 1);
    *out = buffer;
  });
}

void sb_report_free(sb_report* r) { delete r; }
void sb_string_free(char* s) { std::free(s); }

}  // extern "C"
