// specbound command line front end. Talks to the library only through the C API.
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "specbound/specbound.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;

struct Common {
  std::uint64_t seed = 0;
  std::string format = "table";
  bool no_timestamp = false;
};

int exit_code_for(sb_status status) {
  switch (status) {
    case SB_OK: return kExitOk;
    case SB_ERR_NO_CONVERGENCE:
    case SB_ERR_NUMERICAL:
    case SB_ERR_INTERNAL: return kExitNumerical;
    default: return kExitInput;
  }
}

int report_failure(sb_status status) {
  std::cerr << "specbound: " << sb_status_string(status);
  const std::string detail = sb_last_error();
  if (!detail.empty()) std::cerr << ": " << detail;
  std::cerr << '\n';
  return exit_code_for(status);
}

// Owns a handle from the C API.
template <typename T, void (*Free)(T*)>
class Handle {
 public:
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(ptr_); }

  T** out() { return &ptr_; }
  T* get() const { return ptr_; }

 private:
  T* ptr_ = nullptr;
};

using MatrixHandle = Handle<sb_matrix, sb_matrix_free>;
using ReportHandle = Handle<sb_report, sb_report_free>;

// Stamps, renders and prints a finished report.
int emit(const Common& common, sb_report* report) {
  static const std::map<std::string, sb_format> formats{
      {"table", SB_FORMAT_TABLE}, {"csv", SB_FORMAT_CSV}, {"json", SB_FORMAT_JSON}};
  sb_report_set_seed(report, common.seed);
  if (!common.no_timestamp) sb_report_stamp(report);
  char* text = nullptr;
  if (const sb_status s = sb_report_render(report, formats.at(common.format), &text); s != SB_OK)
    return report_failure(s);
  std::fputs(text, stdout);
  sb_string_free(text);
  return kExitOk;
}

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--seed", common.seed, "Seed for every random draw")
      ->envname("SPECBOUND_SEED")
      ->capture_default_str();
  cmd->add_option("--format", common.format, "Report format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  cmd->add_flag("--no-timestamp", common.no_timestamp, "Omit the timestamp (byte-stable output)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gap-aware eigenvalue and singular value perturbation bounds"};
  app.set_version_flag("--version", std::string(sb_version()));
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  Common common;

  std::string matrix_path;
  std::string subspace_path;
  std::size_t split = 0;
  std::size_t row_split = 0;
  std::size_t col_split = 0;
  bool oracle = false;

  auto* bound = app.add_subcommand("bound", "Eigenvalue bounds for a 2×2 Hermitian block split");
  bound->add_option("--matrix", matrix_path, "Hermitian Matrix Market file")->required();
  bound->add_option("--split", split, "Rows/columns in the leading block H1")->required();
  bound->add_flag("--oracle", oracle, "Also eigensolve A and report true differences");
  add_common(bound, common);

  auto* svbound = app.add_subcommand("svbound", "Singular value bounds for a 2×2 block split");
  svbound->add_option("--matrix", matrix_path, "Matrix Market file")->required();
  svbound->add_option("--row-split", row_split, "Rows in G1")->required();
  svbound->add_option("--col-split", col_split, "Columns in G1")->required();
  svbound->add_flag("--oracle", oracle, "Also compute the singular values of B");
  add_common(svbound, common);

  sb_fuzz_options fuzz_options;
  sb_fuzz_options_init(&fuzz_options);
  auto* fuzz = app.add_subcommand("fuzz", "Check bound validity on seeded random instances");
  fuzz->add_option("--trials", fuzz_options.trials, "Instances per family")->capture_default_str();
  fuzz->add_option("--max-dim", fuzz_options.max_dim, "Largest matrix dimension")
      ->check(CLI::Range(std::size_t{2}, std::size_t{4096}))
      ->capture_default_str();
  add_common(fuzz, common);

  auto* certify = app.add_subcommand("certify", "Certify the Ritz values of a subspace");
  certify->add_option("--matrix", matrix_path, "Hermitian Matrix Market file")->required();
  certify->add_option("--subspace", subspace_path, "Orthonormal basis X1 (N×m)")->required();
  certify->add_flag("--oracle", oracle, "Also eigensolve A and report true errors");
  add_common(certify, common);

  sb_demo_options demo;
  sb_demo_options_init(&demo);
  std::string spectrum = "spiked";
  bool no_oracle = false;
  auto* lanczos = app.add_subcommand("lanczos-demo", "Certify Lanczos Ritz values on a demo matrix");
  lanczos->add_option("--dim", demo.dim, "Matrix dimension")->capture_default_str();
  lanczos->add_option("--steps", demo.steps, "Lanczos steps")->capture_default_str();
  lanczos->add_option("--select", demo.select, "Extreme Ritz pairs to certify (0 = all)")
      ->capture_default_str();
  lanczos->add_option("--spectrum", spectrum, "Demo spectrum")
      ->check(CLI::IsMember({"spiked", "linear"}))
      ->capture_default_str();
  lanczos->add_option("--noise", demo.noise, "Sparse symmetric noise scale")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  lanczos->add_flag("--no-oracle", no_oracle, "Skip the true-error columns");
  add_common(lanczos, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e, std::cerr, std::cerr);
    return kExitInput;
  }

  ReportHandle report;
  sb_status status = SB_OK;

  if (*bound || *svbound || *certify) {
    MatrixHandle a;
    if ((status = sb_matrix_read_mm(matrix_path.c_str(), a.out())) != SB_OK) return report_failure(status);
    if (*bound) {
      status = sb_eigen_bound(a.get(), split, oracle, report.out());
    } else if (*svbound) {
      status = sb_singular_bound(a.get(), row_split, col_split, oracle, report.out());
    } else {
      MatrixHandle x1;
      if ((status = sb_matrix_read_mm(subspace_path.c_str(), x1.out())) != SB_OK)
        return report_failure(status);
      status = sb_certify(a.get(), x1.get(), oracle, report.out());
    }
  } else if (*lanczos) {
    demo.seed = common.seed;
    demo.spectrum = spectrum == "linear" ? SB_SPECTRUM_LINEAR : SB_SPECTRUM_SPIKED;
    demo.oracle = no_oracle ? 0 : 1;
    status = sb_lanczos_demo(&demo, report.out());
  } else if (*fuzz) {
    fuzz_options.seed = common.seed;
    std::size_t violations = 0;
    status = sb_fuzz(&fuzz_options, report.out(), &violations);
    if (status == SB_OK) {
      const int rc = emit(common, report.get());
      if (rc != kExitOk) return rc;
      if (violations > 0) {
        std::cerr << "specbound: " << violations << " bound violation(s) detected\n";
        return kExitViolation;
      }
      return kExitOk;
    }
  }

  if (status != SB_OK) return report_failure(status);
  return emit(common, report.get());
}
