#include <cmath>
#include <cstdio>
#include <filesystem>
#include <limits>
#include <sstream>

#include "bounds.hpp"
#include "doctest.h"
#include "fuzz.hpp"
#include "generator.hpp"
#include "matrix_market.hpp"
#include "random.hpp"
#include "report.hpp"

using namespace specbound;

namespace {

MarketMatrix parse(const std::string& text) {
  std::istringstream in(text);
  return read_matrix_market(in, "test");
}

ErrorCode parse_error(const std::string& text) {
  try {
    parse(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("SplitMix64 reference outputs") {
  // First outputs of the reference SplitMix64 seeded with 0.
  Rng rng(0);
  CHECK(rng.next() == 0xe220a8397b1dcdafULL);
  CHECK(rng.next() == 0x6e789e6aa1b965f4ULL);
  CHECK(rng.next() == 0x06c45d188009454fULL);
  Rng a(123), b(123);
  for (int i = 0; i < 100; ++i) REQUIRE(a.normal() == b.normal());
  CHECK(derive_seed(5, 1) != derive_seed(5, 2));
  CHECK(derive_seed(5, 1) != derive_seed(6, 1));
}

TEST_CASE("RNG moments") {
  Rng rng(77);
  double mean = 0.0, sq = 0.0, c2 = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal();
    mean += x;
    sq += x * x;
    c2 += std::norm(rng.complex_normal());
  }
  CHECK(std::abs(mean / n) < 0.01);
  CHECK(std::abs(sq / n - 1.0) < 0.01);
  CHECK(std::abs(c2 / n - 1.0) < 0.01);
  for (int i = 0; i < 1000; ++i) {
    const auto k = rng.index(3, 5);
    REQUIRE(k >= 3);
    REQUIRE(k <= 5);
  }
}

TEST_CASE("hermitian coordinate file expands the lower triangle") {
  const auto mm = parse(
      "%%MatrixMarket matrix coordinate real symmetric\n"
      "% a comment\n"
      "2 2 3\n1 1 1\n2 1 0.1\n2 2 2\n");
  CHECK(mm.format == MarketFormat::Coordinate);
  CHECK(mm.symmetry == MarketSymmetry::Symmetric);
  const auto a = mm.hermitian();
  CHECK(a(0, 0) == Complex(1.0));
  CHECK(a(0, 1) == Complex(0.1));
  CHECK(a(1, 0) == Complex(0.1));
  CHECK(a(1, 1) == Complex(2.0));
}

TEST_CASE("complex hermitian file conjugates the mirror") {
  const auto mm = parse(
      "%%MatrixMarket matrix coordinate complex hermitian\n"
      "2 2 3\n1 1 1 0\n2 1 0.5 0.25\n2 2 -1 0\n");
  CHECK(mm.matrix(0, 1) == Complex(0.5, -0.25));
  CHECK(mm.matrix(1, 0) == Complex(0.5, 0.25));
}

TEST_CASE("array general rectangular file") {
  const auto mm = parse(
      "%%MatrixMarket matrix array real general\n"
      "2 3\n1\n2\n3\n4\n5\n6\n");
  REQUIRE(mm.matrix.rows() == 2);
  REQUIRE(mm.matrix.cols() == 3);
  // column-major storage
  CHECK(mm.matrix(1, 0) == Complex(2.0));
  CHECK(mm.matrix(0, 1) == Complex(3.0));
  CHECK(mm.matrix(1, 2) == Complex(6.0));
}

TEST_CASE("integer field") {
  const auto mm = parse("%%MatrixMarket matrix coordinate integer general\n2 2 1\n2 1 7\n");
  CHECK(mm.matrix(1, 0) == Complex(7.0));
  CHECK(mm.matrix(0, 0) == Complex(0.0));
}

TEST_CASE("distinct diagnostics for malformed inputs") {
  CHECK(parse_error("%%MatrixMarket matrix coordinate pattern general\n2 2 1\n1 1\n") == ErrorCode::Unsupported);
  CHECK(parse_error("%%MatrixMarket matrix array real skew-symmetric\n2 2\n0\n1\n0\n") ==
        ErrorCode::Unsupported);
  CHECK(parse_error("%%NotMatrixMarket\n2 2 1\n1 1 1\n") == ErrorCode::Parse);
  CHECK(parse_error("%%MatrixMarket matrix coordinate real general\n2 2 2\n1 1 1\n") == ErrorCode::Dimension);
  CHECK(parse_error("%%MatrixMarket matrix coordinate real general\n2 2 1\n3 1 1\n") == ErrorCode::Dimension);
  CHECK(parse_error("%%MatrixMarket matrix coordinate real general\n2 2 1\n1 1 abc\n") == ErrorCode::Parse);
  CHECK(parse_error("%%MatrixMarket matrix coordinate real general\n2 2 1\n1 1 inf\n") ==
        ErrorCode::InvalidArgument);
  CHECK(parse_error("%%MatrixMarket matrix coordinate complex hermitian\n2 2 1\n1 1 1 0.5\n") ==
        ErrorCode::NotHermitian);
  CHECK(parse_error("%%MatrixMarket matrix coordinate real symmetric\n2 2 1\n1 2 1\n") == ErrorCode::Parse);
  CHECK_THROWS_AS(read_matrix_market_file("/nonexistent/file.mtx"), Error);
}

TEST_CASE("strict hermitian check on general files") {
  const auto mm = parse("%%MatrixMarket matrix array real general\n2 2\n1\n0.5\n0.1\n2\n");
  CHECK_THROWS_AS(mm.hermitian(), Error);
}

TEST_CASE("write then read preserves every bit") {
  Rng rng(51);
  const Matrix b = random_complex(4, 3, rng);
  std::stringstream s;
  write_matrix_market(s, b);
  const auto back = read_matrix_market(s);
  CHECK(back.field == MarketField::Complex);
  CHECK(back.matrix == b);

  const HermitianMatrix h = random_hermitian(5, rng);
  std::stringstream hs;
  write_matrix_market(hs, h.matrix(), true);
  const auto hback = read_matrix_market(hs);
  CHECK(hback.symmetry == MarketSymmetry::Hermitian);
  CHECK(hback.hermitian().matrix() == h.matrix());

  Matrix real(2, 2, {0.1, 1.0 / 3.0, -2.5e-300, 7.0});
  std::stringstream rs;
  write_matrix_market(rs, real);
  const auto rback = read_matrix_market(rs);
  CHECK(rback.field == MarketField::Real);
  CHECK(rback.matrix == real);

  const auto path = std::filesystem::temp_directory_path() / "specbound_roundtrip.mtx";
  write_matrix_market_file(path.string(), b);
  CHECK(read_matrix_market_file(path.string()).matrix == b);
  std::filesystem::remove(path);
}

TEST_CASE("generator is deterministic and honors the coupling scale") {
  for (auto ens : {Ensemble::GaussianHermitian, Ensemble::ClusteredSpectrum, Ensemble::SharedEigenvalue}) {
    GeneratorSpec spec;
    spec.m = 3;
    spec.n = 4;
    spec.seed = 12;
    spec.coupling_scale = 0.7;
    spec.ensemble = ens;
    const auto a = generate(spec).assemble();
    CHECK(a.matrix() == generate(spec).assemble().matrix());
    CHECK(spectral_norm(generate(spec).e()) == doctest::Approx(0.7).epsilon(1e-12));
    spec.seed = 13;
    CHECK_FALSE(a.matrix() == generate(spec).assemble().matrix());
  }
  GeneratorSpec bad;
  bad.m = 0;
  CHECK_THROWS_AS(generate(bad), Error);
}

TEST_CASE("every ensemble appears in the fuzz corpus and replays") {
  bool shared = false;
  for (std::size_t t = 0; t < 30; ++t) {
    const auto p = eigen_trial_instance(0, t, 6);
    CHECK(p.assemble().matrix() == eigen_trial_instance(0, t, 6).assemble().matrix());
    if (spectral_gap(eigenvalues(p.h1()), eigenvalues(p.h2())) == 0.0) shared = true;
  }
  CHECK(shared);
}

TEST_CASE("report JSON round trip") {
  const auto p = BlockHermitian::split(HermitianMatrix(Matrix(3, 3, {1.0, 0.1, 0.0, 0.1, 2.0, 0.3, 0.0, 0.3, 2.0})), 1);
  auto doc = to_document(eigen_bound_report(p, true));
  doc.seed = 42;
  doc.timestamp = "2024-01-01T00:00:00Z";
  CHECK(parse_json(render_json(doc)) == doc);

  // infinities and empty cells survive too
  auto shared = to_document(eigen_bound_report(
      BlockHermitian(HermitianMatrix::diagonal(std::vector<double>{1.0}),
                     HermitianMatrix::diagonal(std::vector<double>{1.0}), Matrix(1, 1, {0.2})),
      false));
  const auto back = parse_json(render_json(shared));
  CHECK(back == shared);
  const auto q = back.column_index("quadratic");
  REQUIRE(q);
  CHECK(std::get<double>(back.rows[0][*q]) == std::numeric_limits<double>::infinity());
  CHECK(std::holds_alternative<std::monostate>(back.rows[0][*back.column_index("lambda")]));

  ReportDocument nan_doc;
  nan_doc.kind = "x";
  nan_doc.columns = {{"v", ColumnType::Real}};
  nan_doc.rows = {{std::numeric_limits<double>::quiet_NaN()}};
  CHECK(std::isnan(std::get<double>(parse_json(render_json(nan_doc)).rows[0][0])));

  CHECK_THROWS_AS(parse_json("{\"schema_version\": 1}"), Error);
  CHECK_THROWS_AS(parse_json("not json"), Error);
}

TEST_CASE("CSV uses shortest round-trip reals") {
  ReportDocument doc;
  doc.kind = "x";
  doc.columns = {{"a", ColumnType::Real}, {"b", ColumnType::Integer}, {"c", ColumnType::Text}};
  doc.rows = {{0.1, std::int64_t{3}, std::string("H1")},
              {std::numeric_limits<double>::infinity(), Cell{}, std::string("H2")}};
  CHECK(render_csv(doc) == "a,b,c\n0.1,3,H1\ninf,,H2\n");
  CHECK(render(doc, ReportFormat::Csv) == render_csv(doc));
  CHECK(render_table(doc).find("H2") != std::string::npos);
}
