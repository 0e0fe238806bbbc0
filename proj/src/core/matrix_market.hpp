#pragma once

#include <iosfwd>
#include <string>

#include "linalg.hpp"

namespace specbound {

enum class MarketFormat { Coordinate, Array };
enum class MarketField { Real, Complex, Integer };
enum class MarketSymmetry { General, Symmetric, Hermitian };

struct MarketMatrix {
  Matrix matrix;  // symmetric/hermitian files are expanded to the full square
  MarketFormat format = MarketFormat::Array;
  MarketField field = MarketField::Real;
  MarketSymmetry symmetry = MarketSymmetry::General;

  /// HermitianMatrix with the strict asymmetry check applied.
  HermitianMatrix hermitian() const;
};

/// Parses `array` and `coordinate` files with real/complex/integer fields
/// and general/symmetric/hermitian symmetry. `source` names the stream in
/// diagnostics.
MarketMatrix read_matrix_market(std::istream& in, const std::string& source = "<stream>");
MarketMatrix read_matrix_market_file(const std::string& path);

/// Writes `array` format with 17 significant digits; the field is `real`
/// when every imaginary part is zero. `hermitian` stores the lower triangle.
void write_matrix_market(std::ostream& out, const Matrix& m, bool hermitian = false);
void write_matrix_market_file(const std::string& path, const Matrix& m, bool hermitian = false);

}  // namespace specbound
