#include "matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace specbound {

namespace {

[[noreturn]] void fail(ErrorCode code, const std::string& source, std::size_t line,
                       const std::string& what) {
  std::ostringstream msg;
  msg << source;
  if (line > 0) msg << ":" << line;
  msg << ": " << what;
  throw Error(code, msg.str());
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

bool blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); });
}

class LineReader {
 public:
  LineReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

  // Next non-comment, non-blank line; false at end of input.
  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++number_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (blank(line) || line.front() == '%') continue;
      return true;
    }
    return false;
  }

  std::size_t number() const { return number_; }
  const std::string& source() const { return source_; }

 private:
  std::istream& in_;
  std::string source_;
  std::size_t number_ = 1;  // the header is line 1
};

double parse_real(const std::string& token, const LineReader& reader) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    fail(ErrorCode::Parse, reader.source(), reader.number(), "malformed number '" + token + "'");
  }
  if (!std::isfinite(value)) {
    fail(ErrorCode::InvalidArgument, reader.source(), reader.number(),
         "non-finite entry '" + token + "'");
  }
  return value;
}

std::size_t parse_count(const std::string& token, const LineReader& reader, const char* what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    fail(ErrorCode::Parse, reader.source(), reader.number(),
         std::string("malformed ") + what + " '" + token + "'");
  }
  return value;
}

Complex parse_value(const std::vector<std::string>& words, std::size_t offset, MarketField field,
                    const LineReader& reader) {
  const std::size_t want = field == MarketField::Complex ? 2 : 1;
  if (words.size() != offset + want) {
    std::ostringstream msg;
    msg << "expected " << offset + want << " fields, found " << words.size();
    fail(ErrorCode::Parse, reader.source(), reader.number(), msg.str());
  }
  const double re = parse_real(words[offset], reader);
  const double im = field == MarketField::Complex ? parse_real(words[offset + 1], reader) : 0.0;
  return {re, im};
}

void place(Matrix& m, std::size_t i, std::size_t j, Complex v, MarketSymmetry symmetry,
           const LineReader& reader) {
  if (symmetry != MarketSymmetry::General) {
    if (i < j) {
      fail(ErrorCode::Parse, reader.source(), reader.number(),
           "symmetric/hermitian files must store the lower triangle only");
    }
    if (i == j && symmetry == MarketSymmetry::Hermitian && v.imag() != 0.0) {
      fail(ErrorCode::NotHermitian, reader.source(), reader.number(),
           "hermitian matrix has a diagonal entry with nonzero imaginary part");
    }
  }
  m(i, j) = v;
  if (i != j) {
    if (symmetry == MarketSymmetry::Symmetric) m(j, i) = v;
    if (symmetry == MarketSymmetry::Hermitian) m(j, i) = std::conj(v);
  }
}

}  // namespace

HermitianMatrix MarketMatrix::hermitian() const { return HermitianMatrix(matrix, Symmetry::Strict); }

MarketMatrix read_matrix_market(std::istream& in, const std::string& source) {
  std::string header;
  if (!std::getline(in, header)) fail(ErrorCode::Parse, source, 0, "empty input");
  if (!header.empty() && header.back() == '\r') header.pop_back();
  const auto words = split_words(header);
  if (words.size() != 5 || words[0] != "%%MatrixMarket" || lower(words[1]) != "matrix") {
    fail(ErrorCode::Parse, source, 1, "malformed Matrix Market header");
  }
  MarketMatrix out;
  const std::string format = lower(words[2]);
  const std::string field = lower(words[3]);
  const std::string symmetry = lower(words[4]);

  if (format == "coordinate") out.format = MarketFormat::Coordinate;
  else if (format == "array") out.format = MarketFormat::Array;
  else fail(ErrorCode::Parse, source, 1, "unknown format '" + words[2] + "'");

  if (field == "real") out.field = MarketField::Real;
  else if (field == "complex") out.field = MarketField::Complex;
  else if (field == "integer") out.field = MarketField::Integer;
  else if (field == "pattern") fail(ErrorCode::Unsupported, source, 1, "'pattern' field is not supported");
  else fail(ErrorCode::Parse, source, 1, "unknown field '" + words[3] + "'");

  if (symmetry == "general") out.symmetry = MarketSymmetry::General;
  else if (symmetry == "symmetric") out.symmetry = MarketSymmetry::Symmetric;
  else if (symmetry == "hermitian") out.symmetry = MarketSymmetry::Hermitian;
  else if (symmetry == "skew-symmetric") fail(ErrorCode::Unsupported, source, 1, "'skew-symmetric' is not supported");
  else fail(ErrorCode::Parse, source, 1, "unknown symmetry '" + words[4] + "'");

  LineReader reader(in, source);
  std::string line;
  if (!reader.next(line)) fail(ErrorCode::Parse, source, reader.number(), "missing size line");
  const auto size = split_words(line);
  const std::size_t expected_size = out.format == MarketFormat::Coordinate ? 3 : 2;
  if (size.size() != expected_size) fail(ErrorCode::Parse, source, reader.number(), "malformed size line");
  const std::size_t rows = parse_count(size[0], reader, "row count");
  const std::size_t cols = parse_count(size[1], reader, "column count");
  if (out.symmetry != MarketSymmetry::General && rows != cols) {
    fail(ErrorCode::Dimension, source, reader.number(), "symmetric/hermitian matrix must be square");
  }
  out.matrix = Matrix(rows, cols);

  if (out.format == MarketFormat::Coordinate) {
    const std::size_t nnz = parse_count(size[2], reader, "entry count");
    for (std::size_t k = 0; k < nnz; ++k) {
      if (!reader.next(line)) {
        std::ostringstream msg;
        msg << "expected " << nnz << " entries, found " << k;
        fail(ErrorCode::Dimension, source, reader.number(), msg.str());
      }
      const auto entry = split_words(line);
      if (entry.size() < 2) fail(ErrorCode::Parse, source, reader.number(), "malformed entry");
      const std::size_t i = parse_count(entry[0], reader, "row index");
      const std::size_t j = parse_count(entry[1], reader, "column index");
      if (i == 0 || j == 0 || i > rows || j > cols) {
        fail(ErrorCode::Dimension, source, reader.number(), "entry index out of range");
      }
      place(out.matrix, i - 1, j - 1, parse_value(entry, 2, out.field, reader), out.symmetry, reader);
    }
  } else {
    for (std::size_t j = 0; j < cols; ++j) {
      const std::size_t first = out.symmetry == MarketSymmetry::General ? 0 : j;
      for (std::size_t i = first; i < rows; ++i) {
        if (!reader.next(line)) fail(ErrorCode::Dimension, source, reader.number(), "too few array entries");
        place(out.matrix, i, j, parse_value(split_words(line), 0, out.field, reader), out.symmetry, reader);
      }
    }
  }
  if (reader.next(line)) fail(ErrorCode::Dimension, source, reader.number(), "more entries than declared");
  return out;
}

MarketMatrix read_matrix_market_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  return read_matrix_market(in, path);
}

namespace {

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_matrix_market(std::ostream& out, const Matrix& m, bool hermitian) {
  const bool is_complex = std::any_of(m.entries().begin(), m.entries().end(),
                                      [](const Complex& z) { return z.imag() != 0.0; });
  if (hermitian && m.rows() != m.cols()) throw Error(ErrorCode::Dimension, "hermitian output must be square");
  out << "%%MatrixMarket matrix array " << (is_complex ? "complex" : "real") << ' '
      << (hermitian ? (is_complex ? "hermitian" : "symmetric") : "general") << '\n';
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = hermitian ? j : 0; i < m.rows(); ++i) {
      out << format_real(m(i, j).real());
      if (is_complex) out << ' ' << format_real(m(i, j).imag());
      out << '\n';
    }
  }
}

void write_matrix_market_file(const std::string& path, const Matrix& m, bool hermitian) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write '" + path + "'");
  write_matrix_market(out, m, hermitian);
  if (!out) throw Error(ErrorCode::Io, "write to '" + path + "' failed");
}

}  // namespace specbound
