#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bounds.hpp"
#include "certifier.hpp"

namespace specbound {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

enum class ColumnType { Real, Integer, Text, Flag };

struct Column {
  std::string name;
  ColumnType type;
  friend bool operator==(const Column&, const Column&) = default;
};

/// Empty cells are std::monostate (rendered as null / blank).
using Cell = std::variant<std::monostate, double, std::int64_t, std::string, bool>;
using Field = std::pair<std::string, Cell>;

/// Serialization-neutral report: metadata, matrix descriptors, a summary and
/// a table. Every bound report converts into one of these.
struct ReportDocument {
  int schema_version = kSchemaVersion;
  std::string kind;
  std::string tool_version = kToolVersion;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> timestamp;
  std::vector<Field> descriptors;
  std::vector<Field> summary;
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;

  const Cell* summary_value(const std::string& key) const;
  std::optional<std::size_t> column_index(const std::string& name) const;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

ReportDocument to_document(const BoundReport& report);
ReportDocument to_document(const SingularBoundReport& report);
ReportDocument to_document(const DegenerateReport& report);
ReportDocument to_document(const CertificationReport& report);

enum class ReportFormat { Table, Csv, Json };

std::string render(const ReportDocument& doc, ReportFormat format);
std::string render_json(const ReportDocument& doc);
std::string render_csv(const ReportDocument& doc);
std::string render_table(const ReportDocument& doc);

/// Inverse of render_json. Throws Parse on schema violations.
ReportDocument parse_json(const std::string& text);

/// ISO 8601 UTC timestamp of the current time.
std::string utc_timestamp();

}  // namespace specbound
