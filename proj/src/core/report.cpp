#include "report.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <sstream>

#include "json.hpp"

namespace specbound {

using json = nlohmann::ordered_json;

const Cell* ReportDocument::summary_value(const std::string& key) const {
  for (const auto& [name, value] : summary)
    if (name == key) return &value;
  return nullptr;
}

std::optional<std::size_t> ReportDocument::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i].name == name) return i;
  return std::nullopt;
}

// ---------------------------------------------------------- conversions

namespace {

Cell real(double v) { return v; }
Cell real(const std::optional<double>& v) { return v ? Cell{*v} : Cell{}; }
Cell integer(std::size_t v) { return static_cast<std::int64_t>(v); }
Cell text(std::string s) { return s; }

const char* block_name(Block b) { return b == Block::One ? "H1" : "H2"; }

}  // namespace

ReportDocument to_document(const BoundReport& report) {
  ReportDocument doc;
  doc.kind = "eigen_bound";
  doc.descriptors = {{"dim", integer(report.m + report.n)},
                     {"m", integer(report.m)},
                     {"n", integer(report.n)}};
  doc.summary = {{"norm_e", real(report.norm_e)},
                 {"eta", real(report.eta)},
                 {"quadratic_applicable", report.quadratic_applicable},
                 {"norm_a", real(report.norm_a)}};
  doc.columns = {{"index", ColumnType::Integer},      {"lambda_tilde", ColumnType::Real},
                 {"provenance", ColumnType::Text},    {"eta_i", ColumnType::Real},
                 {"weyl", ColumnType::Real},          {"quadratic", ColumnType::Real},
                 {"main_i", ColumnType::Real},        {"main_global", ColumnType::Real},
                 {"lambda", ColumnType::Real},        {"true_diff", ColumnType::Real}};
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& r = report.rows[i];
    doc.rows.push_back({integer(i + 1), real(r.lambda_tilde), text(block_name(r.provenance)),
                        real(r.eta_i), real(r.weyl), real(r.quadratic), real(r.main_i),
                        real(r.main_global), real(r.lambda), real(r.true_diff)});
  }
  return doc;
}

ReportDocument to_document(const SingularBoundReport& report) {
  ReportDocument doc;
  doc.kind = "singular_bound";
  doc.descriptors = {{"rows", integer(report.m + report.n)}, {"cols", integer(report.k + report.l)},
                     {"m", integer(report.m)},               {"n", integer(report.n)},
                     {"k", integer(report.k)},               {"l", integer(report.l)}};
  doc.summary = {{"epsilon", real(report.epsilon)},
                 {"eta", real(report.eta)},
                 {"norm_b", real(report.norm_b)},
                 {"zero_tail_max", real(report.tail_max)}};
  doc.columns = {{"index", ColumnType::Integer},   {"sigma_tilde", ColumnType::Real},
                 {"provenance", ColumnType::Text}, {"eta_i", ColumnType::Real},
                 {"main_i", ColumnType::Real},     {"main_global", ColumnType::Real},
                 {"sigma", ColumnType::Real},      {"true_diff", ColumnType::Real}};
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& r = report.rows[i];
    doc.rows.push_back({integer(i + 1), real(r.sigma_tilde), text(block_name(r.provenance)),
                        real(r.eta_i), real(r.main_i), real(r.main_global), real(r.sigma),
                        real(r.true_diff)});
  }
  return doc;
}

ReportDocument to_document(const DegenerateReport& report) {
  ReportDocument doc;
  doc.kind = "degenerate_singular_bound";
  doc.descriptors = {{"rows", integer(report.p)}, {"cols", integer(report.q)}};
  doc.summary = {{"norm_e", real(report.norm_e)}};
  doc.columns = {{"index", ColumnType::Integer}, {"sigma_tilde", ColumnType::Real},
                 {"bound", ColumnType::Real},    {"sigma", ColumnType::Real},
                 {"true_diff", ColumnType::Real}};
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& r = report.rows[i];
    doc.rows.push_back({integer(i + 1), real(r.sigma_tilde), real(r.bound), real(r.sigma),
                        real(r.true_diff)});
  }
  return doc;
}

ReportDocument to_document(const CertificationReport& report) {
  ReportDocument doc;
  doc.kind = "certification";
  doc.descriptors = {{"dim", integer(report.dim)}, {"m", integer(report.m)}};
  doc.summary = {{"whole_r_norm", real(report.whole_r_norm)},
                 {"norm_e", real(report.norm_e)},
                 {"norm_a", real(report.norm_a)}};
  doc.columns = {{"index", ColumnType::Integer},
                 {"ritz_value", ColumnType::Real},
                 {"global_index", ColumnType::Integer},
                 {"col_residual_norm", ColumnType::Real},
                 {"hat_eta", ColumnType::Real},
                 {"per_column_bound", ColumnType::Real},
                 {"eta", ColumnType::Real},
                 {"whole_bound", ColumnType::Real},
                 {"column_index", ColumnType::Integer},
                 {"true_error", ColumnType::Real},
                 {"true_error_column", ColumnType::Real}};
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& r = report.rows[i];
    doc.rows.push_back({integer(i + 1), real(r.ritz_value), integer(r.global_index),
                        real(r.col_residual_norm), real(r.hat_eta), real(r.per_column_bound),
                        real(r.eta), real(r.whole_bound), integer(r.column_index),
                        real(r.true_error), real(r.true_error_column)});
  }
  return doc;
}

// -------------------------------------------------------------- rendering

namespace {

std::string shortest(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string readable(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

template <typename RealFormat>
std::string cell_text(const Cell& c, RealFormat fmt, const char* empty) {
  return std::visit(
      [&](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) return empty;
        else if constexpr (std::is_same_v<T, double>) return fmt(v);
        else if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(v);
        else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
        else return v;
      },
      c);
}

json encode_real(double v) {
  if (std::isfinite(v)) return v;
  return shortest(v);
}

json encode_scalar(const Cell& c) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) return nullptr;
        else if constexpr (std::is_same_v<T, double>) return encode_real(v);
        else return v;
      },
      c);
}

const char* type_name(ColumnType t) {
  switch (t) {
    case ColumnType::Real: return "real";
    case ColumnType::Integer: return "integer";
    case ColumnType::Text: return "text";
    case ColumnType::Flag: return "flag";
  }
  return "text";
}

}  // namespace

std::string render_json(const ReportDocument& doc) {
  json j;
  j["schema_version"] = doc.schema_version;
  j["kind"] = doc.kind;
  j["tool_version"] = doc.tool_version;
  j["seed"] = doc.seed ? json(*doc.seed) : json(nullptr);
  j["timestamp"] = doc.timestamp ? json(*doc.timestamp) : json(nullptr);
  json descriptors = json::object();
  for (const auto& [k, v] : doc.descriptors) descriptors[k] = encode_scalar(v);
  j["descriptors"] = descriptors;
  json summary = json::object();
  for (const auto& [k, v] : doc.summary) summary[k] = encode_scalar(v);
  j["summary"] = summary;
  json columns = json::array();
  for (const auto& c : doc.columns) columns.push_back({{"name", c.name}, {"type", type_name(c.type)}});
  j["columns"] = columns;
  json rows = json::array();
  for (const auto& row : doc.rows) {
    json r = json::object();
    for (std::size_t i = 0; i < doc.columns.size(); ++i) r[doc.columns[i].name] = encode_scalar(row[i]);
    rows.push_back(r);
  }
  j["rows"] = rows;
  return j.dump(2) + "\n";
}

std::string render_csv(const ReportDocument& doc) {
  std::ostringstream out;
  for (std::size_t i = 0; i < doc.columns.size(); ++i) out << (i ? "," : "") << doc.columns[i].name;
  out << '\n';
  for (const auto& row : doc.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i], shortest, "");
    out << '\n';
  }
  return out.str();
}

std::string render_table(const ReportDocument& doc) {
  std::ostringstream out;
  out << "# " << doc.kind << " (specbound " << doc.tool_version << ")\n";
  if (doc.seed) out << "# seed: " << *doc.seed << '\n';
  if (doc.timestamp) out << "# timestamp: " << *doc.timestamp << '\n';
  for (const auto& [k, v] : doc.descriptors) out << "# " << k << ": " << cell_text(v, readable, "-") << '\n';
  for (const auto& [k, v] : doc.summary) out << "# " << k << ": " << cell_text(v, readable, "-") << '\n';
  if (doc.columns.empty()) return out.str();

  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width(doc.columns.size());
  for (std::size_t i = 0; i < doc.columns.size(); ++i) width[i] = doc.columns[i].name.size();
  for (const auto& row : doc.rows) {
    auto& line = cells.emplace_back();
    for (std::size_t i = 0; i < row.size(); ++i) {
      line.push_back(cell_text(row[i], readable, "-"));
      width[i] = std::max(width[i], line.back().size());
    }
  }
  const auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) out << "  ";
      out << std::string(width[i] - line[i].size(), ' ') << line[i];
    }
    out << '\n';
  };
  std::vector<std::string> header;
  for (const auto& c : doc.columns) header.push_back(c.name);
  emit(header);
  for (const auto& line : cells) emit(line);
  return out.str();
}

std::string render(const ReportDocument& doc, ReportFormat format) {
  switch (format) {
    case ReportFormat::Table: return render_table(doc);
    case ReportFormat::Csv: return render_csv(doc);
    case ReportFormat::Json: return render_json(doc);
  }
  return render_table(doc);
}

// ---------------------------------------------------------------- parsing

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorCode::Parse, "report JSON: " + what);
}

std::optional<double> special_real(const std::string& s) {
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  return std::nullopt;
}

Cell decode_scalar(const json& v) {
  if (v.is_null()) return {};
  if (v.is_boolean()) return v.get<bool>();
  if (v.is_number_integer()) return v.get<std::int64_t>();
  if (v.is_number_float()) return v.get<double>();
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (auto r = special_real(s)) return *r;
    return s;
  }
  schema_error("unsupported scalar value");
}

Cell decode_typed(const json& v, ColumnType type) {
  if (v.is_null()) return {};
  switch (type) {
    case ColumnType::Real:
      if (v.is_number()) return v.get<double>();
      if (v.is_string())
        if (auto r = special_real(v.get<std::string>())) return *r;
      break;
    case ColumnType::Integer:
      if (v.is_number_integer()) return v.get<std::int64_t>();
      break;
    case ColumnType::Text:
      if (v.is_string()) return v.get<std::string>();
      break;
    case ColumnType::Flag:
      if (v.is_boolean()) return v.get<bool>();
      break;
  }
  schema_error("cell does not match its column type");
}

ColumnType parse_type(const std::string& s) {
  if (s == "real") return ColumnType::Real;
  if (s == "integer") return ColumnType::Integer;
  if (s == "text") return ColumnType::Text;
  if (s == "flag") return ColumnType::Flag;
  schema_error("unknown column type '" + s + "'");
}

}  // namespace

ReportDocument parse_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    schema_error(e.what());
  }
  try {
    ReportDocument doc;
    doc.schema_version = j.at("schema_version").get<int>();
    if (doc.schema_version != kSchemaVersion) schema_error("unsupported schema_version");
    doc.kind = j.at("kind").get<std::string>();
    doc.tool_version = j.at("tool_version").get<std::string>();
    if (!j.at("seed").is_null()) doc.seed = j.at("seed").get<std::uint64_t>();
    if (!j.at("timestamp").is_null()) doc.timestamp = j.at("timestamp").get<std::string>();
    for (const auto& [k, v] : j.at("descriptors").items()) doc.descriptors.emplace_back(k, decode_scalar(v));
    for (const auto& [k, v] : j.at("summary").items()) doc.summary.emplace_back(k, decode_scalar(v));
    for (const auto& c : j.at("columns")) {
      doc.columns.push_back({c.at("name").get<std::string>(), parse_type(c.at("type").get<std::string>())});
    }
    for (const auto& r : j.at("rows")) {
      std::vector<Cell> row;
      for (const auto& c : doc.columns) row.push_back(decode_typed(r.at(c.name), c.type));
      doc.rows.push_back(std::move(row));
    }
    return doc;
  } catch (const json::exception& e) {
    schema_error(e.what());
  }
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace specbound
