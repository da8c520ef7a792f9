#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "nlqfi/cli.hpp"

namespace nlqfi::cli {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

struct CsvCell {
  std::string operator()(std::monostate) const { return ""; }
  std::string operator()(double v) const { return format_double(v); }
  std::string operator()(std::int64_t v) const { return std::to_string(v); }
  std::string operator()(bool v) const { return v ? "true" : "false"; }
  std::string operator()(const std::string& v) const { return csv_escape(v); }
};

// ordered_json keeps keys in column order.
using Json = nlohmann::ordered_json;

struct JsonCell {
  Json operator()(std::monostate) const { return nullptr; }
  Json operator()(double v) const {
    if (!std::isfinite(v)) return nullptr;
    return v;
  }
  Json operator()(std::int64_t v) const { return v; }
  Json operator()(bool v) const { return v; }
  Json operator()(const std::string& v) const { return v; }
};

}  // namespace

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(table.columns[i]);
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += std::visit(CsvCell{}, row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& table) {
  Json arr = Json::array();
  for (const auto& row : table.rows) {
    Json obj = Json::object();
    for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) {
      obj[table.columns[i]] = std::visit(JsonCell{}, row[i]);
    }
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

std::string render(const Table& table, OutputFormat format) {
  return format == OutputFormat::Csv ? to_csv(table) : to_json(table);
}

}  // namespace nlqfi::cli
