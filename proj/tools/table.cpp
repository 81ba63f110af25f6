#include "table.hpp"

#include <cmath>
#include <cstdio>
#include <json.hpp>

namespace qlidar::cli {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i)
    os << (i ? "," : "") << csv_field(t.columns[i]);
  os << '\n';
  for (auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      if (auto d = std::get_if<double>(&row[i]))
        os << format_number(*d);
      else
        os << csv_field(std::get<std::string>(row[i]));
    }
    os << '\n';
  }
}

void write_json(std::ostream& os, const Table& t) {
  nlohmann::ordered_json j;
  j["columns"] = t.columns;
  auto rows = nlohmann::json::array();
  for (auto& row : t.rows) {
    auto r = nlohmann::json::array();
    for (auto& c : row) {
      if (auto d = std::get_if<double>(&c))
        r.push_back(std::isfinite(*d) ? nlohmann::json(*d) : nlohmann::json(format_number(*d)));
      else
        r.push_back(std::get<std::string>(c));
    }
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  os << j.dump(1) << '\n';
}

void write(std::ostream& os, const Table& t, Format f) {
  f == Format::Csv ? write_csv(os, t) : write_json(os, t);
}

}  // namespace qlidar::cli
