#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace qlidar::cli {

using Cell = std::variant<double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class Format { Csv, Json };

// %.17g, with inf/-inf/nan spelled out
std::string format_number(double v);

void write_csv(std::ostream& os, const Table& t);
// {"columns": [...], "rows": [[...], ...]}; non-finite numbers become strings
void write_json(std::ostream& os, const Table& t);
void write(std::ostream& os, const Table& t, Format f);

}  // namespace qlidar::cli
