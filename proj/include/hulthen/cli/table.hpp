#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace hulthen::cli {

/// One output cell. Doubles that are NaN render as an empty CSV field / JSON null.
using Cell = std::variant<std::int64_t, double, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

/// 17 significant digits in scientific notation.
std::string format_double(double value);

/// Header row plus comma-separated rows.
void write_csv(std::ostream& out, const Table& table);
/// Aligned human-readable columns.
void write_pretty(std::ostream& out, const Table& table);
/// {"meta": meta, "rows": [{column: value, ...}, ...]}
void write_json(std::ostream& out, const Table& table, const nlohmann::ordered_json& meta);

}  // namespace hulthen::cli
