#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wreath/algebra.hpp"
#include "wreath/group_context.hpp"
#include "wreath/rational.hpp"
#include "wreath/springer.hpp"

namespace wreath {

enum class Format { kMarkdown, kCsv, kJson, kDot };

/// "md", "csv", "json" or "dot"; throws std::invalid_argument otherwise.
Format parse_format(std::string_view text);

/// Exact values render as "p/q" in JSON and in lowest terms elsewhere.
using Cell = std::variant<std::string, std::int64_t, Rational>;

struct Table {
  std::string kind;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Markdown, CSV, or JSON ({"kind":..., "columns":[...], "rows":[[...]]}).
/// Throws std::invalid_argument for Format::kDot.
std::string render(const Table& table, Format format);

/// One node per element (labelled by its canonical word), one edge per cover.
std::string hasse_dot(const GroupContext& ctx);
/// {"m":..,"d":..,"nodes":[words],"covers":[[lower,upper],...]}.
std::string hasse_json(const GroupContext& ctx);

/// {"m":..,"d":..,"orbits":[{"label":[["2"],["1,1"]],"gamma":{..},
/// "componentGroupOrder":..,"orbitDim":..,"fiberDim":..}]}.
std::string orbit_report_json(std::size_t m, std::size_t d);
std::string relation_report_json(const RelationReport& report);
std::string springer_report_json(const SpringerReport& report);

Table irreps_table(std::size_t m, std::size_t d);
Table springer_table(std::size_t m, std::size_t d);
Table typeB_view(std::size_t d);
Table typeD_view(std::size_t d);
Table orbits_table(std::size_t m, std::size_t d);
/// Rows: irreducible labels; columns: class representative words.
Table characters_table(std::size_t m, std::size_t d);

}  // namespace wreath
