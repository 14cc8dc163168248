#include "wreath/report.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "wreath/orbit.hpp"
#include "wreath/representation.hpp"

namespace wreath {

using json = nlohmann::ordered_json;

Format parse_format(std::string_view text) {
  if (text == "md" || text == "markdown") return Format::kMarkdown;
  if (text == "csv") return Format::kCsv;
  if (text == "json") return Format::kJson;
  if (text == "dot") return Format::kDot;
  throw std::invalid_argument("unknown format '" + std::string(text) + "'");
}

namespace {

std::string plain(const Cell& cell) {
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
  return std::get<Rational>(cell).to_string();
}

json to_json(const Cell& cell) {
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return *i;
  return std::get<Rational>(cell).to_fraction_string();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_field(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string paren(const Partition& p) { return "(" + (p.empty() ? std::string() : p.to_string()) + ")"; }

std::int64_t as_int(std::uint64_t v) { return static_cast<std::int64_t>(v); }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string render(const Table& table, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::kMarkdown: {
      out << '|';
      for (const auto& c : table.columns) out << ' ' << md_field(c) << " |";
      out << "\n|";
      for (std::size_t i = 0; i < table.columns.size(); ++i) out << " --- |";
      out << '\n';
      for (const auto& row : table.rows) {
        out << '|';
        for (const auto& cell : row) out << ' ' << md_field(plain(cell)) << " |";
        out << '\n';
      }
      return out.str();
    }
    case Format::kCsv: {
      for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << csv_field(table.columns[i]);
      out << '\n';
      for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(plain(row[i]));
        out << '\n';
      }
      return out.str();
    }
    case Format::kJson: {
      json j;
      j["kind"] = table.kind;
      j["columns"] = table.columns;
      json rows = json::array();
      for (const auto& row : table.rows) {
        json r = json::array();
        for (const auto& cell : row) r.push_back(to_json(cell));
        rows.push_back(std::move(r));
      }
      j["rows"] = std::move(rows);
      return dump(j);
    }
    case Format::kDot:
      break;
  }
  throw std::invalid_argument("tables cannot be rendered as dot");
}

std::string hasse_dot(const GroupContext& ctx) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < ctx.size(); ++i)
    out << "  n" << i << " [label=\"" << format_word(ctx.element(i)) << "\"];\n";
  for (const auto& [lo, hi] : hasse_covers(ctx)) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

std::string hasse_json(const GroupContext& ctx) {
  json j;
  j["m"] = ctx.m();
  j["d"] = ctx.d();
  json nodes = json::array();
  for (const auto& x : ctx.elements()) nodes.push_back(format_word(x));
  j["nodes"] = std::move(nodes);
  json covers = json::array();
  for (const auto& [lo, hi] : hasse_covers(ctx)) covers.push_back({lo, hi});
  j["covers"] = std::move(covers);
  return dump(j);
}

std::string orbit_report_json(std::size_t m, std::size_t d) {
  json j;
  j["m"] = m;
  j["d"] = d;
  json orbits = json::array();
  for (const OrbitLabel& orbit : enumerate_orbits(m, d)) {
    const JordanProfile p = profile_of(orbit);
    json label = json::array();
    for (const Partition& t : orbit.types) label.push_back(json::array({t.to_string()}));
    json gamma = json::object();
    const GammaMap g = gamma_of(p);
    for (const auto& [nu, count] : g.entries) gamma[nu.to_string()] = count;
    orbits.push_back({{"label", label},
                      {"gamma", gamma},
                      {"componentGroupOrder", component_group(p).young_order()},
                      {"orbitDim", orbit_dim(p)},
                      {"fiberDim", fiber_dim(p)}});
  }
  j["orbits"] = std::move(orbits);
  return dump(j);
}

std::string relation_report_json(const RelationReport& report) {
  json j;
  j["m"] = report.m;
  j["d"] = report.d;
  json checks = json::array();
  for (const auto& c : report.checks) {
    json entry{{"name", c.name}, {"status", to_string(c.status)}, {"instances", c.instances}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  j["checks"] = std::move(checks);
  return dump(j);
}

std::string springer_report_json(const SpringerReport& report) {
  json j;
  j["m"] = report.m;
  j["d"] = report.d;
  j["icCount"] = report.ic_count;
  j["isCount"] = report.is_count;
  j["classCount"] = report.class_count;
  j["bijective"] = report.bijective;
  j["dimensionsAddUp"] = report.dimensions_add_up;
  json labels = json::array();
  for (const auto& c : report.checks)
    labels.push_back({{"label", c.label.to_string()},
                      {"status", c.characters_match ? "pass" : "fail"},
                      {"isotypicDim", c.isotypic_dimension.to_fraction_string()},
                      {"cliffordDim", c.clifford_dimension.to_fraction_string()}});
  j["labels"] = std::move(labels);
  j["status"] = report.passed() ? "pass" : "fail";
  return dump(j);
}

Table irreps_table(std::size_t m, std::size_t d) {
  Table t{"irreps", {"label", "gamma", "dimension"}, {}};
  for (const CliffordLabel& label : enumerate_IC(m, d))
    t.rows.push_back({label.to_string(), label.gamma().to_string(),
                      static_cast<std::int64_t>(clifford_irrep(label).dimension())});
  return t;
}

Table springer_table(std::size_t m, std::size_t d) {
  Table t{"springer", {"clifford_label", "orbit", "psi", "dimension"}, {}};
  for (const CliffordLabel& label : enumerate_IC(m, d)) {
    const SpringerLabel s = psi(label);
    t.rows.push_back({label.to_string(), s.orbit.to_string(), s.psi.to_string(),
                      static_cast<std::int64_t>(clifford_irrep(label).dimension())});
  }
  return t;
}

Table typeB_view(std::size_t d) {
  Table t{"typeB", {"bipartition", "clifford_label", "orbit", "psi"}, {}};
  for (const TypeBRow& row : typeB_table(d))
    t.rows.push_back({"(" + paren(row.first) + "," + paren(row.second) + ")", row.label.to_string(),
                      row.springer.orbit.to_string(), row.springer.psi.to_string()});
  return t;
}

Table typeD_view(std::size_t d) {
  Table t{"typeD", {"index", "jordan_type", "psi"}, {}};
  for (const TypeDRow& row : typeD_table(d))
    t.rows.push_back({row.index.to_string(), paren(row.x_first) + paren(row.x_second), paren(row.psi)});
  return t;
}

Table orbits_table(std::size_t m, std::size_t d) {
  Table t{"orbits", {"orbit", "gamma", "component_group_order", "orbit_dim", "fiber_dim"}, {}};
  for (const OrbitLabel& orbit : enumerate_orbits(m, d)) {
    const JordanProfile p = profile_of(orbit);
    t.rows.push_back({orbit.to_string(), gamma_of(p).to_string(), as_int(component_group(p).young_order()),
                      static_cast<std::int64_t>(orbit_dim(p)), static_cast<std::int64_t>(fiber_dim(p))});
  }
  return t;
}

Table characters_table(std::size_t m, std::size_t d) {
  const CharacterTable table = character_table(m, d);
  Table t{"chars", {"label"}, {}};
  for (std::size_t rep : table.ctx->class_representatives()) t.columns.push_back(format_word(table.ctx->element(rep)));
  for (std::size_t i = 0; i < table.labels.size(); ++i) {
    std::vector<Cell> row{table.labels[i].to_string()};
    for (const Rational& v : table.rows[i].values) row.emplace_back(v);
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace wreath
