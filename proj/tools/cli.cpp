#include "cli.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "wreath/algebra.hpp"
#include "wreath/bruhat.hpp"
#include "wreath/orbit.hpp"
#include "wreath/report.hpp"
#include "wreath/springer.hpp"

namespace wreath::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::size_t m = 0;
  std::size_t d = 0;
  std::string format;
  std::string scope = "all";
  std::string kind;
  std::string x;
  std::string y;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_positive(const Options& o, bool need_m) {
  if ((need_m && o.m == 0) || o.d == 0) throw UsageError("--m and --d must be positive integers");
}

int cmd_hasse(const Options& o, std::ostream& out) {
  require_positive(o, true);
  const GroupContext ctx(o.m, o.d);
  const Format f = parse_format(o.format.empty() ? "dot" : o.format);
  if (f == Format::kDot)
    out << hasse_dot(ctx);
  else if (f == Format::kJson)
    out << hasse_json(ctx);
  else
    throw UsageError("hasse supports --format dot or json");
  return kExitOk;
}

int cmd_order(const Options& o, std::ostream& out) {
  require_positive(o, true);
  const WreathElement x = parse_word(o.x, o.m, o.d);
  const WreathElement y = parse_word(o.y, o.m, o.d);
  const bool same_top = x.top == y.top;
  out << "x = " << format_word(x) << "\n";
  out << "y = " << format_word(y) << "\n";
  out << "top: " << x.top.to_string() << " vs " << y.top.to_string() << " -> " << (same_top ? "equal" : "different")
      << "\n";
  bool all = same_top;
  for (std::size_t j = 0; j < o.d; ++j) {
    const bool leq = bruhat_leq(x.factors[j], y.factors[j]);
    all = all && leq;
    out << "factor " << j + 1 << ": " << x.factors[j].to_string() << (leq ? " <= " : " !<= ")
        << y.factors[j].to_string() << "\n";
  }
  if (all != bruhat_leq(x, y)) throw std::logic_error("order trace disagrees with bruhat_leq");
  out << "x <= y: " << (all ? "true" : "false") << "\n";
  return kExitOk;
}

json dimensions_report(std::size_t m, std::size_t d) {
  json j;
  bool property = true;
  const auto profiles = enumerate_profiles(m, d);
  for (const auto& p : profiles) property = property && check_dimension_property(p);
  j["profiles"] = profiles.size();
  j["dimensionProperty"] = property ? "pass" : "fail";

  const GroupContext ctx(m, d);
  const CellStatistics stats = cell_statistics(ctx);
  std::vector<std::uint64_t> poly{1};
  std::vector<std::uint64_t> factor;
  for (const Permutation& w : all_permutations(m)) {
    const std::size_t l = length(w);
    if (factor.size() <= l) factor.resize(l + 1, 0);
    ++factor[l];
  }
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<std::uint64_t> next(poly.size() + factor.size() - 1, 0);
    for (std::size_t a = 0; a < poly.size(); ++a)
      for (std::size_t b = 0; b < factor.size(); ++b) next[a + b] += poly[a] * factor[b];
    poly = std::move(next);
  }
  bool cells = stats.cell_count == ctx.size();
  json polynomial = json::object();
  for (std::size_t k = 0; k < poly.size(); ++k) {
    const std::uint64_t expected = poly[k] * factorial(d);
    auto it = stats.by_dimension.find(k);
    const std::uint64_t got = it == stats.by_dimension.end() ? 0 : it->second;
    cells = cells && got == expected;
    polynomial[std::to_string(k)] = got;
  }
  cells = cells && stats.by_dimension.size() <= poly.size();
  j["cellCount"] = stats.cell_count;
  j["cellPolynomial"] = polynomial;
  j["cellStatistics"] = cells ? "pass" : "fail";

  const std::size_t ic = enumerate_IC(m, d).size();
  const std::size_t is = enumerate_IS(m, d).size();
  const std::size_t classes = ctx.conjugacy_classes().size();
  j["indexSets"] = {{"ic", ic}, {"is", is}, {"classes", classes}};
  j["indexSetStatus"] = (ic == is && is == classes) ? "pass" : "fail";
  j["status"] = (property && cells && ic == is && is == classes) ? "pass" : "fail";
  return j;
}

int cmd_verify(const Options& o, std::ostream& out) {
  require_positive(o, true);
  static const std::vector<std::string> scopes{"algebra", "springer", "dimensions", "all"};
  if (std::find(scopes.begin(), scopes.end(), o.scope) == scopes.end())
    throw UsageError("unknown scope '" + o.scope + "'");
  require_within_bound(WreathShape(o.m, o.d), enumeration_bound());
  const bool all = o.scope == "all";
  json j;
  j["m"] = o.m;
  j["d"] = o.d;
  j["scope"] = o.scope;
  bool ok = true;
  if (all || o.scope == "algebra") {
    const RelationReport r = verify_relations(o.m, o.d);
    ok = ok && r.passed();
    j["algebra"] = json::parse(relation_report_json(r));
    const BasisCensus census = basis_census(ConvolutionAlgebra(o.m, o.d));
    j["census"] = {{"basisSize", census.basis_size}, {"spanRank", census.span_rank}};
  }
  if (all || o.scope == "springer") {
    const SpringerReport r = verify_springer(o.m, o.d);
    ok = ok && r.passed();
    j["springer"] = json::parse(springer_report_json(r));
  }
  if (all || o.scope == "dimensions") {
    json dims = dimensions_report(o.m, o.d);
    ok = ok && dims["status"] == "pass";
    j["dimensions"] = std::move(dims);
  }
  j["status"] = ok ? "pass" : "fail";
  out << j.dump(2) << "\n";
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_tables(const Options& o, std::ostream& out) {
  const Format f = parse_format(o.format.empty() ? "md" : o.format);
  if (f == Format::kDot) throw UsageError("tables support --format md, csv or json");
  Table t;
  if (o.kind == "typeB" || o.kind == "typeD") {
    if (o.d == 0) throw UsageError("--d must be a positive integer");
    require_within_bound(WreathShape(2, o.d), enumeration_bound());
    t = o.kind == "typeB" ? typeB_view(o.d) : typeD_view(o.d);
  } else {
    require_positive(o, true);
    require_within_bound(WreathShape(o.m, o.d), enumeration_bound());
    if (o.kind == "irreps")
      t = irreps_table(o.m, o.d);
    else if (o.kind == "springer")
      t = springer_table(o.m, o.d);
    else if (o.kind == "orbits") {
      if (f == Format::kJson) {
        out << orbit_report_json(o.m, o.d);
        return kExitOk;
      }
      t = orbits_table(o.m, o.d);
    } else if (o.kind == "chars")
      t = characters_table(o.m, o.d);
    else
      throw UsageError("unknown table kind '" + o.kind + "'");
  }
  out << render(t, f);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wreath product Bruhat orders, convolution algebras and Springer correspondence", "wreath"};
  app.require_subcommand(1);
  Options o;

  auto* hasse = app.add_subcommand("hasse", "Hasse diagram of the Bruhat order");
  hasse->add_option("--m", o.m, "degree of each factor")->required();
  hasse->add_option("--d", o.d, "number of factors")->required();
  hasse->add_option("--format", o.format, "dot or json");

  auto* order = app.add_subcommand("order", "Compare two elements in the Bruhat order");
  order->add_option("--m", o.m)->required();
  order->add_option("--d", o.d)->required();
  order->add_option("--x", o.x, "word, e.g. \"s1^1 t1\"")->required();
  order->add_option("--y", o.y, "word")->required();

  auto* verify = app.add_subcommand("verify", "Run verification suites; exit 1 on failure");
  verify->add_option("--m", o.m)->required();
  verify->add_option("--d", o.d)->required();
  verify->add_option("--scope", o.scope, "algebra, springer, dimensions or all");

  auto* tables = app.add_subcommand("tables", "Emit tables");
  tables->add_option("--kind", o.kind, "irreps, springer, typeB, typeD, orbits or chars")->required();
  tables->add_option("--m", o.m);
  tables->add_option("--d", o.d);
  tables->add_option("--format", o.format, "md, csv or json");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (hasse->parsed()) return cmd_hasse(o, out);
    if (order->parsed()) return cmd_order(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    return cmd_tables(o, out);
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
}

}  // namespace wreath::cli
