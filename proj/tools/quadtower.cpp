// quadtower: verification harness and calculators.
//
//   quadtower verify [--suite lemmas|example1|prop1|prop2|groups|symbols|all] [--fragment Q{2,-1}] [--json out.json]
//   quadtower symbol a b [--place real|p] [--json]
//   quadtower series --group D4
//   quadtower example1 [--r 1,-2,3] [--bc 0:1,2:2]
//   quadtower witt q

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "quadtower/funcfield.hpp"
#include "quadtower/report.hpp"
#include "quadtower/symbols.hpp"

using namespace quadtower;
using nlohmann::json;

namespace {

int run_verify(const std::string& suite, const std::string& fragment, const std::string& json_path) {
  std::optional<TowerFragment> f;
  if (!fragment.empty()) f = parse_fragment(fragment);
  const Report r = run_suite(suite, f);
  std::cout << r.to_text();
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw std::runtime_error("cannot write " + json_path);
    out << r.to_json().dump(2) << "\n";
  }
  return r.all_pass() ? 0 : 1;
}

int run_symbol(const std::string& a_text, const std::string& b_text, const std::string& place, bool as_json) {
  const Rational a = parse_rational(a_text), b = parse_rational(b_text);
  std::vector<Place> places;
  if (!place.empty())
    places.push_back(parse_place(place));
  else
    places = relevant_places(a, b);
  json out{{"a", to_string(a)}, {"b", to_string(b)}, {"places", json::array()}};
  for (const auto& v : places) {
    const int s = hilbert_symbol(a, b, v);
    out["places"].push_back({{"place", v.to_string()}, {"symbol", s}});
    if (!as_json) std::cout << "(" << to_string(a) << ", " << to_string(b) << ")_" << v.to_string() << " = " << s << "\n";
  }
  if (as_json) std::cout << out.dump() << "\n";
  return 0;
}

int run_series(const std::string& group) {
  const auto g = parse_group(group);
  std::cout << (g.name().empty() ? group : g.name()) << ": " << fingerprint(g).to_string() << "\n";
  std::cout << tower_series(g).to_string();
  const auto checks = structural_checks(g);
  for (const auto& c : checks.checks)
    if (!c.pass) std::cout << "FAIL " << c.name << " n=" << c.n << " " << c.detail << "\n";
  std::cout << (checks.all_pass() ? "structural checks: pass\n" : "structural checks: FAIL\n");
  return checks.all_pass() ? 0 : 1;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t end = std::min(s.find(sep, start), s.size());
    if (end > start) out.push_back(s.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

int run_example1(const std::string& r_list, const std::string& bc_list, bool as_json) {
  Example1Options o = default_example1_options();
  if (!r_list.empty() || !bc_list.empty()) {
    o.linear_r.clear();
    o.quadratic_bc.clear();
    for (const auto& r : split(r_list, ',')) o.linear_r.push_back(parse_rational(r));
    for (const auto& bc : split(bc_list, ',')) {
      const auto parts = split(bc, ':');
      if (parts.size() != 2) throw std::invalid_argument("quadratic sample must be b:c, got '" + bc + "'");
      o.quadratic_bc.push_back({parse_rational(parts[0]), parse_rational(parts[1])});
    }
  }
  const Report r = example1_suite(o);
  std::cout << (as_json ? r.to_json().dump(2) + "\n" : r.to_text());
  return r.all_pass() ? 0 : 1;
}

int run_witt(std::uint64_t q) {
  const auto t = witt_table_finite_field(q);
  std::cout << "W(F" << q << "): size " << t.size << ", exponent " << t.exponent << "\n";
  for (const auto& c : t.classes) std::cout << "  " << c.to_string() << "  order " << c.order << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quadratic towers, square classes and 2-group series"};
  app.require_subcommand(1);

  std::string suite = "all", fragment, json_path;
  auto* verify = app.add_subcommand("verify", "Run verification suites; exit 0 iff every check passes");
  verify->add_option("--suite", suite, "Suite to run")->check(CLI::IsMember(kSuiteNames));
  verify->add_option("--fragment", fragment, "Fragment descriptor, e.g. Q{2,-1}, F3, Q(i)(t)");
  verify->add_option("--json", json_path, "Write the JSON report to this path");

  std::string a, b, place;
  bool symbol_json = false;
  auto* symbol = app.add_subcommand("symbol", "Hilbert symbol (a,b)_v");
  symbol->add_option("a", a)->required();
  symbol->add_option("b", b)->required();
  symbol->add_option("--place", place, "real or a prime; default: every relevant place");
  symbol->add_flag("--json", symbol_json);

  std::string group = "D4";
  auto* series = app.add_subcommand("series", "Series G(n) of a catalog or permutation group");
  series->add_option("--group", group, "Catalog name or cycle-notation generators");

  std::string r_list, bc_list;
  bool e1_json = false;
  auto* example1 = app.add_subcommand("example1", "Square-class disjointness over Q(i)(t)");
  example1->add_option("--r", r_list, "Comma-separated r for t+r");
  example1->add_option("--bc", bc_list, "Comma-separated b:c for t^2+bt+c");
  example1->add_flag("--json", e1_json);

  std::uint64_t q = 3;
  auto* witt = app.add_subcommand("witt", "Witt ring of F_q");
  witt->add_option("q", q)->required();

  CLI11_PARSE(app, argc, argv);
  try {
    if (*verify) return run_verify(suite, fragment, json_path);
    if (*symbol) return run_symbol(a, b, place, symbol_json);
    if (*series) return run_series(group);
    if (*example1) return run_example1(r_list, bc_list, e1_json);
    if (*witt) return run_witt(q);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
