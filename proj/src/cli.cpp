#include "walsh/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <ostream>

#include "walsh/composition.hpp"
#include "walsh/core_series.hpp"
#include "walsh/enumeration.hpp"
#include "walsh/graph_oracle.hpp"
#include "walsh/matching.hpp"

namespace walsh {

namespace {

enum class OutputFormat { Plain, Csv, Json };

struct Check {
  std::string name;
  std::function<std::vector<std::string>()> run;  // returns failure details
};

void emit(const CountTable& table, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Json) {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : table.rows) {
      nlohmann::ordered_json row;
      row["n"] = r.n;
      if (r.m) row["m"] = *r.m;
      if (r.count.fits_ulong_p())
        row["count"] = r.count.get_ui();
      else
        row["count"] = r.count.get_str();
      rows.push_back(row);
    }
    out << rows.dump(2) << "\n";
    return;
  }
  const char sep = format == OutputFormat::Csv ? ',' : ' ';
  for (const auto& r : table.rows) {
    out << r.n << sep;
    if (r.m) out << *r.m << sep;
    out << r.count.get_str() << "\n";
  }
}

std::vector<std::string> expect_equal(const IndexSeries& got, const IndexSeries& want) {
  if (got == want) return {};
  return {"series differ:\n" + got.to_string() + "expected:\n" + want.to_string()};
}

std::vector<Check> oracle_suite() {
  std::vector<Check> checks;
  for (std::uint32_t n = 3; n <= 8; ++n)
    checks.push_back({"cycle " + std::to_string(n),
                      [n] { return expect_equal(walsh_cycle(n), walsh_bruteforce({cycle_graph(static_cast<int>(n))})); }});
  for (std::uint32_t n = 2; n <= 5; ++n)
    checks.push_back({"complete " + std::to_string(n), [n] {
                        return expect_equal(walsh_complete(n), walsh_bruteforce({complete_graph(static_cast<int>(n))}));
                      }});
  checks.push_back({"M", [] { return expect_equal(walsh_M(), walsh_bruteforce({m_graph()})); }});
  checks.push_back({"M*", [] { return expect_equal(walsh_Mstar(), walsh_bruteforce({m_star_graph()})); }});
  checks.push_back({"K5\\e plus", [] {
                      return expect_equal(walsh_K5e(PoleSign::Plus),
                                          network_walsh_bruteforce(k5_minus_edge_network(), PoleSign::Plus));
                    }});
  checks.push_back({"K5\\e minus", [] {
                      return expect_equal(walsh_K5e(PoleSign::Minus),
                                          network_walsh_bruteforce(k5_minus_edge_network(), PoleSign::Minus));
                    }});
  for (std::uint32_t n = 1; n <= 7; ++n)
    checks.push_back({"matched path " + std::to_string(n), [n] {
                        return expect_equal(walsh_matched_path(n), matched_walsh_bruteforce(path_graph(static_cast<int>(n))));
                      }});
  for (std::uint32_t n = 3; n <= 7; ++n)
    checks.push_back({"matched cycle " + std::to_string(n), [n] {
                        return expect_equal(walsh_matched_cycle(n),
                                            matched_walsh_bruteforce(cycle_graph(static_cast<int>(n))));
                      }});
  return checks;
}

// Unlabelled simple graphs on n vertices: K_n with every edge optional.
BivariateSeries all_graphs_tilde(std::uint32_t n) {
  NetworkSeriesPair optional_edge;
  for (auto* side : {&optional_edge.plus, &optional_edge.minus}) {
    side->add_term(0, 0, 1);
    side->add_term(0, 1, 1);
  }
  return tilde_of_composition(walsh_complete(n), optional_edge, n);
}

std::vector<Check> gf_suite() {
  std::vector<Check> checks;
  checks.push_back({"matching generating functions to x^20", [] {
                      return verify_matching_gf(20) ? std::vector<std::string>{}
                                                    : std::vector<std::string>{"coefficient mismatch"};
                    }});
  for (std::uint32_t n = 1; n <= 6; ++n) {
    checks.push_back({"unlabelled graphs on " + std::to_string(n) + " vertices", [n] {
                        std::vector<std::string> failures;
                        const auto marginal = all_graphs_tilde(n).y_marginal();
                        Integer burnside = 0;
                        for (const auto& [m, count] : burnside_unlabelled_count(static_cast<int>(n),
                                                                                [](const SmallGraph&) { return true; }))
                          burnside += count;
                        const Rational got = marginal.count(n) ? marginal.at(n) : Rational(0);
                        if (got != Rational(burnside))
                          failures.push_back("series gives " + to_string(got) + ", Burnside gives " + burnside.get_str());
                        return failures;
                      }});
  }
  return checks;
}

std::vector<Check> tables_suite() {
  std::vector<Check> checks;
  checks.push_back({"toroidal cores n <= 64",
                    [] { return discrepancies(toroidal_core_table(64), reference::toroidal_cores(), 64); }});
  checks.push_back({"crown series n <= 64",
                    [] { return discrepancies(rows_of(specialize_tilde(crown_walsh(64))), reference::crowns(), 64); }});
  checks.push_back({"projective-planar n <= 9", [] {
                      return discrepancies(projective_planar_table(9, planar_networks()), reference::projective(), 9);
                    }});
  checks.push_back({"toroidal n <= 12", [] {
                      return discrepancies(toroidal_table(12, planar_networks()), reference::toroidal(), 12);
                    }});
  return checks;
}

int run_checks(const std::vector<Check>& checks, std::ostream& out) {
  int failed = 0;
  for (const auto& check : checks) {
    std::vector<std::string> failures;
    try {
      failures = check.run();
    } catch (const std::exception& e) {
      failures.push_back(std::string("exception: ") + e.what());
    }
    out << (failures.empty() ? "PASS " : "FAIL ") << check.name << "\n";
    for (const auto& f : failures) out << "  " << f << "\n";
    if (!failures.empty()) ++failed;
  }
  out << checks.size() - failed << "/" << checks.size() << " checks passed\n";
  return failed == 0 ? 0 : 1;
}

NetworkSeriesPair networks_from(const std::string& path) {
  if (path.empty()) return planar_networks();
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open network file " + path);
  return read_network_series(in);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Walsh index series: toroidal and projective-planar K33-free graph counts", "walsh"};
  app.require_subcommand(1);

  const std::map<std::string, OutputFormat> formats{
      {"plain", OutputFormat::Plain}, {"csv", OutputFormat::Csv}, {"json", OutputFormat::Json}};
  OutputFormat format = OutputFormat::Plain;
  std::uint32_t cores_max = 64;
  std::uint32_t crowns_max = 64;
  std::uint32_t projective_max = 9;
  std::uint32_t toroidal_max = 12;
  std::string networks_file;
  std::string suite;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "plain, csv or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  auto* cores = app.add_subcommand("cores", "unlabelled toroidal cores per vertex count");
  cores->add_option("--max-n", cores_max, "largest vertex count")->check(CLI::Range(1, 64))->capture_default_str();
  add_format(cores);

  auto* crowns = app.add_subcommand("crowns", "toroidal crowns by vertices and edges");
  crowns->add_option("--max-n", crowns_max, "largest vertex count")->check(CLI::Range(1, 64))->capture_default_str();
  add_format(crowns);

  auto* projective = app.add_subcommand("projective", "projective-planar graphs by vertices and edges");
  projective->add_option("--max-n", projective_max, "largest vertex count")->check(CLI::PositiveNumber)->capture_default_str();
  projective->add_option("--networks", networks_file, "network-series file replacing the bundled data");
  add_format(projective);

  auto* toroidal = app.add_subcommand("toroidal", "non-projective-planar toroidal graphs");
  toroidal->add_option("--max-n", toroidal_max, "largest vertex count")->check(CLI::PositiveNumber)->capture_default_str();
  toroidal->add_option("--networks", networks_file, "network-series file replacing the bundled data");
  add_format(toroidal);

  auto* verify = app.add_subcommand("verify", "run a self-check suite");
  verify->add_option("--suite", suite, "oracle, gf or tables")
      ->required()
      ->check(CLI::IsMember({"oracle", "gf", "tables"}));

  std::vector<std::string> argv_rest(args.rbegin(), args.rend());
  if (!argv_rest.empty()) argv_rest.pop_back();  // program name
  try {
    app.parse(argv_rest);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (cores->parsed()) {
      emit(toroidal_core_table(cores_max), format, out);
    } else if (crowns->parsed()) {
      emit(rows_of(specialize_tilde(crown_walsh(crowns_max))), format, out);
    } else if (projective->parsed()) {
      emit(projective_planar_table(projective_max, networks_from(networks_file)), format, out);
    } else if (toroidal->parsed()) {
      emit(toroidal_table(toroidal_max, networks_from(networks_file)), format, out);
    } else if (verify->parsed()) {
      if (suite == "oracle") return run_checks(oracle_suite(), out);
      if (suite == "gf") return run_checks(gf_suite(), out);
      return run_checks(tables_suite(), out);
    }
  } catch (const RangeError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace walsh
