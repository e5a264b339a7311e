// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "crown_oracle.hpp"
#include "walsh/composition.hpp"
#include "walsh/core_series.hpp"
#include "walsh/enumeration.hpp"
#include "walsh/graph_oracle.hpp"
#include "walsh/matching.hpp"

namespace walsh {
namespace {

using Failures = std::vector<std::string>;

void expect(Failures& f, bool ok, const std::string& what) {
  if (!ok) f.push_back(what);
}

void expect_rows(Failures& f, const CountTable& got, std::uint32_t n, std::uint32_t m, long count) {
  for (const auto& r : got.rows)
    if (r.n == n && r.m == m) {
      expect(f, r.count == count, "row " + std::to_string(n) + "," + std::to_string(m) + " is " + r.count.get_str());
      return;
    }
  f.push_back("row " + std::to_string(n) + "," + std::to_string(m) + " missing");
}

void append(Failures& f, const std::vector<std::string>& more) { f.insert(f.end(), more.begin(), more.end()); }

Failures check_toroidal_cores() {
  Failures f;
  const auto start = std::chrono::steady_clock::now();
  const CountTable t = toroidal_core_table(64);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  expect(f, t.rows.size() == 60, "expected 60 values, got " + std::to_string(t.rows.size()));
  append(f, discrepancies(t, reference::toroidal_cores(), 64));
  expect(f, !t.rows.empty() && t.rows.back().n == 64 && t.rows.back().count == 184, "t_C(64) != 184");
  expect(f, seconds < 300, "took " + std::to_string(seconds) + " s");
  return f;
}

Failures check_crown_series() {
  Failures f;
  const CountTable computed = rows_of(specialize_tilde(crown_walsh(64)));
  append(f, discrepancies(computed, reference::crowns(), 64));
  CountTable counted;
  for (const auto& [key, count] : testing::crown_counts(64)) counted.rows.push_back({key.first, key.second, Integer(count)});
  for (const auto& line : discrepancies(computed, counted, 64)) f.push_back("brute force: " + line);
  return f;
}

Failures check_projective_table() {
  Failures f;
  const CountTable t = projective_planar_table(9, planar_networks());
  append(f, discrepancies(t, reference::projective(), 9));
  expect(f, t.rows.size() == reference::projective().rows.size(), "row count " + std::to_string(t.rows.size()));
  expect_rows(f, t, 8, 15, 34);
  expect_rows(f, t, 9, 18, 234);
  return f;
}

Failures check_toroidal_table() {
  Failures f;
  const CountTable t = toroidal_table(12, planar_networks());
  append(f, discrepancies(t, reference::toroidal(), 12));
  expect(f, t.rows.size() == reference::toroidal().rows.size(), "row count " + std::to_string(t.rows.size()));
  expect_rows(f, t, 11, 23, 419);
  expect_rows(f, t, 12, 26, 4061);
  return f;
}

Failures check_oracle_equivalence() {
  Failures f;
  for (int n = 3; n <= 8; ++n)
    expect(f, walsh_cycle(static_cast<std::uint32_t>(n)) == walsh_bruteforce({cycle_graph(n)}), "cycle " + std::to_string(n));
  for (int n = 2; n <= 5; ++n)
    expect(f, walsh_complete(static_cast<std::uint32_t>(n)) == walsh_bruteforce({complete_graph(n)}),
           "complete " + std::to_string(n));
  expect(f, walsh_M() == walsh_bruteforce({m_graph()}), "M");
  expect(f, walsh_Mstar() == walsh_bruteforce({m_star_graph()}), "M*");
  expect(f, automorphisms(m_graph()).size() == 144, "|Aut M| != 144");
  expect(f, walsh_K5e(PoleSign::Plus) == network_walsh_bruteforce(k5_minus_edge_network(), PoleSign::Plus), "K5\\e +");
  expect(f, walsh_K5e(PoleSign::Minus) == network_walsh_bruteforce(k5_minus_edge_network(), PoleSign::Minus), "K5\\e -");
  return f;
}

IndexSeries monomial(const char* text) { return IndexSeries(parse_monomial(text)); }

// Tilde series of matched n-cycles written out from the matching polynomials.
IndexSeries matched_cycle_tilde_formula(std::uint32_t n) {
  auto V = [](std::uint32_t k) { return reindex(shifted_path_matching(k), 2); };  // z^2 U_k(y^2, z^2)
  IndexSeries out;
  for (std::uint32_t d = 1; d <= n; ++d)
    if (n % d == 0) out += make_rational(euler_phi(n / d), 2 * n) * reindex(cycle_matching(d), n / d);
  if (n % 2 == 1) {
    const std::uint32_t h = (n - 1) / 2;
    out += make_rational(1, 2) * (monomial("z") * V(h) + monomial("y*z^2") * V(h - 1));
  } else {
    const std::uint32_t h = n / 2;
    out += make_rational(1, 4) * (monomial("z^2") * V(h - 1) + reindex(path_matching(h), 2) * monomial("z^2") +
                                  Rational(2) * monomial("y*z") * V(h - 1) + monomial("y^2*z^2") * V(h - 2));
  }
  return IndexSeries(Monomial(x(), n)) * out;
}

Failures check_matched_cycles() {
  Failures f;
  for (std::uint32_t n = 3; n <= 7; ++n) {
    const IndexSeries formula = walsh_matched_cycle(n);
    const IndexSeries brute = matched_walsh_bruteforce(cycle_graph(static_cast<int>(n)));
    expect(f, formula == brute, "series vs brute force at n=" + std::to_string(n));
    expect(f, specialize_tilde_matched(formula) == matched_cycle_tilde_formula(n), "tilde vs closed form at n=" + std::to_string(n));
    expect(f, specialize_tilde_matched(brute) == matched_cycle_tilde_formula(n), "brute-force tilde at n=" + std::to_string(n));
  }
  expect(f, specialize_tilde_matched(walsh_matched_cycle(3)) == monomial("x^3*z^3") + monomial("x^3*y*z^2"),
         "matched triangles != x^3(z^3 + y z^2)");
  return f;
}

Failures check_generating_functions() {
  Failures f;
  expect(f, verify_matching_gf(20), "matching generating functions to x^20");
  const long expected[] = {1, 2, 4, 11, 34, 156};
  for (std::uint32_t n = 1; n <= 6; ++n) {
    const IndexSeries all = substitute(walsh_complete(n), [](VarRef v) -> std::optional<IndexSeries> {
      if (v.family == Family::B || v.family == Family::C) return IndexSeries::one() + IndexSeries(v);
      return std::nullopt;
    });
    const Rational from_series = specialize_tilde(all).y_marginal()[n];
    Integer burnside = 0;
    for (const auto& [m, c] : burnside_unlabelled_count(static_cast<int>(n), [](const SmallGraph&) { return true; }))
      burnside += c;
    expect(f, from_series == Rational(burnside) && burnside == expected[n - 1],
           "n=" + std::to_string(n) + ": series " + to_string(from_series) + ", Burnside " + burnside.get_str());
  }
  return f;
}

Failures check_consistency() {
  Failures f;
  const IndexSeries plus = walsh_K5e(PoleSign::Plus);
  const IndexSeries minus = walsh_K5e(PoleSign::Minus);
  const NetworkSeriesPair tilde{specialize_tilde(plus), specialize_tilde(minus)};
  expect(f, tilde_of_composition(walsh_K5(), tilde, kExact) == specialize_tilde(compose_walsh(walsh_K5(), plus, minus, kExact)),
         "tilde composition with K5\\e");

  const IndexSeries one = IndexSeries::one();
  for (const IndexSeries& wb : {walsh_K5(), walsh_complete(2) + walsh_K5()}) {
    const BiconnectedNetworks nets = networks_from_biconnected(wb);
    const IndexSeries b = specialize_labelled(wb).to_series();
    const IndexSeries b01 = specialize_labelled(nets.plus01).to_series();
    expect(f, monomial("x^2") * b01 == Rational(2) * partial_derivative(b, y()), "x^2 B01 != 2 dB/dy");
    expect(f, specialize_labelled(nets.plus).to_series() == (one + monomial("y")) * b01 - one, "N_B != (1+y) B01 - 1");
  }
  return f;
}

}  // namespace
}  // namespace walsh

int main() {
  using walsh::Failures;
  const std::vector<std::pair<std::string, std::function<Failures()>>> criteria = {
      {"1 toroidal cores t_C(n), n = 5..64", walsh::check_toroidal_cores},
      {"2 crown series coefficients up to x^64", walsh::check_crown_series},
      {"3 projective-planar table, n <= 9", walsh::check_projective_table},
      {"4 non-projective-planar toroidal table, n <= 12", walsh::check_toroidal_table},
      {"5 closed forms equal brute-force series", walsh::check_oracle_equivalence},
      {"6 matched cycles n = 3..7", walsh::check_matched_cycles},
      {"7 matching and graph-count generating functions", walsh::check_generating_functions},
      {"8 composition and derivative consistency", walsh::check_consistency},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Failures failures;
    const auto start = std::chrono::steady_clock::now();
    try {
      failures = check();
    } catch (const std::exception& e) {
      failures.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (failures.empty() ? "PASS" : "FAIL") << "  criterion " << name << " (" << seconds << " s)\n";
    for (const auto& line : failures) std::cout << "      " << line << "\n";
    if (!failures.empty()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
