#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "walsh/composition.hpp"
#include "walsh/series.hpp"

namespace walsh {

/// Thrown when a table is requested beyond what the network data supports.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Reads the "network-series v1" format: header line, then "n m plus minus"
/// rows ('#' comments allowed). Checks that the n = 0 part is exactly the
/// bare edge y, that every other x^n part is (1+y) times a polynomial with
/// nonnegative coefficients, and that minus <= plus termwise.
/// Throws std::runtime_error on malformed or inconsistent data.
NetworkSeriesPair read_network_series(std::istream& is);

/// Strongly planar networks with up to 4 internal vertices, loaded from the
/// bundled data file and compared against the factored closed form.
const NetworkSeriesPair& planar_networks();

/// Largest internal-vertex count present in the data.
std::uint32_t network_extent(const NetworkSeriesPair& nets);

/// Walsh series of toroidal crowns up to vertex weight `truncation`: matched
/// cycles with K5\e networks put on the unmatched edges.
IndexSeries crown_walsh(std::uint32_t truncation);

/// Crown tilde series computed directly from the matched-cycle formulas with
/// a_k -> x^k, b_k, c_k -> y^k and beta_k, gamma_k -> x^{3k} y^{9k}.
BivariateSeries crown_tilde(std::uint32_t truncation);

struct CountRow {
  std::uint32_t n = 0;
  std::optional<std::uint32_t> m;  // empty for per-n totals
  Integer count;

  friend bool operator==(const CountRow&, const CountRow&) = default;
};

struct CountTable {
  std::vector<CountRow> rows;  // ascending n, then m

  friend bool operator==(const CountTable&, const CountTable&) = default;
};

// (n, m, count) rows of a tilde series; counts must be nonnegative integers.
CountTable rows_of(const BivariateSeries& series, std::uint32_t min_n = 0);

/// Unlabelled toroidal cores by vertex count, 5 <= n <= max_n <= 64.
CountTable toroidal_core_table(std::uint32_t max_n);

/// Projective-planar K33-free 2-connected non-planar graphs: K5 with planar
/// networks substituted. max_n may not exceed 5 + network extent.
CountTable projective_planar_table(std::uint32_t max_n, const NetworkSeriesPair& nets);

/// Non-projective-planar toroidal ones: M, M* and crowns with planar networks
/// substituted. max_n may not exceed 8 + network extent.
CountTable toroidal_table(std::uint32_t max_n, const NetworkSeriesPair& nets);

namespace reference {
CountTable toroidal_cores();  // n = 5..64
CountTable crowns();          // (n, m, count), n <= 64
CountTable projective();      // n <= 9
CountTable toroidal();        // n <= 12
}  // namespace reference

/// Lines describing every row where the tables differ (rows of `expected`
/// beyond `max_n` are ignored). Empty when they agree.
std::vector<std::string> discrepancies(const CountTable& computed, const CountTable& expected,
                                       std::uint32_t max_n);

}  // namespace walsh
