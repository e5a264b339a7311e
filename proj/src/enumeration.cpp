#include "walsh/enumeration.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>

#include "planar_networks_data.hpp"
#include "walsh/core_series.hpp"

namespace walsh {

namespace {

using Poly = std::map<std::uint32_t, Integer>;  // y exponent -> coefficient

// Factored form of the bundled data: N = y + (1+y) * sum_n x^n * bracket_n(y).
struct FactoredRow {
  std::uint32_t n;
  std::uint32_t m;
  long plus;
  long minus;
};

constexpr FactoredRow kBracket[] = {
    {1, 2, 1, 1},
    {2, 3, 1, 1},   {2, 4, 3, 1},    {2, 5, 1, 1},
    {3, 4, 1, 1},   {3, 5, 8, 2},    {3, 6, 15, 3},   {3, 7, 9, 3},   {3, 8, 3, 1},
    {4, 5, 1, 1},   {4, 6, 16, 4},   {4, 7, 66, 8},   {4, 8, 112, 12},
    {4, 9, 97, 13}, {4, 10, 47, 7},  {4, 11, 9, 3},
};

std::map<std::uint32_t, Poly> by_vertices(const BivariateSeries& s) {
  std::map<std::uint32_t, Poly> out;
  for (const auto& [key, coef] : s.terms()) out[key.first][key.second] = coef.get_num();
  return out;
}

// Quotient of p by (1 + y); nullopt if the division leaves a remainder.
std::optional<Poly> divide_by_one_plus_y(const Poly& p) {
  if (p.empty()) return Poly{};
  const std::uint32_t top = p.rbegin()->first;
  Poly q;
  Integer carry = 0;  // q_{j-1}
  for (std::uint32_t j = 0; j <= top; ++j) {
    auto it = p.find(j);
    const Integer pj = it == p.end() ? Integer(0) : it->second;
    if (j == top) {
      if (pj != carry) return std::nullopt;
      break;
    }
    carry = pj - carry;
    if (carry != 0) q[j] = carry;
  }
  return q;
}

void check_side(const BivariateSeries& s, const char* side) {
  const auto parts = by_vertices(s);
  auto fail = [&](const std::string& what) {
    throw std::runtime_error(std::string("network series (") + side + "): " + what);
  };
  auto zero = parts.find(0);
  if (zero == parts.end() || zero->second != Poly{{1, Integer(1)}})
    fail("the n = 0 part must be exactly the bare edge y");
  for (const auto& [n, poly] : parts) {
    if (n == 0) continue;
    auto q = divide_by_one_plus_y(poly);
    if (!q) fail("x^" + std::to_string(n) + " part is not divisible by 1+y");
    for (const auto& [e, c] : *q)
      if (c < 0) fail("x^" + std::to_string(n) + " part has a negative quotient by 1+y");
  }
}

NetworkSeriesPair load_embedded() {
  std::istringstream is(kPlanarNetworksData);
  NetworkSeriesPair nets = read_network_series(is);
  NetworkSeriesPair expected;
  expected.plus.add_term(0, 1, 1);
  expected.minus.add_term(0, 1, 1);
  for (const auto& r : kBracket) {
    for (std::uint32_t shift = 0; shift < 2; ++shift) {
      expected.plus.add_term(r.n, r.m + shift, r.plus);
      expected.minus.add_term(r.n, r.m + shift, r.minus);
    }
  }
  if (!(nets.plus == expected.plus) || !(nets.minus == expected.minus))
    throw std::runtime_error("bundled planar network data disagrees with its factored form");
  return nets;
}

IndexSeries k5e_tilde_reindexed(std::uint32_t k) {
  return reindex(specialize_tilde(walsh_K5e(PoleSign::Plus)).to_series(), k);
}

std::uint32_t smallest_crown(std::uint32_t n) { return n + 3 * ((n + 1) / 2); }

}  // namespace

NetworkSeriesPair read_network_series(std::istream& is) {
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(is, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  std::string magic;
  std::string version;
  if (!next_line() || !(std::istringstream(line) >> magic >> version) || magic != "network-series" ||
      version != "v1")
    throw std::runtime_error("network series: missing 'network-series v1' header");

  NetworkSeriesPair nets;
  std::map<std::pair<std::uint32_t, std::uint32_t>, bool> seen;
  while (next_line()) {
    std::istringstream row(line);
    long n = -1;
    long m = -1;
    std::string plus_text;
    std::string minus_text;
    std::string extra;
    if (!(row >> n >> m >> plus_text >> minus_text) || (row >> extra) || n < 0 || m < 0)
      throw std::runtime_error("network series: malformed row '" + line + "'");
    Integer plus;
    Integer minus;
    if (plus.set_str(plus_text, 10) != 0 || minus.set_str(minus_text, 10) != 0 || plus < 0 || minus < 0)
      throw std::runtime_error("network series: bad counts in row '" + line + "'");
    if (minus > plus)
      throw std::runtime_error("network series: symmetric count exceeds total in row '" + line + "'");
    const auto key = std::make_pair(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(m));
    if (seen[key]) throw std::runtime_error("network series: duplicate row '" + line + "'");
    seen[key] = true;
    nets.plus.add_term(key.first, key.second, Rational(plus));
    nets.minus.add_term(key.first, key.second, Rational(minus));
  }
  check_side(nets.plus, "plus");
  check_side(nets.minus, "minus");
  return nets;
}

const NetworkSeriesPair& planar_networks() {
  static const NetworkSeriesPair nets = load_embedded();
  return nets;
}

std::uint32_t network_extent(const NetworkSeriesPair& nets) {
  std::uint32_t extent = 0;
  for (const auto& [key, coef] : nets.plus.terms()) extent = std::max(extent, key.first);
  return extent;
}

IndexSeries crown_walsh(std::uint32_t truncation) {
  const IndexSeries plus = walsh_K5e(PoleSign::Plus);
  const IndexSeries minus = walsh_K5e(PoleSign::Minus);
  auto out = IndexSeries::zero(truncation);
  for (std::uint32_t n = 3; smallest_crown(n) <= truncation; ++n)
    out += compose_matched(walsh_matched_cycle(n), plus, minus, truncation);
  return out;
}

BivariateSeries crown_tilde(std::uint32_t truncation) {
  // K5\e is pole-exchange symmetric, so both edge sorts get the same series.
  auto out = IndexSeries::zero(truncation);
  for (std::uint32_t n = 3; smallest_crown(n) <= truncation; ++n) {
    out += substitute(
        walsh_matched_cycle(n),
        [](VarRef v) -> std::optional<IndexSeries> {
          switch (v.family) {
            case Family::A: return IndexSeries(Monomial(x(), v.index));
            case Family::B:
            case Family::C: return IndexSeries(Monomial(y(), v.index));
            case Family::Beta:
            case Family::Gamma: return k5e_tilde_reindexed(v.index);
            default: return std::nullopt;
          }
        },
        truncation);
  }
  BivariateSeries tilde = BivariateSeries::from_series(out);
  if (!tilde.has_nonnegative_integer_coefficients())
    throw IntegralityError("crown_tilde: non-integer crown count");
  return tilde;
}

CountTable rows_of(const BivariateSeries& series, std::uint32_t min_n) {
  if (!series.has_nonnegative_integer_coefficients())
    throw IntegralityError("rows_of: coefficients are not nonnegative integers");
  CountTable t;
  for (const auto& [key, coef] : series.terms())
    if (key.first >= min_n) t.rows.push_back({key.first, key.second, coef.get_num()});
  return t;
}

CountTable toroidal_core_table(std::uint32_t max_n) {
  if (max_n > 64) throw RangeError("toroidal cores are tabulated for n <= 64");
  IndexSeries cores = truncate(walsh_K5() + walsh_M() + walsh_Mstar(), max_n) + crown_walsh(max_n);
  const auto marginal = specialize_tilde(cores).y_marginal();
  CountTable t;
  for (std::uint32_t n = 5; n <= max_n; ++n) {
    auto it = marginal.find(n);
    t.rows.push_back({n, std::nullopt, it == marginal.end() ? Integer(0) : it->second.get_num()});
  }
  return t;
}

CountTable projective_planar_table(std::uint32_t max_n, const NetworkSeriesPair& nets) {
  const std::uint32_t limit = 5 + network_extent(nets);
  if (max_n > limit)
    throw RangeError("network data covers " + std::to_string(network_extent(nets)) +
                     " internal vertices, so n must be <= " + std::to_string(limit));
  return rows_of(tilde_of_composition(walsh_K5(), nets, max_n));
}

CountTable toroidal_table(std::uint32_t max_n, const NetworkSeriesPair& nets) {
  const std::uint32_t limit = 8 + network_extent(nets);
  if (max_n > limit)
    throw RangeError("network data covers " + std::to_string(network_extent(nets)) +
                     " internal vertices, so n must be <= " + std::to_string(limit));
  const IndexSeries cores = truncate(walsh_M() + walsh_Mstar(), max_n) + crown_walsh(max_n);
  return rows_of(tilde_of_composition(cores, nets, max_n));
}

std::vector<std::string> discrepancies(const CountTable& computed, const CountTable& expected,
                                       std::uint32_t max_n) {
  using Key = std::pair<std::uint32_t, std::optional<std::uint32_t>>;
  std::map<Key, Integer> have;
  std::map<Key, Integer> want;
  for (const auto& r : computed.rows)
    if (r.n <= max_n) have[{r.n, r.m}] = r.count;
  for (const auto& r : expected.rows)
    if (r.n <= max_n) want[{r.n, r.m}] = r.count;
  std::map<Key, bool> keys;
  for (const auto& [k, v] : have) keys[k] = true;
  for (const auto& [k, v] : want) keys[k] = true;

  std::vector<std::string> out;
  for (const auto& [k, unused] : keys) {
    const Integer got = have.count(k) ? have[k] : Integer(0);
    const Integer ref = want.count(k) ? want[k] : Integer(0);
    if (got == ref) continue;
    std::string where = "n=" + std::to_string(k.first);
    if (k.second) where += " m=" + std::to_string(*k.second);
    out.push_back(where + ": computed " + got.get_str() + ", expected " + ref.get_str());
  }
  return out;
}

}  // namespace walsh
