#include "walsh/core_series.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "walsh/matching.hpp"

namespace walsh {

namespace {

// Sum of "coef monomial" lines, scaled by 1/denominator.
IndexSeries from_table(const std::vector<std::pair<long, const char*>>& rows, long denominator) {
  IndexSeries out;
  for (const auto& [coef, mono] : rows) out.add_term(parse_monomial(mono), make_rational(coef, denominator));
  return out;
}

IndexSeries var(VarRef v) { return IndexSeries(v); }

IndexSeries mono(std::initializer_list<Monomial::Factor> f) { return IndexSeries(Monomial(f)); }

// Skips zero exponents, which Monomial does not accept in factor lists.
Monomial power_product(const std::vector<Monomial::Factor>& factors) {
  Monomial m;
  for (const auto& [v, e] : factors)
    if (e > 0) m = m * Monomial(v, e);
  return m;
}

IndexSeries matched_V(std::uint32_t k, std::uint32_t index) {
  return evaluate_yz(shifted_path_matching(k), var(b(index)), var(beta(index)));
}

IndexSeries matched_U(std::uint32_t k, std::uint32_t index) {
  return evaluate_yz(path_matching(k), var(b(index)), var(beta(index)));
}

}  // namespace

std::uint32_t euler_phi(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("euler_phi: n must be positive");
  std::uint32_t result = n;
  std::uint32_t m = n;
  for (std::uint32_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

IndexSeries walsh_K5() {
  return from_table({{1, "a1^5*b1^10"},
                     {10, "a1^3*a2*b1^3*b2^3*c1"},
                     {15, "a1*a2^2*b2^4*c1^2"},
                     {20, "a1^2*a3*b1*b3^3"},
                     {20, "a2*a3*b3*b6*c1"},
                     {30, "a1*a4*b4^2*c2"},
                     {24, "a5*b5^2"}},
                    120);
}

IndexSeries walsh_K5e(PoleSign sign) {
  const BiconnectedNetworks nets = networks_from_biconnected(walsh_K5());
  return sign == PoleSign::Plus ? nets.plus01 : nets.minus01;
}

IndexSeries walsh_M() {
  return from_table({{1, "a1^8*b1^19"},
                     {1, "a1^6*a2*b1^6*b2^6*c1"},
                     {6, "a1^6*a2*b1^12*b2^3*c1"},
                     {6, "a1^4*a2^2*b1^3*b2^7*c1^2"},
                     {9, "a1^4*a2^2*b1^5*b2^6*c1^2"},
                     {9, "a1^2*a2^3*b2^8*c1^3"},
                     {6, "a1^2*a2^3*b1*b2^9"},
                     {6, "a2^4*b2^9*c1"},
                     {4, "a1^5*a3*b1^10*b3^3"},
                     {4, "a1^3*a2*a3*b1^3*b2^3*b3*b6*c1"},
                     {12, "a1^3*a2*a3*b1^3*b2^3*b3^3*c1"},
                     {12, "a1*a2^2*a3*b2^4*b3*b6*c1^2"},
                     {4, "a1^2*a3^2*b1*b3^6"},
                     {4, "a2*a3^2*b3^2*b6^2*c1"},
                     {18, "a1^2*a2*a4*b1*b2^2*b4^3*c2"},
                     {18, "a2^2*a4*b2^2*b4^3*c1*c2"},
                     {12, "a1^2*a6*b1*b6^3"},
                     {12, "a2*a6*b6^3*c1"}},
                    144);
}

IndexSeries walsh_Mstar() {
  return from_table({{1, "a1^8*b1^18"},
                     {1, "a1^6*a2*b1^6*b2^6"},
                     {6, "a1^6*a2*b1^11*b2^3*c1"},
                     {6, "a1^4*a2^2*b1^3*b2^7*c1"},
                     {9, "a1^4*a2^2*b1^4*b2^6*c1^2"},
                     {9, "a1^2*a2^3*b2^8*c1^2"},
                     {6, "a1^2*a2^3*b2^9"},
                     {6, "a2^4*b2^9"},
                     {4, "a1^5*a3*b1^9*b3^3"},
                     {4, "a1^3*a2*a3*b1^3*b2^3*b3*b6"},
                     {12, "a1^3*a2*a3*b1^2*b2^3*b3^3*c1"},
                     {12, "a1*a2^2*a3*b2^4*b3*b6*c1"},
                     {4, "a1^2*a3^2*b3^6"},
                     {4, "a2*a3^2*b3^2*b6^2"},
                     {18, "a1^2*a2*a4*b2^2*b4^3*c2"},
                     {18, "a2^2*a4*b2^2*b4^3*c2"},
                     {12, "a1^2*a6*b6^3"},
                     {12, "a2*a6*b6^3"}},
                    144);
}

IndexSeries walsh_cycle(std::uint32_t n) {
  if (n < 3) throw std::invalid_argument("walsh_cycle: n must be >= 3");
  IndexSeries out;
  for (std::uint32_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    out.add_term(Monomial{{a(d), n / d}, {b(d), n / d}}, make_rational(euler_phi(d), 2 * n));
  }
  if (n % 2 == 1) {
    const std::uint32_t h = (n - 1) / 2;
    out.add_term(power_product({{a(1), 1}, {a(2), h}, {b(2), h}, {c(1), 1}}), make_rational(1, 2));
  } else {
    const std::uint32_t h = n / 2;
    // Reflections through two opposite edges, then through two opposite vertices.
    out.add_term(power_product({{a(2), h}, {b(2), h - 1}, {c(1), 2}}), make_rational(1, 4));
    out.add_term(power_product({{a(1), 2}, {a(2), h - 1}, {b(2), h}}), make_rational(1, 4));
  }
  return out;
}

IndexSeries walsh_matched_path(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("walsh_matched_path: n must be >= 1");
  const Rational half = make_rational(1, 2);
  IndexSeries out = half * mul(mono({{a(1), n}}), matched_U(n, 1));
  if (n % 2 == 1) {
    const std::uint32_t h = (n - 1) / 2;
    out += half * mul(IndexSeries(power_product({{a(1), 1}, {a(2), h}})), matched_V(h, 2));
  } else {
    const std::uint32_t h = n / 2;
    IndexSeries middle = mul(var(gamma(1)), matched_U(h, 2)) + mul(var(c(1)), matched_V(h - 1, 2));
    out += half * mul(mono({{a(2), h}}), middle);
  }
  return out;
}

IndexSeries walsh_matched_cycle(std::uint32_t n) {
  if (n < 3) throw std::invalid_argument("walsh_matched_cycle: n must be >= 3");
  IndexSeries out;
  for (std::uint32_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const std::uint32_t k = n / d;
    IndexSeries rot = evaluate_yz(cycle_matching(d), var(b(k)), var(beta(k)));
    out += make_rational(euler_phi(k), 2 * n) * mul(mono({{a(k), d}}), rot);
  }
  if (n % 2 == 1) {
    const std::uint32_t h = (n - 1) / 2;
    IndexSeries inner = mul(var(gamma(1)), matched_V(h, 2)) +
                        mul(mono({{c(1), 1}, {beta(2), 1}}), matched_V(h - 1, 2));
    out += make_rational(1, 2) * mul(IndexSeries(power_product({{a(1), 1}, {a(2), h}})), inner);
  } else {
    const std::uint32_t h = n / 2;
    IndexSeries through_vertices =
        mul(IndexSeries(power_product({{a(1), 2}, {a(2), h - 1}, {beta(2), 1}})), matched_V(h - 1, 2));
    IndexSeries through_edges = mul(mono({{gamma(1), 2}}), matched_U(h, 2)) +
                                Rational(2) * mul(mono({{c(1), 1}, {gamma(1), 1}}), matched_V(h - 1, 2)) +
                                mul(mono({{c(1), 2}, {beta(2), 1}}), matched_V(h - 2, 2));
    out += make_rational(1, 4) * (through_vertices + mul(mono({{a(2), h}}), through_edges));
  }
  return out;
}

IndexSeries walsh_complete(std::uint32_t n) {
  if (n < 1 || n > 12) throw std::invalid_argument("walsh_complete: n must be in 1..12");
  IndexSeries out;
  // counts[i] = number of i-cycles; enumerate partitions of n by largest part.
  std::vector<std::uint32_t> counts(n + 1, 0);
  auto emit = [&]() {
    Integer denom = 1;
    std::map<VarRef, std::uint32_t> exps;
    for (std::uint32_t i = 1; i <= n; ++i) {
      const std::uint32_t ni = counts[i];
      if (ni == 0) continue;
      exps[a(i)] += ni;
      Integer fact = 1;
      for (std::uint32_t t = 2; t <= ni; ++t) fact *= t;
      Integer ipow = 1;
      for (std::uint32_t t = 0; t < ni; ++t) ipow *= i;
      denom *= fact * ipow;
      const std::uint32_t within = i * (ni * (ni - 1) / 2) + ((i - 1) / 2) * ni;
      if (within > 0) exps[b(i)] += within;
      if (i % 2 == 0) exps[c(i / 2)] += ni;
      for (std::uint32_t j = i + 1; j <= n; ++j) {
        if (counts[j] == 0) continue;
        exps[b(std::lcm(i, j))] += std::gcd(i, j) * ni * counts[j];
      }
    }
    Monomial m;
    for (const auto& [v, e] : exps) m = m * Monomial(v, e);
    out.add_term(m, Rational(Integer(1), denom));
  };
  auto rec = [&](auto&& self, std::uint32_t remaining, std::uint32_t max_part) -> void {
    if (remaining == 0) {
      emit();
      return;
    }
    for (std::uint32_t part = std::min(remaining, max_part); part >= 1; --part) {
      ++counts[part];
      self(self, remaining - part, part);
      --counts[part];
    }
  };
  rec(rec, n, n);
  return out;
}

BiconnectedNetworks networks_from_biconnected(const IndexSeries& walsh_b) {
  BiconnectedNetworks out;
  out.plus01 = divide_exact(Rational(2) * partial_derivative(walsh_b, b(1)), Monomial(a(1), 2));
  out.minus01 = divide_exact(Rational(2) * partial_derivative(walsh_b, c(1)), Monomial(a(2)));
  const IndexSeries one = IndexSeries::one();
  out.plus = mul(one + var(b(1)), out.plus01) - one;
  out.minus = mul(one + var(c(1)), out.minus01) - one;
  return out;
}

}  // namespace walsh
