#include "walsh/matching.hpp"

#include <stdexcept>
#include <vector>

namespace walsh {

namespace {

// V_k = z U_k satisfies V_0 = 1, V_1 = z, V_k = z V_{k-1} + yz V_{k-2}.
const std::vector<IndexSeries>& shifted_table(std::uint32_t k) {
  thread_local std::vector<IndexSeries> table{IndexSeries::one(), IndexSeries(z())};
  const IndexSeries yz = Monomial{{y(), 1}, {z(), 1}};
  while (table.size() <= k) {
    const std::size_t n = table.size();
    table.push_back(mul(table[n - 1], IndexSeries(z())) + mul(table[n - 2], yz));
  }
  return table;
}

}  // namespace

IndexSeries shifted_path_matching(std::uint32_t k) { return shifted_table(k)[k]; }

IndexSeries path_matching(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("U_0 = 1/z is not representable as a polynomial");
  // V_n = z U_n, and every V_n with n >= 1 is divisible by z.
  return divide_exact(shifted_path_matching(n), Monomial(z()));
}

IndexSeries cycle_matching(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("cycle_matching requires n >= 1");
  const IndexSeries zz(z());
  if (n == 1) return zz;
  if (n == 2) return IndexSeries(Monomial{{y(), 1}, {z(), 1}}, 2) + IndexSeries(Monomial(z(), 2));
  // T_n = y z^2 U_{n-2} + z U_n = yz V_{n-2} + V_n
  const IndexSeries yz = Monomial{{y(), 1}, {z(), 1}};
  return mul(yz, shifted_path_matching(n - 2)) + shifted_path_matching(n);
}

IndexSeries evaluate_yz(const IndexSeries& poly, const IndexSeries& first, const IndexSeries& second) {
  return substitute(poly, assignment_from({{y(), first}, {z(), second}}));
}

bool verify_matching_gf(std::uint32_t max_n) {
  if (max_n < 3) throw std::invalid_argument("verify_matching_gf requires max_n >= 3");
  const IndexSeries xz = Monomial{{x(), 1}, {z(), 1}};
  const IndexSeries x2yz = Monomial{{x(), 2}, {y(), 1}, {z(), 1}};
  const IndexSeries step = xz + x2yz;

  // 1 / (1 - step) as a truncated geometric series; step has no x^0 term so
  // max_n + 1 summands suffice.
  auto geometric = IndexSeries::one(max_n);
  auto power = IndexSeries::one(max_n);
  for (std::uint32_t k = 1; k <= max_n; ++k) {
    power = mul(power, step, max_n);
    geometric += power;
  }
  const IndexSeries cycle_gf = mul(IndexSeries(xz) + IndexSeries(Monomial{{x(), 2}, {y(), 1}, {z(), 1}}, 2),
                                   geometric, max_n);

  auto x_coefficient = [](const IndexSeries& s, std::uint32_t n) {
    auto out = IndexSeries::zero();
    for (const auto& [m, coef] : s.terms()) {
      if (m.exponent(x()) == n) out.add_term(m / Monomial(x(), n), coef);
    }
    return out;
  };

  for (std::uint32_t n = 0; n <= max_n; ++n) {
    // z * sum U_n x^n = 1/(1 - step)
    if (x_coefficient(geometric, n) != shifted_path_matching(n)) return false;
    if (n >= 1 && x_coefficient(cycle_gf, n) != cycle_matching(n)) return false;
  }
  return x_coefficient(cycle_gf, 0).is_zero();
}

}  // namespace walsh
