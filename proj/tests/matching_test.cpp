#include <gtest/gtest.h>

#include "walsh/graph_oracle.hpp"
#include "walsh/matching.hpp"

namespace walsh {
namespace {

IndexSeries S(const char* monomial, long coef = 1) { return IndexSeries(parse_monomial(monomial), coef); }

Integer at_one(const IndexSeries& p) {
  Rational total = 0;
  for (const auto& [m, coef] : p.terms()) total += coef;
  EXPECT_TRUE(is_integer(total));
  return total.get_num();
}

// Matching polynomial of g straight from the enumerated matchings.
IndexSeries enumerated_matching_poly(const SmallGraph& g) {
  const auto m = static_cast<std::uint32_t>(g.size());
  IndexSeries out;
  for (const auto& mu : matchings(g)) {
    const auto k = static_cast<std::uint32_t>(mu.size());
    Monomial term;
    if (k > 0) term = term * Monomial(y(), k);
    if (m > k) term = term * Monomial(z(), m - k);
    out.add_term(term, 1);
  }
  return out;
}

TEST(PathMatching, SmallCases) {
  EXPECT_EQ(path_matching(1), IndexSeries::one());
  EXPECT_EQ(path_matching(2), S("y") + S("z"));
  EXPECT_EQ(path_matching(3), S("y*z", 2) + S("z^2"));
  EXPECT_EQ(path_matching(4), S("y^2*z") + S("y*z^2", 3) + S("z^3"));
  EXPECT_THROW(path_matching(0), std::invalid_argument);
}

TEST(PathMatching, ShiftedVersion) {
  EXPECT_EQ(shifted_path_matching(0), IndexSeries::one());
  for (std::uint32_t k = 1; k <= 8; ++k) EXPECT_EQ(shifted_path_matching(k), S("z") * path_matching(k));
}

TEST(CycleMatching, SmallCases) {
  EXPECT_EQ(cycle_matching(1), S("z"));
  EXPECT_EQ(cycle_matching(2), S("y*z", 2) + S("z^2"));
  EXPECT_EQ(cycle_matching(3), S("y*z^2", 3) + S("z^3"));
}

TEST(MatchingCounts, FibonacciAndLucas) {
  Integer f1 = 1;
  Integer f2 = 2;
  EXPECT_EQ(at_one(path_matching(1)), f1);
  EXPECT_EQ(at_one(path_matching(2)), f2);
  for (std::uint32_t n = 3; n <= 20; ++n) {
    Integer next = f1 + f2;
    EXPECT_EQ(at_one(path_matching(n)), next) << n;
    f1 = f2;
    f2 = next;
  }
  Integer l1 = 1;
  Integer l2 = 3;
  for (std::uint32_t n = 3; n <= 20; ++n) {
    Integer next = l1 + l2;
    EXPECT_EQ(at_one(cycle_matching(n)), next) << n;
    l1 = l2;
    l2 = next;
  }
  EXPECT_EQ(at_one(cycle_matching(3)), 4);
  EXPECT_EQ(at_one(cycle_matching(4)), 7);
}

TEST(MatchingPoly, HomogeneousOfEdgeDegree) {
  for (std::uint32_t n = 1; n <= 12; ++n) {
    for (const auto& [m, coef] : path_matching(n).terms())
      EXPECT_EQ(m.exponent(y()) + m.exponent(z()), n - 1);
    for (const auto& [m, coef] : cycle_matching(n).terms()) {
      if (n >= 3) EXPECT_EQ(m.exponent(y()) + m.exponent(z()), n);
      EXPECT_TRUE(is_integer(coef) && coef > 0);
    }
  }
}

TEST(MatchingPoly, AgreesWithEnumeration) {
  for (int n = 3; n <= 10; ++n) {
    EXPECT_EQ(path_matching(static_cast<std::uint32_t>(n)), enumerated_matching_poly(path_graph(n))) << n;
    EXPECT_EQ(cycle_matching(static_cast<std::uint32_t>(n)), enumerated_matching_poly(cycle_graph(n))) << n;
  }
}

TEST(MatchingGf, IdentitiesHold) {
  EXPECT_TRUE(verify_matching_gf(3));
  EXPECT_TRUE(verify_matching_gf(10));
  EXPECT_TRUE(verify_matching_gf(20));
}

TEST(EvaluateYz, SubstitutesBothScalars) {
  EXPECT_EQ(evaluate_yz(path_matching(3), IndexSeries(b(2)), IndexSeries(beta(2))),
            S("b2*beta2", 2) + S("beta2^2"));
}

}  // namespace
}  // namespace walsh
