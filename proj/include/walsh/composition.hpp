#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "walsh/series.hpp"

namespace walsh {

/// Series in x (vertices) and y (edges) only. Coefficients are rational so
/// that labelled specializations (x^n / n! weights) fit; counting outputs
/// are checked to be nonnegative integers.
class BivariateSeries {
 public:
  using Key = std::pair<std::uint32_t, std::uint32_t>;  // (x exponent, y exponent)
  using TermMap = std::map<Key, Rational>;

  explicit BivariateSeries(std::uint32_t truncation = kExact) : truncation_(truncation) {}

  // Throws std::invalid_argument if p mentions anything besides x and y.
  static BivariateSeries from_series(const IndexSeries& p);
  IndexSeries to_series() const;

  const TermMap& terms() const& { return terms_; }
  TermMap terms() && { return std::move(terms_); }
  std::uint32_t truncation() const { return truncation_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(std::uint32_t n, std::uint32_t m) const;
  void add_term(std::uint32_t n, std::uint32_t m, const Rational& coef);

  bool has_nonnegative_integer_coefficients() const;
  // Sum over m of the coefficient of x^n y^m, per n.
  std::map<std::uint32_t, Rational> y_marginal() const;

  friend bool operator==(const BivariateSeries& lhs, const BivariateSeries& rhs) {
    return lhs.terms_ == rhs.terms_;
  }

 private:
  TermMap terms_;
  std::uint32_t truncation_;
};

/// Thrown when a count that must be a nonnegative integer is not.
class IntegralityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Tilde series of a network class: all networks (plus) and the
/// pole-exchange symmetric ones (minus), by internal vertices and edges.
struct NetworkSeriesPair {
  BivariateSeries plus;
  BivariateSeries minus;
};

/// b_k -> W+ reindexed by k, c_k -> W- reindexed by k.
IndexSeries compose_walsh(const IndexSeries& core, const IndexSeries& net_plus,
                          const IndexSeries& net_minus, std::uint32_t truncation);

/// Same on the second edge sort of a matched series: beta_k -> W+ reindexed,
/// gamma_k -> W- reindexed; b and c are left alone.
IndexSeries compose_matched(const IndexSeries& matched_core, const IndexSeries& net_plus,
                            const IndexSeries& net_minus, std::uint32_t truncation);

/// a_k -> x^k, b_k -> plus(x^k, y^k), c_k -> minus(x^k, y^k).
/// Throws IntegralityError unless every coefficient is a nonnegative integer.
BivariateSeries tilde_of_composition(const IndexSeries& core, const NetworkSeriesPair& nets,
                                     std::uint32_t truncation);

/// a1 -> x, b1 -> y, every other variable -> 0.
BivariateSeries specialize_labelled(const IndexSeries& w);

/// a_i -> x^i, b_i, c_i -> y^i. Throws IntegralityError on a non-count.
BivariateSeries specialize_tilde(const IndexSeries& w);

/// Matched variant: additionally beta_i, gamma_i -> z^i. Result is in x, y, z.
/// Throws IntegralityError on a non-count.
IndexSeries specialize_tilde_matched(const IndexSeries& w);

/// Checks composed == g(x, n(x, y)), both sides cut at the smaller of the
/// truncations involved.
bool labelled_composition_check(const BivariateSeries& g, const BivariateSeries& n,
                                const BivariateSeries& composed);

}  // namespace walsh
