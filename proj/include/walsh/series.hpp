#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "walsh/rational.hpp"

namespace walsh {

// Variable families of a Walsh index series. a: vertex cycles; b/c:
// cylindrical/Moebius edge cycles; beta/gamma: the same for the second edge
// sort of matched graphs; x, y, z: plain scalars (index always 1).
enum class Family : std::uint8_t { A, B, C, Beta, Gamma, X, Y, Z };

struct VarRef {
  Family family = Family::A;
  std::uint32_t index = 1;

  friend auto operator<=>(const VarRef&, const VarRef&) = default;

  bool is_scalar() const {
    return family == Family::X || family == Family::Y || family == Family::Z;
  }
  std::string name() const;
};

// Throws std::invalid_argument when index == 0, or index != 1 for scalars.
VarRef make_var(Family family, std::uint32_t index = 1);

inline VarRef a(std::uint32_t k) { return make_var(Family::A, k); }
inline VarRef b(std::uint32_t k) { return make_var(Family::B, k); }
inline VarRef c(std::uint32_t k) { return make_var(Family::C, k); }
inline VarRef beta(std::uint32_t k) { return make_var(Family::Beta, k); }
inline VarRef gamma(std::uint32_t k) { return make_var(Family::Gamma, k); }
inline VarRef x() { return make_var(Family::X); }
inline VarRef y() { return make_var(Family::Y); }
inline VarRef z() { return make_var(Family::Z); }

/// Product of powers of variables. Factors are kept sorted by variable with
/// strictly positive exponents, so equal monomials compare equal.
class Monomial {
 public:
  using Factor = std::pair<VarRef, std::uint32_t>;

  Monomial() = default;
  Monomial(VarRef v, std::uint32_t exponent = 1);
  Monomial(std::initializer_list<Factor> factors);

  std::uint32_t exponent(VarRef v) const;
  const std::vector<Factor>& factors() const& { return factors_; }
  std::vector<Factor> factors() && { return std::move(factors_); }
  bool is_one() const { return factors_.empty(); }

  // Vertex weight: sum of k*exp(a_k) plus exp(x). This is the truncation grade.
  std::uint32_t grade() const { return grade_; }

  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& lhs, const Monomial& rhs);
  // Requires rhs.divides(lhs); throws std::domain_error otherwise.
  friend Monomial operator/(const Monomial& lhs, const Monomial& rhs);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend bool operator<(const Monomial& lhs, const Monomial& rhs) {
    return lhs.factors_ < rhs.factors_;
  }

  std::string to_string() const;

 private:
  void normalize();

  std::vector<Factor> factors_;
  std::uint32_t grade_ = 0;
};

inline constexpr std::uint32_t kExact = std::numeric_limits<std::uint32_t>::max();

/// Sparse exact-rational combination of monomials, truncated at a maximum
/// grade (or exact). Zero coefficients are never stored and no stored term
/// exceeds the truncation order.
class IndexSeries {
 public:
  using TermMap = std::map<Monomial, Rational>;

  IndexSeries() = default;
  explicit IndexSeries(const Rational& constant, std::uint32_t truncation = kExact);
  // Catches IndexSeries(order) slips; build constants from a Rational or use zero()/one().
  template <std::integral T>
  IndexSeries(T, std::uint32_t = kExact) = delete;
  IndexSeries(const Monomial& m, const Rational& coef = 1, std::uint32_t truncation = kExact);
  IndexSeries(VarRef v) : IndexSeries(Monomial(v)) {}

  static IndexSeries zero(std::uint32_t truncation = kExact) {
    IndexSeries s;
    s.truncation_ = truncation;
    return s;
  }
  static IndexSeries one(std::uint32_t truncation = kExact) { return IndexSeries(Rational(1), truncation); }

  const TermMap& terms() const& { return terms_; }
  TermMap terms() && { return std::move(terms_); }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  std::uint32_t truncation() const { return truncation_; }
  bool is_exact() const { return truncation_ == kExact; }

  // Highest grade among stored terms (0 for the zero series).
  std::uint32_t max_grade() const;
  Rational constant_term() const;

  // Accumulates coef * m, dropping it if beyond the truncation order.
  void add_term(const Monomial& m, const Rational& coef);

  IndexSeries& operator+=(const IndexSeries& rhs);
  IndexSeries& operator-=(const IndexSeries& rhs);
  IndexSeries& operator*=(const Rational& scalar);

  friend bool operator==(const IndexSeries& lhs, const IndexSeries& rhs) {
    return lhs.terms_ == rhs.terms_;
  }

  // Canonical text form; see write_series().
  std::string to_string() const;

 private:
  friend IndexSeries truncate(const IndexSeries& p, std::uint32_t order);

  TermMap terms_;
  std::uint32_t truncation_ = kExact;
};

IndexSeries add(const IndexSeries& p, const IndexSeries& q);
IndexSeries mul(const IndexSeries& p, const IndexSeries& q);
IndexSeries mul(const IndexSeries& p, const IndexSeries& q, std::uint32_t truncation);
IndexSeries pow(const IndexSeries& p, std::uint32_t exponent, std::uint32_t truncation = kExact);
IndexSeries truncate(const IndexSeries& p, std::uint32_t order);

inline IndexSeries operator+(IndexSeries p, const IndexSeries& q) { return p += q; }
inline IndexSeries operator-(IndexSeries p, const IndexSeries& q) { return p -= q; }
inline IndexSeries operator*(const IndexSeries& p, const IndexSeries& q) { return mul(p, q); }
inline IndexSeries operator*(IndexSeries p, const Rational& s) { return p *= s; }
inline IndexSeries operator*(const Rational& s, IndexSeries p) { return p *= s; }
IndexSeries operator-(IndexSeries p);

/// Plethystic reindexing: every indexed variable v_i becomes v_{k*i} and
/// scalars x, y, z become x^k, y^k, z^k. Grades scale by k; the result is
/// truncated at min(k * input order, cap).
IndexSeries reindex(const IndexSeries& p, std::uint32_t k, std::uint32_t cap = kExact);

/// Returns the series to put in place of a variable, or nullopt to leave the
/// variable untouched.
using Assignment = std::function<std::optional<IndexSeries>(VarRef)>;

Assignment assignment_from(std::map<VarRef, IndexSeries> table);

/// Replaces each assigned variable by its series, expanding and truncating
/// at grade `truncation`. Substituted series must not lower grades (every
/// use here maps a_k to grade-k objects and edge variables to series of
/// nonnegative grade); the result is truncated at min(truncation, p's order).
IndexSeries substitute(const IndexSeries& p, const Assignment& assignment,
                       std::uint32_t truncation = kExact);

IndexSeries partial_derivative(const IndexSeries& p, VarRef v);

/// Exact division by a monomial. Throws std::domain_error if some term is
/// not divisible.
IndexSeries divide_exact(const IndexSeries& p, const Monomial& m);

Rational coefficient(const IndexSeries& p, const Monomial& m);

/// Canonical serialization: a header line "index-series v1 trunc <N|exact>"
/// then one term per line, "p/q monomial", in ascending monomial order
/// (variable family, then index). The unit monomial prints as "1".
void write_series(std::ostream& os, const IndexSeries& p);
IndexSeries read_series(std::istream& is);

Monomial parse_monomial(const std::string& text);

std::ostream& operator<<(std::ostream& os, const IndexSeries& p);

}  // namespace walsh
