#include "walsh/composition.hpp"

#include <algorithm>

namespace walsh {

namespace {

IndexSeries x_power(std::uint32_t k) { return IndexSeries(Monomial(x(), k)); }

void require_counts(const IndexSeries& p, const char* where) {
  for (const auto& [m, coef] : p.terms()) {
    if (!is_integer(coef) || coef < 0)
      throw IntegralityError(std::string(where) + ": coefficient " + to_string(coef) + " of " +
                             m.to_string() + " is not a nonnegative integer");
  }
}

}  // namespace

BivariateSeries BivariateSeries::from_series(const IndexSeries& p) {
  BivariateSeries out(p.truncation());
  for (const auto& [m, coef] : p.terms()) {
    for (const auto& [v, e] : m.factors()) {
      if (v.family != Family::X && v.family != Family::Y)
        throw std::invalid_argument("BivariateSeries: unexpected variable " + v.name());
    }
    out.add_term(m.exponent(x()), m.exponent(y()), coef);
  }
  return out;
}

IndexSeries BivariateSeries::to_series() const {
  auto out = IndexSeries::zero(truncation_);
  for (const auto& [key, coef] : terms_) {
    Monomial m;
    if (key.first > 0) m = m * Monomial(x(), key.first);
    if (key.second > 0) m = m * Monomial(y(), key.second);
    out.add_term(m, coef);
  }
  return out;
}

Rational BivariateSeries::coefficient(std::uint32_t n, std::uint32_t m) const {
  auto it = terms_.find({n, m});
  return it == terms_.end() ? Rational(0) : it->second;
}

void BivariateSeries::add_term(std::uint32_t n, std::uint32_t m, const Rational& coef) {
  if (n > truncation_ || coef == 0) return;
  Rational& slot = terms_[{n, m}];
  slot += coef;
  if (slot == 0) terms_.erase({n, m});
}

bool BivariateSeries::has_nonnegative_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return is_integer(t.second) && t.second >= 0; });
}

std::map<std::uint32_t, Rational> BivariateSeries::y_marginal() const {
  std::map<std::uint32_t, Rational> out;
  for (const auto& [key, coef] : terms_) out[key.first] += coef;
  return out;
}

IndexSeries compose_walsh(const IndexSeries& core, const IndexSeries& net_plus,
                          const IndexSeries& net_minus, std::uint32_t truncation) {
  return substitute(
      core,
      [&](VarRef v) -> std::optional<IndexSeries> {
        if (v.family == Family::B) return reindex(net_plus, v.index, truncation);
        if (v.family == Family::C) return reindex(net_minus, v.index, truncation);
        return std::nullopt;
      },
      truncation);
}

IndexSeries compose_matched(const IndexSeries& matched_core, const IndexSeries& net_plus,
                            const IndexSeries& net_minus, std::uint32_t truncation) {
  return substitute(
      matched_core,
      [&](VarRef v) -> std::optional<IndexSeries> {
        if (v.family == Family::Beta) return reindex(net_plus, v.index, truncation);
        if (v.family == Family::Gamma) return reindex(net_minus, v.index, truncation);
        return std::nullopt;
      },
      truncation);
}

BivariateSeries tilde_of_composition(const IndexSeries& core, const NetworkSeriesPair& nets,
                                     std::uint32_t truncation) {
  const IndexSeries plus = nets.plus.to_series();
  const IndexSeries minus = nets.minus.to_series();
  IndexSeries out = substitute(
      core,
      [&](VarRef v) -> std::optional<IndexSeries> {
        switch (v.family) {
          case Family::A: return x_power(v.index);
          case Family::B: return reindex(plus, v.index, truncation);
          case Family::C: return reindex(minus, v.index, truncation);
          default: throw std::invalid_argument("tilde_of_composition: unexpected variable " + v.name());
        }
      },
      truncation);
  require_counts(out, "tilde_of_composition");
  return BivariateSeries::from_series(out);
}

BivariateSeries specialize_labelled(const IndexSeries& w) {
  IndexSeries out = substitute(w, [](VarRef v) -> std::optional<IndexSeries> {
    if (v == a(1)) return IndexSeries(x());
    if (v == b(1)) return IndexSeries(y());
    if (v.is_scalar()) return std::nullopt;
    return IndexSeries::zero();
  });
  return BivariateSeries::from_series(out);
}

BivariateSeries specialize_tilde(const IndexSeries& w) {
  IndexSeries out = substitute(w, [](VarRef v) -> std::optional<IndexSeries> {
    switch (v.family) {
      case Family::A: return x_power(v.index);
      case Family::B:
      case Family::C: return IndexSeries(Monomial(y(), v.index));
      default: throw std::invalid_argument("specialize_tilde: unexpected variable " + v.name());
    }
  });
  require_counts(out, "specialize_tilde");
  return BivariateSeries::from_series(out);
}

IndexSeries specialize_tilde_matched(const IndexSeries& w) {
  IndexSeries out = substitute(w, [](VarRef v) -> std::optional<IndexSeries> {
    switch (v.family) {
      case Family::A: return x_power(v.index);
      case Family::B:
      case Family::C: return IndexSeries(Monomial(y(), v.index));
      case Family::Beta:
      case Family::Gamma: return IndexSeries(Monomial(z(), v.index));
      default: return std::nullopt;
    }
  });
  require_counts(out, "specialize_tilde_matched");
  return out;
}

bool labelled_composition_check(const BivariateSeries& g, const BivariateSeries& n,
                                const BivariateSeries& composed) {
  const std::uint32_t order = std::min({g.truncation(), n.truncation(), composed.truncation()});
  const IndexSeries inner = truncate(n.to_series(), order);
  IndexSeries expected = substitute(
      truncate(g.to_series(), order),
      [&](VarRef v) -> std::optional<IndexSeries> {
        if (v.family == Family::Y) return inner;
        return std::nullopt;
      },
      order);
  return expected == truncate(composed.to_series(), order);
}

}  // namespace walsh
