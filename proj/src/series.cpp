#include "walsh/series.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace walsh {

namespace {

constexpr std::pair<Family, const char*> kFamilyNames[] = {
    {Family::A, "a"},        {Family::B, "b"},         {Family::C, "c"},
    {Family::Beta, "beta"},  {Family::Gamma, "gamma"}, {Family::X, "x"},
    {Family::Y, "y"},        {Family::Z, "z"},
};

const char* family_name(Family f) {
  for (const auto& [family, name] : kFamilyNames) {
    if (family == f) return name;
  }
  return "?";
}

std::uint32_t saturating_mul(std::uint32_t lhs, std::uint32_t rhs) {
  const std::uint64_t product = std::uint64_t{lhs} * rhs;
  return product >= kExact ? kExact : static_cast<std::uint32_t>(product);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------- VarRef

VarRef make_var(Family family, std::uint32_t index) {
  if (index == 0) throw std::invalid_argument("variable index must be >= 1");
  VarRef v{family, index};
  if (v.is_scalar() && index != 1) {
    throw std::invalid_argument("scalar variables carry index 1 only");
  }
  return v;
}

std::string VarRef::name() const {
  std::string s = family_name(family);
  if (!is_scalar()) s += std::to_string(index);
  return s;
}

// -------------------------------------------------------------- Monomial

Monomial::Monomial(VarRef v, std::uint32_t exponent) {
  if (exponent > 0) factors_.emplace_back(v, exponent);
  normalize();
}

Monomial::Monomial(std::initializer_list<Factor> factors) : factors_(factors) { normalize(); }

void Monomial::normalize() {
  std::sort(factors_.begin(), factors_.end(),
            [](const Factor& l, const Factor& r) { return l.first < r.first; });
  std::vector<Factor> merged;
  merged.reserve(factors_.size());
  for (const auto& f : factors_) {
    if (f.second == 0) continue;
    if (!merged.empty() && merged.back().first == f.first) {
      merged.back().second += f.second;
    } else {
      merged.push_back(f);
    }
  }
  factors_ = std::move(merged);
  grade_ = 0;
  for (const auto& [v, e] : factors_) {
    if (v.family == Family::A) grade_ += v.index * e;
    if (v.family == Family::X) grade_ += e;
  }
}

std::uint32_t Monomial::exponent(VarRef v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, VarRef key) { return f.first < key; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

bool Monomial::divides(const Monomial& other) const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [&](const Factor& f) { return other.exponent(f.first) >= f.second; });
}

Monomial operator*(const Monomial& lhs, const Monomial& rhs) {
  Monomial out;
  out.factors_.reserve(lhs.factors_.size() + rhs.factors_.size());
  auto l = lhs.factors_.begin();
  auto r = rhs.factors_.begin();
  while (l != lhs.factors_.end() || r != rhs.factors_.end()) {
    if (r == rhs.factors_.end() || (l != lhs.factors_.end() && l->first < r->first)) {
      out.factors_.push_back(*l++);
    } else if (l == lhs.factors_.end() || r->first < l->first) {
      out.factors_.push_back(*r++);
    } else {
      out.factors_.emplace_back(l->first, l->second + r->second);
      ++l;
      ++r;
    }
  }
  out.grade_ = lhs.grade_ + rhs.grade_;
  return out;
}

Monomial operator/(const Monomial& lhs, const Monomial& rhs) {
  if (!rhs.divides(lhs)) {
    throw std::domain_error("monomial " + rhs.to_string() + " does not divide " + lhs.to_string());
  }
  Monomial out;
  for (const auto& [v, e] : lhs.factors_) {
    const std::uint32_t left = e - rhs.exponent(v);
    if (left > 0) out.factors_.emplace_back(v, left);
  }
  out.grade_ = lhs.grade_ - rhs.grade_;
  return out;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : factors_) {
    if (!s.empty()) s += '*';
    s += v.name();
    if (e != 1) s += '^' + std::to_string(e);
  }
  return s;
}

Monomial parse_monomial(const std::string& text) {
  if (text == "1") return {};
  Monomial out;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, '*')) {
    std::uint32_t exponent = 1;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      exponent = static_cast<std::uint32_t>(std::stoul(token.substr(caret + 1)));
      token.resize(caret);
    }
    std::size_t split = 0;
    while (split < token.size() && std::isalpha(static_cast<unsigned char>(token[split]))) ++split;
    const std::string name = token.substr(0, split);
    const std::string digits = token.substr(split);
    std::optional<Family> family;
    for (const auto& [f, n] : kFamilyNames) {
      if (name == n) family = f;
    }
    if (!family) throw std::invalid_argument("unknown variable '" + token + "'");
    const std::uint32_t index =
        digits.empty() ? 1 : static_cast<std::uint32_t>(std::stoul(digits));
    out = out * Monomial(make_var(*family, index), exponent);
  }
  return out;
}

// ----------------------------------------------------------- IndexSeries

IndexSeries::IndexSeries(const Rational& constant, std::uint32_t truncation)
    : truncation_(truncation) {
  add_term(Monomial(), constant);
}

IndexSeries::IndexSeries(const Monomial& m, const Rational& coef, std::uint32_t truncation)
    : truncation_(truncation) {
  add_term(m, coef);
}

std::uint32_t IndexSeries::max_grade() const {
  std::uint32_t g = 0;
  for (const auto& [m, _] : terms_) g = std::max(g, m.grade());
  return g;
}

Rational IndexSeries::constant_term() const { return coefficient(*this, Monomial()); }

void IndexSeries::add_term(const Monomial& m, const Rational& coef) {
  if (sgn(coef) == 0 || m.grade() > truncation_) return;
  auto [it, inserted] = terms_.try_emplace(m, coef);
  if (!inserted) {
    it->second += coef;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

IndexSeries& IndexSeries::operator+=(const IndexSeries& rhs) {
  if (rhs.truncation_ < truncation_) *this = truncate(*this, rhs.truncation_);
  for (const auto& [m, coef] : rhs.terms_) add_term(m, coef);
  return *this;
}

IndexSeries& IndexSeries::operator-=(const IndexSeries& rhs) {
  if (rhs.truncation_ < truncation_) *this = truncate(*this, rhs.truncation_);
  for (const auto& [m, coef] : rhs.terms_) add_term(m, -coef);
  return *this;
}

IndexSeries& IndexSeries::operator*=(const Rational& scalar) {
  if (sgn(scalar) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [_, coef] : terms_) coef *= scalar;
  return *this;
}

IndexSeries operator-(IndexSeries p) { return p *= Rational(-1); }

std::string IndexSeries::to_string() const {
  std::ostringstream os;
  write_series(os, *this);
  return os.str();
}

// ------------------------------------------------------------ operations

IndexSeries truncate(const IndexSeries& p, std::uint32_t order) {
  if (order >= p.truncation_) return p;
  auto out = IndexSeries::zero(order);
  for (const auto& [m, coef] : p.terms_) {
    if (m.grade() <= order) out.terms_.emplace_hint(out.terms_.end(), m, coef);
  }
  return out;
}

IndexSeries add(const IndexSeries& p, const IndexSeries& q) { return p + q; }

IndexSeries mul(const IndexSeries& p, const IndexSeries& q) { return mul(p, q, kExact); }

IndexSeries mul(const IndexSeries& p, const IndexSeries& q, std::uint32_t truncation) {
  const std::uint32_t order = std::min({p.truncation(), q.truncation(), truncation});
  auto out = IndexSeries::zero(order);
  for (const auto& [mp, cp] : p.terms()) {
    if (mp.grade() > order) continue;
    for (const auto& [mq, cq] : q.terms()) {
      if (mp.grade() + mq.grade() > order) continue;
      out.add_term(mp * mq, cp * cq);
    }
  }
  return out;
}

IndexSeries pow(const IndexSeries& p, std::uint32_t exponent, std::uint32_t truncation) {
  IndexSeries result = IndexSeries::one(std::min(p.truncation(), truncation));
  IndexSeries base = truncate(p, truncation);
  while (exponent > 0) {
    if (exponent & 1U) result = mul(result, base, truncation);
    exponent >>= 1U;
    if (exponent > 0) base = mul(base, base, truncation);
  }
  return result;
}

IndexSeries reindex(const IndexSeries& p, std::uint32_t k, std::uint32_t cap) {
  if (k == 0) throw std::invalid_argument("reindex factor must be positive");
  auto out = IndexSeries::zero(std::min(saturating_mul(p.truncation(), k), cap));
  for (const auto& [m, coef] : p.terms()) {
    Monomial image;
    for (const auto& [v, e] : m.factors()) {
      image = v.is_scalar() ? image * Monomial(v, e * k)
                            : image * Monomial(VarRef{v.family, v.index * k}, e);
    }
    out.add_term(image, coef);
  }
  return out;
}

Assignment assignment_from(std::map<VarRef, IndexSeries> table) {
  return [table = std::move(table)](VarRef v) -> std::optional<IndexSeries> {
    if (auto it = table.find(v); it != table.end()) return it->second;
    return std::nullopt;
  };
}

IndexSeries substitute(const IndexSeries& p, const Assignment& assignment,
                       std::uint32_t truncation) {
  const std::uint32_t order = std::min(truncation, p.truncation());

  struct Cached {
    std::optional<IndexSeries> value;
    std::map<std::uint32_t, IndexSeries> powers;
  };
  std::map<VarRef, Cached> cache;
  auto lookup = [&](VarRef v) -> Cached& {
    auto [it, inserted] = cache.try_emplace(v);
    if (inserted) {
      it->second.value = assignment(v);
      if (it->second.value) it->second.value = truncate(*it->second.value, order);
    }
    return it->second;
  };

  auto out = IndexSeries::zero(order);
  for (const auto& [m, coef] : p.terms()) {
    Monomial kept;
    std::vector<const IndexSeries*> factors;
    bool vanishes = false;
    for (const auto& [v, e] : m.factors()) {
      Cached& entry = lookup(v);
      if (!entry.value) {
        kept = kept * Monomial(v, e);
        continue;
      }
      if (entry.value->is_zero()) {
        vanishes = true;
        break;
      }
      auto [pit, fresh] = entry.powers.try_emplace(e);
      if (fresh) pit->second = pow(*entry.value, e, order);
      factors.push_back(&pit->second);
    }
    if (vanishes || kept.grade() > order) continue;
    IndexSeries term(kept, coef, order);
    for (const IndexSeries* f : factors) {
      term = mul(term, *f, order);
      if (term.is_zero()) break;
    }
    out += term;
  }
  return out;
}

IndexSeries partial_derivative(const IndexSeries& p, VarRef v) {
  auto out = IndexSeries::zero(p.truncation());
  const Monomial unit(v);
  for (const auto& [m, coef] : p.terms()) {
    const std::uint32_t e = m.exponent(v);
    if (e == 0) continue;
    out.add_term(m / unit, coef * e);
  }
  return out;
}

IndexSeries divide_exact(const IndexSeries& p, const Monomial& m) {
  auto out = IndexSeries::zero(p.truncation());
  for (const auto& [term, coef] : p.terms()) out.add_term(term / m, coef);
  return out;
}

Rational coefficient(const IndexSeries& p, const Monomial& m) {
  auto it = p.terms().find(m);
  return it == p.terms().end() ? Rational(0) : it->second;
}

// ---------------------------------------------------------- text format

void write_series(std::ostream& os, const IndexSeries& p) {
  os << "index-series v1 trunc "
     << (p.is_exact() ? std::string("exact") : std::to_string(p.truncation())) << '\n';
  for (const auto& [m, coef] : p.terms()) os << to_string(coef) << ' ' << m.to_string() << '\n';
}

IndexSeries read_series(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("empty series text");
  std::istringstream header(line);
  std::string tag, version, trunc_key, trunc_value;
  header >> tag >> version >> trunc_key >> trunc_value;
  if (tag != "index-series" || version != "v1" || trunc_key != "trunc") {
    throw std::invalid_argument("bad series header: '" + line + "'");
  }
  const std::uint32_t order =
      trunc_value == "exact" ? kExact : static_cast<std::uint32_t>(std::stoul(trunc_value));
  auto out = IndexSeries::zero(order);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string coef, mono;
    if (!(row >> coef >> mono)) throw std::invalid_argument("bad series term: '" + line + "'");
    out.add_term(parse_monomial(mono), parse_rational(coef));
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const IndexSeries& p) {
  write_series(os, p);
  return os;
}

}  // namespace walsh
