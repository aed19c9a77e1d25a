#include "lrpoly/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "lrpoly/matrix.hpp"

namespace lrpoly {

// ---------------------------------------------------------------- UniPolyQ

UniPolyQ::UniPolyQ(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void UniPolyQ::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational UniPolyQ::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational UniPolyQ::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPolyQ UniPolyQ::operator+(const UniPolyQ& other) const {
  std::vector<Rational> out(std::max(coeffs_.size(), other.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
  return UniPolyQ(std::move(out));
}

UniPolyQ UniPolyQ::operator*(const UniPolyQ& other) const {
  if (is_zero() || other.is_zero()) return {};
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  return UniPolyQ(std::move(out));
}

UniPolyQ UniPolyQ::operator*(const Rational& scalar) const {
  std::vector<Rational> out = coeffs_;
  for (auto& c : out) c *= scalar;
  return UniPolyQ(std::move(out));
}

namespace {

// Appends "c*m" with a sign separator; `first` controls the leading sign form.
void append_term(std::string& out, const Rational& c, const std::string& monomial, bool first,
                 const std::string& plus, const std::string& minus) {
  const bool negative = sgn(c) < 0;
  const Rational mag = abs(c);
  if (first) {
    if (negative) out += "-";
  } else {
    out += negative ? minus : plus;
  }
  if (monomial.empty()) {
    out += to_string(mag);
  } else if (mag == 1) {
    out += monomial;
  } else {
    out += to_string(mag) + "*" + monomial;
  }
}

}  // namespace

std::string UniPolyQ::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t p = coeffs_.size(); p-- > 0;) {
    if (sgn(coeffs_[p]) == 0) continue;
    std::string mono;
    if (p == 1) mono = var;
    if (p > 1) mono = var + "^" + std::to_string(p);
    append_term(out, coeffs_[p], mono, first, "+", "-");
    first = false;
  }
  return out;
}

UniPolyQ interpolate_univariate(std::span<const std::pair<Rational, Rational>> points) {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first)
        throw std::invalid_argument("interpolate_univariate: duplicate abscissa " +
                                    lrpoly::to_string(points[i].first));

  UniPolyQ result;
  for (std::size_t i = 0; i < points.size(); ++i) {
    UniPolyQ basis(std::vector<Rational>{Rational(1)});
    Rational denom = 1;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      basis = basis * UniPolyQ(std::vector<Rational>{-points[j].first, Rational(1)});
      denom *= points[i].first - points[j].first;
    }
    result = result + basis * Rational(points[i].second / denom);
  }
  return result;
}

// ---------------------------------------------------------------- MultiPolyQ

MultiPolyQ::MultiPolyQ(std::vector<std::string> variables) : vars_(std::move(variables)) {}

MultiPolyQ MultiPolyQ::constant(std::vector<std::string> variables, const Rational& c) {
  MultiPolyQ p(std::move(variables));
  p.add_term(Exponents(p.vars_.size(), 0), c);
  return p;
}

MultiPolyQ MultiPolyQ::variable(std::vector<std::string> variables, std::size_t index) {
  MultiPolyQ p(std::move(variables));
  if (index >= p.vars_.size()) throw std::out_of_range("MultiPolyQ::variable: index out of range");
  Exponents e(p.vars_.size(), 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

void MultiPolyQ::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != vars_.size()) throw std::invalid_argument("exponent length != variable count");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational MultiPolyQ::coefficient(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPolyQ::total_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_)
    deg = std::max(deg, static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)));
  return deg;
}

Rational MultiPolyQ::evaluate(std::span<const Rational> point) const {
  if (point.size() != vars_.size()) throw std::invalid_argument("evaluate: point length != variable count");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned p = 0; p < e[i]; ++p) term *= point[i];
    acc += term;
  }
  return acc;
}

Rational MultiPolyQ::evaluate(std::span<const long> point) const {
  const auto q = to_rationals(point);
  return evaluate(std::span<const Rational>(q));
}

void MultiPolyQ::check_same_variables(const MultiPolyQ& other) const {
  if (vars_ != other.vars_) throw std::invalid_argument("polynomials over different variable lists");
}

MultiPolyQ& MultiPolyQ::operator+=(const MultiPolyQ& other) {
  check_same_variables(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPolyQ MultiPolyQ::operator+(const MultiPolyQ& other) const {
  MultiPolyQ out = *this;
  out += other;
  return out;
}

MultiPolyQ MultiPolyQ::operator-(const MultiPolyQ& other) const { return *this + other * Rational(-1); }

MultiPolyQ MultiPolyQ::operator*(const MultiPolyQ& other) const {
  check_same_variables(other);
  MultiPolyQ out(vars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : other.terms_) {
      Exponents e(e1.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      out.add_term(e, c1 * c2);
    }
  return out;
}

MultiPolyQ MultiPolyQ::operator*(const Rational& scalar) const {
  MultiPolyQ out(vars_);
  for (const auto& [e, c] : terms_) out.add_term(e, c * scalar);
  return out;
}

MultiPolyQ MultiPolyQ::substitute(const std::vector<MultiPolyQ>& replacements) const {
  if (replacements.size() != vars_.size()) throw std::invalid_argument("substitute: wrong replacement count");
  if (replacements.empty()) return *this;
  const auto& target_vars = replacements.front().variables();
  for (const auto& r : replacements)
    if (r.variables() != target_vars) throw std::invalid_argument("substitute: mixed variable lists");

  MultiPolyQ out(target_vars);
  for (const auto& [e, c] : terms_) {
    MultiPolyQ term = constant(target_vars, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned p = 0; p < e[i]; ++p) term = term * replacements[i];
    out += term;
  }
  return out;
}

MultiPolyQ MultiPolyQ::rename(std::vector<std::string> new_variables, std::span<const std::size_t> mapping) const {
  if (mapping.size() != vars_.size()) throw std::invalid_argument("rename: mapping length != variable count");
  MultiPolyQ out(std::move(new_variables));
  for (const auto& [e, c] : terms_) {
    Exponents ne(out.vars_.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (mapping[i] >= ne.size()) throw std::out_of_range("rename: mapping index out of range");
      ne[mapping[i]] += e[i];
    }
    out.add_term(ne, c);
  }
  return out;
}

std::string MultiPolyQ::monomial_string(const Exponents& e) const {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars_[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

bool graded_lex_less(const Exponents& a, const Exponents& b) {
  const unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  const unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da < db;
  return a > b;
}

}  // namespace

std::string MultiPolyQ::to_string() const {
  if (is_zero()) return "0";
  std::vector<Exponents> keys;
  for (const auto& [e, c] : terms_) keys.push_back(e);
  std::sort(keys.begin(), keys.end(), graded_lex_less);
  std::string out;
  bool first = true;
  for (const auto& e : keys) {
    const std::string mono = monomial_string(e);
    append_term(out, terms_.at(e), mono == "1" ? std::string() : mono, first, " + ", " - ");
    first = false;
  }
  return out;
}

std::vector<std::string> default_variable_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

std::vector<Exponents> graded_lex_monomials(std::size_t num_variables, unsigned max_degree) {
  std::vector<Exponents> out;
  for (unsigned d = 0; d <= max_degree; ++d) {
    // Lexicographically descending compositions of d into num_variables parts.
    Exponents e(num_variables, 0);
    auto rec = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
      if (pos + 1 >= num_variables) {
        if (num_variables == 0) {
          if (remaining == 0) out.push_back(e);
          return;
        }
        e[pos] = remaining;
        out.push_back(e);
        e[pos] = 0;
        return;
      }
      for (unsigned v = remaining + 1; v-- > 0;) {
        e[pos] = v;
        self(self, pos + 1, remaining - v);
      }
      e[pos] = 0;
    };
    rec(rec, 0, d);
  }
  return out;
}

std::optional<MultiPolyQ> fit_poly_monomials(std::span<const FitSample> samples, std::vector<std::string> variables,
                                             std::span<const Exponents> monomials) {
  if (samples.size() < monomials.size())
    throw UnderdeterminedFit("fit_poly: " + std::to_string(samples.size()) + " samples for " +
                             std::to_string(monomials.size()) + " monomials");

  MatrixQ design(samples.size(), monomials.size());
  std::vector<Rational> values;
  values.reserve(samples.size());
  for (std::size_t s = 0; s < samples.size(); ++s) {
    if (samples[s].point.size() != variables.size())
      throw std::invalid_argument("fit_poly: sample dimension != variable count");
    for (std::size_t m = 0; m < monomials.size(); ++m) {
      Rational v = 1;
      for (std::size_t i = 0; i < variables.size(); ++i)
        for (unsigned p = 0; p < monomials[m][i]; ++p) v *= samples[s].point[i];
      design(s, m) = v;
    }
    values.push_back(samples[s].value);
  }

  const RrefResult red = rref(design.augment(values));
  if (!red.pivots.empty() && red.pivots.back() == monomials.size()) return std::nullopt;
  if (red.rank < monomials.size())
    throw UnderdeterminedFit("fit_poly: design matrix has rank " + std::to_string(red.rank) + " < " +
                             std::to_string(monomials.size()) + " monomials");

  MultiPolyQ poly(std::move(variables));
  for (std::size_t i = 0; i < red.rank; ++i) poly.add_term(monomials[red.pivots[i]], red.reduced(i, monomials.size()));
  return poly;
}

std::optional<MultiPolyQ> fit_poly(std::span<const FitSample> samples, std::size_t num_variables,
                                   unsigned max_degree) {
  return fit_poly(samples, default_variable_names(num_variables), max_degree);
}

std::optional<MultiPolyQ> fit_poly(std::span<const FitSample> samples, std::vector<std::string> variables,
                                   unsigned max_degree) {
  const auto monomials = graded_lex_monomials(variables.size(), max_degree);
  return fit_poly_monomials(samples, std::move(variables), monomials);
}

}  // namespace lrpoly
