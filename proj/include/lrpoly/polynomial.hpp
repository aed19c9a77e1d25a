#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lrpoly/rational.hpp"

namespace lrpoly {

/// Polynomial in one variable; coefficient i multiplies x^i.
class UniPolyQ {
 public:
  UniPolyQ() = default;
  explicit UniPolyQ(std::vector<Rational> coefficients);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coefficient(std::size_t power) const;
  Rational operator()(const Rational& x) const;

  UniPolyQ operator+(const UniPolyQ& other) const;
  UniPolyQ operator*(const UniPolyQ& other) const;
  UniPolyQ operator*(const Rational& scalar) const;
  bool operator==(const UniPolyQ& other) const = default;

  /// Highest power first, e.g. "N^2-1/2*N+1"; "0" for the zero polynomial.
  std::string to_string(const std::string& var = "N") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Lagrange interpolation through the given (x, y) pairs. Throws
/// std::invalid_argument on a repeated abscissa.
UniPolyQ interpolate_univariate(std::span<const std::pair<Rational, Rational>> points);

using Exponents = std::vector<unsigned>;

/// Sparse polynomial over a declared list of variables. Zero coefficients are
/// never stored.
class MultiPolyQ {
 public:
  MultiPolyQ() = default;
  explicit MultiPolyQ(std::vector<std::string> variables);

  static MultiPolyQ constant(std::vector<std::string> variables, const Rational& c);
  static MultiPolyQ variable(std::vector<std::string> variables, std::size_t index);

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t num_variables() const { return vars_.size(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c·x^e to the polynomial.
  void add_term(const Exponents& e, const Rational& c);
  Rational coefficient(const Exponents& e) const;
  /// -1 for the zero polynomial.
  int total_degree() const;

  Rational evaluate(std::span<const Rational> point) const;
  Rational evaluate(std::span<const long> point) const;

  MultiPolyQ operator+(const MultiPolyQ& other) const;
  MultiPolyQ operator-(const MultiPolyQ& other) const;
  MultiPolyQ operator*(const MultiPolyQ& other) const;
  MultiPolyQ operator*(const Rational& scalar) const;
  MultiPolyQ& operator+=(const MultiPolyQ& other);
  bool operator==(const MultiPolyQ& other) const = default;

  /// Replaces variable i by replacements[i]; all replacements must share one
  /// variable list, which becomes the variable list of the result.
  MultiPolyQ substitute(const std::vector<MultiPolyQ>& replacements) const;

  /// Same polynomial over a different variable list; `mapping[i]` is the index
  /// of variable i in `new_variables`.
  MultiPolyQ rename(std::vector<std::string> new_variables, std::span<const std::size_t> mapping) const;

  /// Terms in graded lexicographic order, constant first, e.g. "1 + ν2 - ν3".
  std::string to_string() const;
  /// Monomial text such as "λ1*μ2^2"; "1" for the empty monomial.
  std::string monomial_string(const Exponents& e) const;

 private:
  void check_same_variables(const MultiPolyQ& other) const;
  std::vector<std::string> vars_;
  std::map<Exponents, Rational> terms_;
};

/// Names "x1".."xn".
std::vector<std::string> default_variable_names(std::size_t n);

/// All exponent vectors of total degree <= max_degree, graded lexicographic:
/// ascending degree, and within a degree lexicographically descending
/// (x1 > x2 > ... ).
std::vector<Exponents> graded_lex_monomials(std::size_t num_variables, unsigned max_degree);

struct FitSample {
  std::vector<Rational> point;
  Rational value;
};

/// Raised when the samples do not determine the coefficients uniquely.
class UnderdeterminedFit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact fit with the given monomial basis. Returns nullopt when no
/// polynomial in the span matches every sample; throws UnderdeterminedFit
/// when a matching polynomial exists but is not unique (including when there
/// are fewer samples than monomials).
std::optional<MultiPolyQ> fit_poly_monomials(std::span<const FitSample> samples,
                                             std::vector<std::string> variables,
                                             std::span<const Exponents> monomials);

/// Exact fit over all monomials of total degree <= max_degree.
std::optional<MultiPolyQ> fit_poly(std::span<const FitSample> samples, std::size_t num_variables,
                                   unsigned max_degree);
std::optional<MultiPolyQ> fit_poly(std::span<const FitSample> samples, std::vector<std::string> variables,
                                   unsigned max_degree);

}  // namespace lrpoly
