#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lrpoly/polynomial.hpp"
#include "lrpoly/typea.hpp"

namespace lrpoly {

/// (λ, μ, ν) as one point of Z^{3k}, in blocks λ | μ | ν.
struct Triple {
  Partition lambda;
  Partition mu;
  Partition nu;

  /// max(l(λ), l(μ), l(ν))
  std::size_t length() const;
  bool sums_match() const { return lambda.size() + mu.size() == nu.size(); }
  std::vector<long> coordinates(std::size_t k) const;
  /// Throws std::invalid_argument if a block is not a partition.
  static Triple from_coordinates(std::span<const long> coords, std::size_t k);
  Triple swapped() const { return {mu, lambda, nu}; }
  Triple scaled(long n) const { return {lambda.scaled(n), mu.scaled(n), nu.scaled(n)}; }
  std::string to_string() const;

  bool operator==(const Triple&) const = default;
};

/// "λ1".."λk", "μ1".."μk", "ν1".."νk".
std::vector<std::string> triple_variable_names(std::size_t k);

/// The same list without μk, which is determined by |λ| + |μ| = |ν|.
std::vector<std::string> free_variable_names(std::size_t k);

/// Drops the μk coordinate.
std::vector<Rational> free_coordinates(std::span<const long> coords, std::size_t k);

/// Substitutes μk = |ν| - |λ| - μ1 - … - μ(k-1). Two polynomials agree on the
/// hyperplane |λ| + |μ| = |ν| iff their reductions are equal.
MultiPolyQ reduce_on_sum_hyperplane(const MultiPolyQ& p, std::size_t k);

/// Embeds a polynomial over free_variable_names(k) into triple_variable_names(k).
MultiPolyQ embed_free_polynomial(const MultiPolyQ& p, std::size_t k);

/// Exchanges the λ and μ variable blocks.
MultiPolyQ swap_lambda_mu(const MultiPolyQ& p, std::size_t k);

}  // namespace lrpoly
