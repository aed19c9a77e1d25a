#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lrpoly/polynomial.hpp"
#include "lrpoly/triple.hpp"
#include "lrpoly/typea.hpp"

namespace lrpoly {

/// Σ_σ Σ_τ (-1)^{inv(στ)} K(σ(λ+δ) + τ(μ+δ) - (ν+2δ)) over S_k × S_k.
/// Returns 0 when |λ| + |μ| != |ν|. Throws std::invalid_argument when a
/// partition has more than k parts.
std::int64_t steinberg_count(const Partition& lambda, const Partition& mu, const Partition& nu, std::size_t k);

/// The same sum evaluated with the sl_k weights λ̄, μ̄, ν̄ in exact rationals.
std::int64_t steinberg_count_barred(const Partition& lambda, const Partition& mu, const Partition& nu,
                                    std::size_t k);

/// <σ(λ)+τ(μ)-ν, θ(ω_j)> = <2δ-σ(δ)-τ(δ), θ(ω_j)>, as a linear form on the
/// 3k coordinates (λ | μ | ν) and a right-hand side. `j` is 1-based.
struct SteinbergHyperplane {
  Permutation sigma;
  Permutation tau;
  Permutation theta;
  std::size_t j = 0;
  std::vector<Rational> normal;
  Rational shift;
};

/// Unscaled hyperplane for one (σ, τ, θ, j). The normal is orthogonal to
/// (1…1 | 1…1 | -1…-1), so it is already a canonical representative on the
/// subspace |λ| + |μ| = |ν|.
SteinbergHyperplane steinberg_hyperplane(const Permutation& sigma, const Permutation& tau,
                                         const Permutation& theta, std::size_t j);

/// All hyperplanes for 1 <= j <= k-1 and σ, τ, θ in S_k, deduplicated after
/// scaling each to a primitive integer normal whose first nonzero entry is
/// positive. The first tuple in lexicographic order represents each class.
std::vector<SteinbergHyperplane> enumerate_hyperplanes(std::size_t k);

/// <2δ - σ(δ) - τ(δ), θ(ω_j)>
Rational delta_shift(const Permutation& sigma, const Permutation& tau, const Permutation& theta, std::size_t j);
/// max |δ-shift| over all tuples.
Rational max_delta_shift(std::size_t k);

/// Signs of <σ(λ+δ)+τ(μ+δ)-(ν+2δ), w> for (σ, τ) in lexicographic order and
/// w over conjugates_of_fundamental_weights(k) in sorted order.
struct TypeSignature {
  std::size_t k = 0;
  std::size_t normals = 0;
  std::vector<signed char> signs;

  int at(std::size_t sigma_index, std::size_t tau_index, std::size_t normal_index) const;
  /// 64-bit FNV-1a of the sign string, as 16 hex digits.
  std::string digest() const;
  bool operator==(const TypeSignature&) const = default;
};

bool is_generic(const Partition& lambda, const Partition& mu, const Partition& nu, std::size_t k);

/// Throws std::domain_error when the triple is not generic.
TypeSignature type_signature(const Partition& lambda, const Partition& mu, const Partition& nu, std::size_t k);

struct RegionFit {
  /// Over triple_variable_names(k), with no μk terms.
  MultiPolyQ polynomial;
  bool verified = false;
  std::vector<Triple> samples;
  std::size_t fit_points = 0;
  std::size_t held_out = 0;
};

/// Collects `sample_count` lattice triples with the seed's type signature by
/// breadth-first search over unit moves, fits a polynomial of degree
/// <= C(k-1, 2) on part of them and checks the rest against hive_count.
/// Throws std::domain_error for a non-generic seed and std::runtime_error
/// when the region yields too few samples.
RegionFit verify_region_polynomial(const Triple& seed, std::size_t k, std::size_t sample_count);

/// The type polynomial Σ ± p_{v_στ}(σ(λ+δ)+τ(μ+δ)-(ν+2δ)) assembled from the
/// Kostant chamber polynomials, for 2 <= k <= 4 and a generic triple.
MultiPolyQ assemble_type_polynomial(const Triple& t, std::size_t k);

}  // namespace lrpoly
