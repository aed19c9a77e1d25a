#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lrpoly/rational.hpp"

namespace lrpoly {

/// Weakly decreasing sequence of nonnegative integers. Trailing zeros are
/// dropped on construction, so partitions that differ only by zero parts
/// compare equal.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument on negative or increasing parts.
  explicit Partition(std::vector<long> parts);

  /// "2,1,0" format; the empty string is the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<long>& parts() const { return parts_; }
  /// Number of nonzero parts, l(λ).
  std::size_t length() const { return parts_.size(); }
  /// |λ|
  long size() const;
  /// Part i (0-based), zero past the end.
  long operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  /// Parts padded with zeros to length k. Throws std::invalid_argument if l(λ) > k.
  std::vector<long> padded(std::size_t k) const;
  /// Componentwise containment of Young diagrams.
  bool contains(const Partition& inner) const;
  Partition scaled(long factor) const;

  std::string to_string() const;

  bool operator==(const Partition& other) const = default;

 private:
  std::vector<long> parts_;
};

using Weight = std::vector<Rational>;

/// Permutation of {0..k-1} in one-line form: p(i) = image[i].
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `images` is a bijection of {0..k-1}.
  explicit Permutation(std::vector<int> images);
  /// One-line form on {1..k}, as usually written.
  static Permutation from_one_based(const std::vector<int>& images);
  static Permutation identity(std::size_t k);

  std::size_t size() const { return images_.size(); }
  int operator()(std::size_t i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  /// (this ∘ other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const;
  std::size_t inversions() const;
  /// (-1)^inversions
  int sign() const { return inversions() % 2 == 0 ? 1 : -1; }

  bool operator==(const Permutation& other) const = default;
  auto operator<=>(const Permutation& other) const = default;

 private:
  std::vector<int> images_;
};

/// All of S_k in lexicographic order of one-line forms.
std::vector<Permutation> all_permutations(std::size_t k);

/// The action e_i -> e_{p(i)}: result[p(i)] = w[i].
Weight act(const Permutation& p, const Weight& w);
std::vector<long> act(const Permutation& p, const std::vector<long>& w);

Rational pairing(const Weight& a, const Weight& b);

/// Root data of sl_k in standard e_i coordinates.
struct RootSystemData {
  std::size_t k = 0;
  std::vector<Weight> simple_roots;          // α_i = e_i - e_{i+1}
  std::vector<Weight> positive_roots;        // e_i - e_j, i < j, ordered by (i, j)
  std::vector<Weight> fundamental_weights;   // ω_1 .. ω_{k-1}
  Weight delta;                              // half the sum of positive roots
};

/// Throws std::invalid_argument for k < 2.
RootSystemData build_root_system(std::size_t k);

/// λ - (|λ|/k)·(1,…,1). Throws std::invalid_argument if l(λ) > k.
Weight bar(const Partition& lambda, std::size_t k);

/// Union of the S_k-orbits of the fundamental weights, sorted and deduplicated.
std::vector<Weight> conjugates_of_fundamental_weights(std::size_t k);

/// Coordinates of a sum-zero weight in the simple-root basis: v_i = w_1 + … + w_i.
std::vector<Rational> to_simple_root_coords(const Weight& w);
/// Inverse of to_simple_root_coords.
Weight from_simple_root_coords(const std::vector<Rational>& v);

std::string to_string(const Weight& w);

}  // namespace lrpoly
