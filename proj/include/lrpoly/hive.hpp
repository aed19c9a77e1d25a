#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lrpoly/matrix.hpp"
#include "lrpoly/typea.hpp"

namespace lrpoly {

struct HiveBoundary {
  std::size_t k = 0;
  Partition lambda;
  Partition mu;
  Partition nu;

  /// k = max(1, l(λ), l(μ), l(ν)).
  static HiveBoundary fit(const Partition& lambda, const Partition& mu, const Partition& nu);
  bool sums_match() const { return lambda.size() + mu.size() == nu.size(); }
};

/// Triangular array a_ij, 0 <= i, j and i + j <= k.
class Hive {
 public:
  explicit Hive(std::size_t k);

  std::size_t k() const { return k_; }
  long& at(std::size_t i, std::size_t j) { return entries_[index(i, j)]; }
  long at(std::size_t i, std::size_t j) const { return entries_[index(i, j)]; }

 private:
  std::size_t index(std::size_t i, std::size_t j) const;
  std::size_t k_;
  std::vector<long> entries_;
};

/// Boundary entries from (λ, μ, ν); interior entries left at zero. Requires
/// |λ| + |μ| = |ν| for a consistent corner a_k0.
Hive boundary_hive(const HiveBoundary& b);

/// All three rhombus families, integrality aside: entries nonnegative and
/// every (HC) inequality for i + j <= k - 2.
bool satisfies_hive_conditions(const Hive& h);
bool matches_boundary(const Hive& h, const HiveBoundary& b);

/// Number of integral hives with the given boundary (the LR coefficient).
/// Returns 0 at once when |λ| + |μ| != |ν|. Throws std::invalid_argument
/// when a partition has more than k parts.
std::uint64_t hive_count(const HiveBoundary& b);
std::uint64_t hive_count(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Calls visit for every integral hive with the given boundary.
void for_each_hive(const HiveBoundary& b, const std::function<void(const Hive&)>& visit);

/// Linear system E·x = B·(λ, μ, ν) with x = (interior a_ij row-major, slacks).
struct HiveSystem {
  std::size_t k = 0;
  MatrixQ E;
  MatrixQ B;
  std::vector<std::pair<std::size_t, std::size_t>> interior;  // variable order
  std::vector<std::string> inequality_order;                  // e.g. "square(0,1)"
};

/// Rows: square family, then the horizontal parallelogram family
/// a_{i,j+1} + a_{i+1,j+1} >= a_{i+1,j} + a_{i,j+2}, then the vertical family
/// a_{i+1,j} + a_{i+1,j+1} >= a_{i+2,j} + a_{i,j+1}; each row-major in (i, j).
/// Throws std::invalid_argument for k < 2.
HiveSystem build_system(std::size_t k);

/// Nonnegative integer solutions of E·x = B·(λ, μ, ν), by backtracking over
/// the interior variables with the slacks checked last. Returns 0 on a sum
/// mismatch. Throws std::logic_error if B·(λ, μ, ν) is not integral.
std::uint64_t count_via_system(const HiveSystem& s, const Partition& lambda, const Partition& mu,
                               const Partition& nu);

/// {"k", "E", "B", "inequality_order"} with integer entries, row-major.
nlohmann::ordered_json to_json(const HiveSystem& s);

}  // namespace lrpoly
