#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lrpoly/matrix.hpp"
#include "lrpoly/polynomial.hpp"
#include "lrpoly/typea.hpp"

namespace lrpoly {

/// Number of ways to write v (standard coordinates, sum zero) as a
/// nonnegative integer combination of the positive roots e_i - e_j.
/// Throws std::invalid_argument when the coordinates do not sum to zero.
std::uint64_t kostant_count(std::span<const long> v);

/// Weight overload: checks the length against k; a non-integral weight is
/// outside the root lattice and counts 0.
std::uint64_t kostant_count(std::size_t k, const Weight& v);

/// Positive roots of A_n as columns in the simple-root basis, ordered by (i, j).
struct RootMatrix {
  std::size_t n = 0;
  MatrixQ matrix;
};

RootMatrix build_root_matrix(std::size_t n);

struct UnimodularityReport {
  bool unimodular = true;
  /// Column indices (0-based) of a maximal square submatrix with |det| > 1.
  std::optional<std::vector<std::size_t>> witness;
};

/// Exhaustive maximal-minor check. Throws std::invalid_argument when the
/// matrix does not have full row rank.
UnimodularityReport check_unimodular(const MatrixQ& m);

/// Normals of the Kostant chamber walls for A_n, written as linear forms on
/// simple-root coordinates: entry i is <α_i, w> for a conjugate w of a
/// fundamental weight of sl_{n+1}. Both signs of each normal are present.
std::vector<std::vector<Rational>> wall_normals(std::size_t n);

/// Full-dimensional region of the nonnegative orthant cut by every wall
/// hyperplane, with the Kostant polynomial on it. Coordinates are
/// simple-root coordinates and rays are primitive integer vectors.
struct ChamberPoly {
  std::vector<std::vector<long>> generators;
  /// Oriented normals h with h·v > 0 on the interior.
  std::vector<std::vector<long>> inequalities;
  MultiPolyQ polynomial;

  bool contains(std::span<const long> v) const;
  bool contains_interior(std::span<const long> v) const;
};

/// Regions and polynomials for n in {1, 2, 3}. This is a refinement of the
/// chamber complex: every region lies inside one chamber. Throws
/// std::invalid_argument for other n and std::runtime_error if a region's
/// samples are not fitted exactly by a polynomial of degree C(n,2).
std::vector<ChamberPoly> kostant_chambers(std::size_t n);

/// Simple-root coordinates -> standard coordinates with integer entries.
std::vector<long> from_simple_root_coords(std::span<const long> v);

}  // namespace lrpoly
