#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "lrpoly/polynomial.hpp"
#include "lrpoly/random.hpp"

namespace lrpoly {

using PointK3 = std::array<long, 9>;  // (λ1 λ2 λ3 | μ1 μ2 μ3 | ν1 ν2 ν3)

struct RayK3 {
  std::string name;
  PointK3 coords;
};

struct ConeK3 {
  std::string name;  // "κ1".."κ18"
  std::vector<std::string> generators;
  MultiPolyQ polynomial;  // over triple_variable_names(3)
};

struct ComplexK3 {
  std::vector<RayK3> rays;
  std::vector<ConeK3> cones;

  const RayK3& ray(const std::string& name) const;
  const ConeK3& cone(const std::string& name) const;
};

/// The embedded rays a1…g2 and the 18 maximal cones. Checks on first use that
/// every ray satisfies |λ| + |μ| = |ν| and every polynomial is affine with
/// integer coefficients and constant term 1; throws std::logic_error if not.
const ComplexK3& load_k3();

/// The polynomial in its commonly tabulated form. It differs from the
/// embedded one only for κ13 and κ14 (ν3 in place of ν1).
MultiPolyQ tabulated_k3_polynomial(const std::string& cone);

/// C^(1): λ_i, μ_i <= ν_i and |λ| + |μ| = |ν|.
bool in_containment_cone(const PointK3& p);
/// C^(2): each block weakly decreasing and nonnegative.
bool in_partition_cone(const PointK3& p);

/// Throws std::invalid_argument on |λ| + |μ| != |ν|.
bool membership(const PointK3& p, const ConeK3& cone);
std::vector<std::string> locate(const PointK3& p);

PointK3 generator_sum(const ConeK3& cone);

struct ConeCounterexample {
  PointK3 point;
  std::string cone;  // the cone whose polynomial disagrees
  Rational polynomial_value;
  std::uint64_t hive = 0;
  std::int64_t steinberg = 0;
};

struct ConeVerification {
  std::string cone;
  std::size_t samples = 0;
  bool pass = true;
  std::vector<ConeCounterexample> counterexamples;
};

/// Samples the generator sum and then random combinations with coefficients
/// in 1..5; compares the polynomial of every containing cone with hive_count
/// and steinberg_count.
ConeVerification verify_cone(const ConeK3& cone, std::size_t samples, std::uint64_t seed = Rng::kDefaultSeed);

/// Name of the ray obtained by exchanging the λ and μ blocks.
std::string swap_partner(const RayK3& ray);
/// The cone whose generators are the swapped generators of `cone`.
const ConeK3& swap_partner(const ConeK3& cone);

/// Joint fit of (point, t) ↦ c at t·(p) for p the generator sum of `cone` and
/// p + g for each generator g, t = 1..5: degree <= 1 in the coordinates and
/// <= 3 in t.
struct StableStretchCheck {
  bool fitted = false;
  std::size_t samples = 0;
  std::size_t unknowns = 0;
  MultiPolyQ polynomial;  // variables: free coordinates, then "t"
};
StableStretchCheck check_stable_stretching(const ConeK3& cone);

nlohmann::ordered_json to_json(const ComplexK3& complex);
nlohmann::ordered_json to_json(const ConeVerification& v);

}  // namespace lrpoly
