#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <json.hpp>

#include "lrpoly/lr.hpp"
#include "lrpoly/polynomial.hpp"
#include "lrpoly/typea.hpp"

namespace lrpoly {

struct VerificationPoint {
  long n = 0;
  Rational expected;  // counted
  Rational got;       // interpolated
};

struct StretchResult {
  UniPolyQ polynomial;
  std::size_t degree_bound = 0;
  std::vector<VerificationPoint> verification;
  Rational value_at_zero;
  bool coefficients_nonnegative = true;
};

/// 3·C(k-1, 2)
std::size_t stretch_degree_bound(std::size_t k);

/// N ↦ c_{Nλ,Nμ}^{Nν}, interpolated at N = 1..D+1 and checked at D+2..D+4.
/// Throws std::runtime_error("polynomiality violated") on a mismatch.
StretchResult stretch_poly(const Partition& lambda, const Partition& mu, const Partition& nu,
                           Method method = Method::hive);

struct KttReport {
  StretchResult stretch;
  bool p0_is_one = false;
  bool coefficients_nonnegative = false;
};

/// Reports P(0) = 1 and coefficient signs. Throws std::domain_error when
/// c_{λμ}^ν = 0.
KttReport check_ktt(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Whether the stretching polynomial is 1 + N(c - 1). Throws
/// std::invalid_argument for more than 3 parts and std::domain_error for c = 0.
bool check_linear_k3(const Partition& lambda, const Partition& mu, const Partition& nu);

nlohmann::ordered_json to_json(const StretchResult& r);
nlohmann::ordered_json to_json(const KttReport& r);

}  // namespace lrpoly
