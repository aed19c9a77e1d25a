#include "lrpoly/stretch.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "lrpoly/rational.hpp"

namespace lrpoly {

std::size_t stretch_degree_bound(std::size_t k) {
  if (k < 3) return 0;
  return 3 * (k - 1) * (k - 2) / 2;
}

StretchResult stretch_poly(const Partition& lambda, const Partition& mu, const Partition& nu, Method method) {
  const std::size_t k = std::max({lambda.length(), mu.length(), nu.length()});
  StretchResult r;
  r.degree_bound = stretch_degree_bound(k);
  const long d = static_cast<long>(r.degree_bound);
  const auto count = [&](long n) {
    return Rational(static_cast<unsigned long>(lr_coefficient(lambda.scaled(n), mu.scaled(n), nu.scaled(n), method)));
  };

  std::vector<std::pair<Rational, Rational>> samples;
  for (long n = 1; n <= d + 1; ++n) samples.emplace_back(n, count(n));
  r.polynomial = interpolate_univariate(samples);
  for (long n = d + 2; n <= d + 4; ++n) {
    VerificationPoint v{n, count(n), r.polynomial(Rational(n))};
    const bool ok = v.expected == v.got;
    r.verification.push_back(std::move(v));
    if (!ok) throw std::runtime_error("polynomiality violated");
  }
  if (r.polynomial.degree() > d) throw std::runtime_error("polynomiality violated");
  r.value_at_zero = r.polynomial(Rational(0));
  r.coefficients_nonnegative =
      std::all_of(r.polynomial.coefficients().begin(), r.polynomial.coefficients().end(),
                  [](const Rational& c) { return sgn(c) >= 0; });
  return r;
}

KttReport check_ktt(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lr_coefficient(lambda, mu, nu) == 0) throw std::domain_error("check_ktt: coefficient is zero");
  KttReport report{stretch_poly(lambda, mu, nu), false, false};
  report.p0_is_one = report.stretch.value_at_zero == 1;
  report.coefficients_nonnegative = report.stretch.coefficients_nonnegative;
  return report;
}

bool check_linear_k3(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (std::max({lambda.length(), mu.length(), nu.length()}) > 3)
    throw std::invalid_argument("check_linear_k3: at most 3 parts");
  const auto c = lr_coefficient(lambda, mu, nu);
  if (c == 0) throw std::domain_error("check_linear_k3: coefficient is zero");
  const UniPolyQ expected({Rational(1), Rational(static_cast<long>(c) - 1)});
  return stretch_poly(lambda, mu, nu).polynomial == expected;
}

nlohmann::ordered_json to_json(const StretchResult& r) {
  nlohmann::ordered_json j;
  j["polynomial"] = r.polynomial.to_string();
  auto coeffs = nlohmann::ordered_json::array();
  for (const auto& c : r.polynomial.coefficients()) coeffs.push_back(to_string(c));
  j["coefficients"] = coeffs;
  j["degree"] = r.polynomial.degree();
  j["degree_bound"] = r.degree_bound;
  auto points = nlohmann::ordered_json::array();
  for (const auto& v : r.verification)
    points.push_back({{"N", v.n}, {"expected", to_string(v.expected)}, {"got", to_string(v.got)}});
  j["verification"] = points;
  j["p0"] = to_string(r.value_at_zero);
  j["coefficients_nonnegative"] = r.coefficients_nonnegative;
  return j;
}

nlohmann::ordered_json to_json(const KttReport& r) {
  nlohmann::ordered_json j;
  j["p0_is_one"] = r.p0_is_one;
  j["coefficients_nonnegative"] = r.coefficients_nonnegative;
  j["stretch"] = to_json(r.stretch);
  return j;
}

}  // namespace lrpoly
