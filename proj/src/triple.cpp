#include "lrpoly/triple.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrpoly {

std::size_t Triple::length() const { return std::max({lambda.length(), mu.length(), nu.length()}); }

std::vector<long> Triple::coordinates(std::size_t k) const {
  std::vector<long> out;
  for (const auto* p : {&lambda, &mu, &nu}) {
    const auto parts = p->padded(k);
    out.insert(out.end(), parts.begin(), parts.end());
  }
  return out;
}

Triple Triple::from_coordinates(std::span<const long> coords, std::size_t k) {
  if (coords.size() != 3 * k) throw std::invalid_argument("triple coordinates must have length 3k");
  const auto block = [&](std::size_t b) {
    return Partition(std::vector<long>(coords.begin() + static_cast<std::ptrdiff_t>(b * k),
                                       coords.begin() + static_cast<std::ptrdiff_t>((b + 1) * k)));
  };
  return {block(0), block(1), block(2)};
}

std::string Triple::to_string() const {
  return "(" + lambda.to_string() + " | " + mu.to_string() + " | " + nu.to_string() + ")";
}

std::vector<std::string> triple_variable_names(std::size_t k) {
  std::vector<std::string> names;
  for (const char* block : {"λ", "μ", "ν"})
    for (std::size_t i = 1; i <= k; ++i) names.push_back(block + std::to_string(i));
  return names;
}

std::vector<std::string> free_variable_names(std::size_t k) {
  auto names = triple_variable_names(k);
  names.erase(names.begin() + static_cast<std::ptrdiff_t>(2 * k - 1));
  return names;
}

std::vector<Rational> free_coordinates(std::span<const long> coords, std::size_t k) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (i != 2 * k - 1) out.emplace_back(coords[i]);
  return out;
}

MultiPolyQ reduce_on_sum_hyperplane(const MultiPolyQ& p, std::size_t k) {
  const auto names = triple_variable_names(k);
  std::vector<MultiPolyQ> replacements;
  for (std::size_t i = 0; i < 3 * k; ++i) replacements.push_back(MultiPolyQ::variable(names, i));
  MultiPolyQ mu_last(names);
  for (std::size_t i = 0; i < 3 * k; ++i) {
    Exponents e(3 * k, 0);
    e[i] = 1;
    if (i < k) mu_last.add_term(e, -1);
    if (i >= k && i < 2 * k - 1) mu_last.add_term(e, -1);
    if (i >= 2 * k) mu_last.add_term(e, 1);
  }
  replacements[2 * k - 1] = mu_last;
  return p.substitute(replacements);
}

MultiPolyQ embed_free_polynomial(const MultiPolyQ& p, std::size_t k) {
  std::vector<std::size_t> mapping;
  for (std::size_t i = 0; i < 3 * k; ++i)
    if (i != 2 * k - 1) mapping.push_back(i);
  return p.rename(triple_variable_names(k), mapping);
}

MultiPolyQ swap_lambda_mu(const MultiPolyQ& p, std::size_t k) {
  std::vector<std::size_t> mapping(3 * k);
  for (std::size_t i = 0; i < 3 * k; ++i) mapping[i] = i < k ? i + k : (i < 2 * k ? i - k : i);
  return p.rename(triple_variable_names(k), mapping);
}

}  // namespace lrpoly
