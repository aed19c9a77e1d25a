#include "lrpoly/lr.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "lrpoly/hive.hpp"
#include "lrpoly/steinberg.hpp"
#include "lrpoly/tableaux.hpp"

namespace lrpoly {

std::string method_name(Method m) {
  switch (m) {
    case Method::hive: return "hive";
    case Method::steinberg: return "steinberg";
    case Method::tableaux: return "tableaux";
    case Method::system: return "system";
  }
  throw std::logic_error("unknown method");
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : kAllMethods)
    if (method_name(m) == name) return m;
  return std::nullopt;
}

namespace {

const HiveSystem& cached_system(std::size_t k) {
  static std::map<std::size_t, HiveSystem> cache;
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, build_system(k)).first;
  return it->second;
}

}  // namespace

std::uint64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu, Method method) {
  if (lambda.size() + mu.size() != nu.size()) return 0;
  const std::size_t k = std::max<std::size_t>({2, lambda.length(), mu.length(), nu.length()});
  switch (method) {
    case Method::hive: return hive_count(lambda, mu, nu);
    case Method::tableaux: return lr_rule_count(lambda, mu, nu);
    case Method::system: return count_via_system(cached_system(k), lambda, mu, nu);
    case Method::steinberg: {
      const auto c = steinberg_count(lambda, mu, nu, k);
      if (c < 0) throw std::logic_error("negative Steinberg sum");
      return static_cast<std::uint64_t>(c);
    }
  }
  throw std::logic_error("unknown method");
}

}  // namespace lrpoly
