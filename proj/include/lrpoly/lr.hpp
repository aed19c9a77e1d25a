#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "lrpoly/typea.hpp"

namespace lrpoly {

enum class Method { hive, steinberg, tableaux, system };

inline constexpr std::array<Method, 4> kAllMethods{Method::hive, Method::steinberg, Method::tableaux, Method::system};

std::string method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

/// c_{λμ}^ν by the chosen method, with k = max(2, l(λ), l(μ), l(ν)) where a
/// rank is needed. 0 on a sum mismatch.
std::uint64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu,
                             Method method = Method::hive);

}  // namespace lrpoly
