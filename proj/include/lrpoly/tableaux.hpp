#pragma once

#include <cstdint>

#include "lrpoly/typea.hpp"

namespace lrpoly {

/// c_{λμ}^ν by the Littlewood-Richardson rule: semistandard fillings of ν/λ
/// with content μ whose reverse reading word is a lattice word.
std::uint64_t lr_rule_count(const Partition& lambda, const Partition& mu, const Partition& nu);

}  // namespace lrpoly
