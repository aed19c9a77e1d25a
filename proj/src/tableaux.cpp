#include "lrpoly/tableaux.hpp"

#include <algorithm>
#include <vector>

namespace lrpoly {

namespace {

// Cells are filled row by row, each row right to left, which is exactly the
// reverse reading order; the lattice condition is then a prefix check.
class SkewFiller {
 public:
  SkewFiller(const Partition& lambda, const Partition& mu, const Partition& nu)
      : lambda_(lambda), mu_(mu), nu_(nu), content_(mu.length() + 1, 0) {
    for (std::size_t r = 0; r < nu.length(); ++r) {
      filling_.emplace_back(static_cast<std::size_t>(nu[r]), 0);
      for (long c = nu[r]; c-- > lambda[r];) cells_.emplace_back(r, static_cast<std::size_t>(c));
    }
  }

  std::uint64_t count() { return fill(0); }

 private:
  std::uint64_t fill(std::size_t t) {
    if (t == cells_.size()) return 1;
    const auto [r, c] = cells_[t];
    const int max_value = static_cast<int>(mu_.length());
    int lo = 1;
    int hi = max_value;
    // Row weakly increases: the cell to the right (already filled) bounds from above.
    if (c + 1 < static_cast<std::size_t>(nu_[r])) hi = std::min(hi, filling_[r][c + 1]);
    // Column strictly increases: the cell above, if it is in the skew shape.
    if (r > 0 && static_cast<long>(c) >= lambda_[r - 1]) lo = std::max(lo, filling_[r - 1][c] + 1);
    std::uint64_t total = 0;
    for (int v = lo; v <= hi; ++v) {
      const auto vi = static_cast<std::size_t>(v);
      if (content_[vi] >= mu_[vi - 1]) continue;
      if (v > 1 && content_[vi] + 1 > content_[vi - 1]) continue;
      ++content_[vi];
      filling_[r][c] = v;
      total += fill(t + 1);
      --content_[vi];
    }
    filling_[r][c] = 0;
    return total;
  }

  const Partition& lambda_;
  const Partition& mu_;
  const Partition& nu_;
  std::vector<std::pair<std::size_t, std::size_t>> cells_;
  std::vector<std::vector<int>> filling_;
  std::vector<long> content_;
};

}  // namespace

std::uint64_t lr_rule_count(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() + mu.size() != nu.size() || !nu.contains(lambda)) return 0;
  return SkewFiller(lambda, mu, nu).count();
}

}  // namespace lrpoly
