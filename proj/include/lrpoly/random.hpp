#pragma once

#include <cstdint>
#include <random>

namespace lrpoly {

/// Seeded generator with a platform-independent integer mapping
/// (std::uniform_int_distribution is implementation-defined).
class Rng {
 public:
  static constexpr std::uint64_t kDefaultSeed = 20030816;

  explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  /// Uniform-ish integer in [lo, hi]; modulo bias is irrelevant at these ranges.
  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lrpoly
