#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace polyiso {

/// Seeded deterministic stream. Independent sub-streams are derived from the
/// same seed by hashing a domain-separation tag into the seed sequence.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::string_view tag = "");

  std::uint64_t seed() const noexcept { return seed_; }
  /// A new stream for (seed, tag); does not advance this one.
  Rng substream(std::string_view tag) const { return Rng(seed_, tag); }

  std::uint64_t next() { return engine_(); }
  /// Unbiased bit.
  int bit() { return static_cast<int>(engine_() >> 63); }
  /// Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view s);

}  // namespace polyiso
