#pragma once

#include <cstdint>
#include <random>

namespace randext::numeric {

/// Seedable uniform stream. The (seed, stream_id) pair fully determines the
/// sequence; distinct stream ids give independent-quality streams. Not thread
/// safe; give each concurrent task its own stream id.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed = 0, std::uint64_t stream_id = 0)
      : seed_(seed), stream_id_(stream_id), engine_(make_engine(seed, stream_id)) {}

  /// Uniform on [0,1) with 53-bit resolution.
  double next_uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on (0,1]; safe to take the logarithm of.
  double next_uniform_positive() { return 1.0 - next_uniform(); }

  [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }
  [[nodiscard]] std::uint64_t stream_id() const noexcept { return stream_id_; }

 private:
  static std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream_id) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream_id), static_cast<std::uint32_t>(stream_id >> 32)};
    return std::mt19937_64(seq);
  }

  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
};

/// Free-function spelling of RandomSource::next_uniform.
inline double next_uniform(RandomSource& src) { return src.next_uniform(); }

}  // namespace randext::numeric
