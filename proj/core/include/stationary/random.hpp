#pragma once

#include <cstdint>
#include <random>

namespace stationary {

/// Seeded generator used by the simulator and the fixture generators.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Conversions to doubles and bounded integers are done here rather
/// than through <random> distributions, whose algorithms are
/// implementation-defined, so streams are bit-reproducible across platforms.
class Rng {
public:
  explicit Rng(std::uint64_t seed);
  /// Independent stream for (seed, stream) via std::seed_seq.
  Rng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1), 53 random bits.
  double uniform();
  /// Uniform on (0, 1].
  double uniform_open_zero();
  /// Uniform integer in [0, bound), bound > 0, unbiased by rejection.
  std::uint64_t below(std::uint64_t bound);

private:
  std::mt19937_64 engine_;
};

}  // namespace stationary
