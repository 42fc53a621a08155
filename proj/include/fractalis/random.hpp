#pragma once

#include <cstdint>
#include <random>

namespace fractalis {

/// Seeded generator with a platform-independent stream.
///
/// Built on std::mt19937_64, whose output sequence is fixed by the C++
/// standard; the variate transforms below are implemented here rather than
/// taken from <random> distributions, whose algorithms are unspecified.
class Rng {
public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on the open interval (0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal (Marsaglia polar method).
  double normal();
  /// Unit-mean exponential.
  double exponential();

  /// Independent child stream; advances this generator by one draw.
  Rng split();

private:
  std::mt19937_64 engine_;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace fractalis
