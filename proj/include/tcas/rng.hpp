#pragma once

#include <cstdint>
#include <random>

#include "tcas/rational.hpp"

namespace tcas {

/// Seeded source of small integer test values.
///
/// Uses std::minstd_rand (Park-Miller, multiplier 48271, modulus 2^31 - 1).
/// A seed of 0 is mapped to 1 since the generator has no zero state. Values
/// are drawn as lo + (x mod (hi - lo + 1)); the slight modulo bias is
/// irrelevant for test data, and the sequence is identical on every platform.
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed);

  int uniform(int lo, int hi);
  /// Integer in [-3, 3].
  Rational small_value() { return uniform(-3, 3); }

 private:
  std::minstd_rand engine_;
};

}  // namespace tcas
