#pragma once

#include <cstdint>
#include <random>

namespace qgan {

/** Seeded uniform generator with a fixed bit-to-double mapping, so streams
 *  are reproducible independent of the standard library's distribution
 *  implementations. */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_bits() { return eng_(); }

  /// Uniform double in [lo, hi), using the top 53 bits of the engine output.
  double uniform(double lo, double hi) {
    const double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace qgan
