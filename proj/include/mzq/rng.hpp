#ifndef MZQ_RNG_HPP
#define MZQ_RNG_HPP

#include <cstdint>

namespace mzq {

// SplitMix64. The exact update is part of the reproducibility contract for
// seeded ensembles (see README): seeds map to identical streams on every
// platform.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0, 1), 53 random bits.
  double next_double() {
    return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0);
  }

  // Uniform on [-1, 1).
  double next_symmetric() { return 2.0 * next_double() - 1.0; }

private:
  std::uint64_t state_;
};

} // namespace mzq

#endif
