#ifndef FLEETBOUND_RANDOM_H_
#define FLEETBOUND_RANDOM_H_

#include <cstdint>

namespace fleetbound {

// 64-bit linear congruential generator with Knuth's MMIX constants
//   state' = 6364136223846793005 * state + 1442695040888963407 (mod 2^64).
// Fully specified here so that seeded sequences reproduce on every platform;
// std:: distributions are implementation-defined and are not used.
class Lcg64 {
 public:
  static constexpr uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr uint64_t kIncrement = 1442695040888963407ULL;

  explicit Lcg64(uint64_t seed) : state_(seed) {}

  uint64_t Next() {
    state_ = state_ * kMultiplier + kIncrement;
    return state_;
  }

  // Uniform in [lo, hi] by multiply-shift on the full 64-bit output, which
  // keys off the high (well-mixed) bits. Requires lo <= hi.
  int64_t Uniform(int64_t lo, int64_t hi) {
    const unsigned __int128 span =
        static_cast<unsigned __int128>(static_cast<uint64_t>(hi - lo)) + 1;
    const unsigned __int128 scaled = span * Next();
    return lo + static_cast<int64_t>(static_cast<uint64_t>(scaled >> 64));
  }

 private:
  uint64_t state_;
};

}  // namespace fleetbound

#endif  // FLEETBOUND_RANDOM_H_
