#ifndef SATWALK_RNG_HPP
#define SATWALK_RNG_HPP

#include <cstdint>

namespace satwalk {

// Counter-based splittable pseudo-random generator.
//
// Output i of a stream with key k is mix64(k + i*GOLDEN), i.e. splitmix64
// evaluated at a counter; child streams are derived by hashing (key, index).
// Every draw is a pure function of (root seed, split path, counter), so
// results do not depend on scheduling or worker count: give each logical
// unit of work its own split index and the outcome is reproducible no
// matter how the loop is executed.
namespace det {

inline constexpr std::uint64_t golden = 0x9E3779B97F4A7C15ull;

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

} // namespace det

class Rng {
public:
  explicit Rng(std::uint64_t seed)
      : key_(det::mix64(seed + det::golden)), ctr_(0) {}

  // Independent child stream; splitting never disturbs this stream's counter.
  Rng split(std::uint64_t index) const {
    Rng child(0);
    child.key_ = det::mix64(key_ ^ det::mix64(index + 0x1D8E4E27C47D124Full));
    child.ctr_ = 0;
    return child;
  }

  std::uint64_t u64() { return det::mix64(key_ + (++ctr_) * det::golden); }

  // Uniform in [0, bound), bound >= 1. Rejection keeps it exactly uniform.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    std::uint64_t r;
    do {
      r = u64();
    } while (r < threshold);
    return r % bound;
  }

  std::uint32_t trit() { return static_cast<std::uint32_t>(below(3)); }

  bool coin() { return (u64() >> 63) != 0; }

  // Uniform double in [0, 1), 53 random bits.
  double unit() { return static_cast<double>(u64() >> 11) * 0x1.0p-53; }

private:
  std::uint64_t key_;
  std::uint64_t ctr_;
};

} // namespace satwalk

#endif
