#pragma once

#include <cmath>
#include <cstdint>

namespace maskpoints {

struct SamplerSeed {
  std::uint64_t seed = 0;
};

/// splitmix64 mixer; used to derive independent per-item seeds from one
/// top-level seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// PCG-XSH-RR 64/32 (pcg32). Fixed algorithm so streams are reproducible
/// bit-for-bit across platforms and languages.
class Pcg32 {
 public:
  explicit Pcg32(std::uint64_t seed, std::uint64_t stream = 0) {
    state_ = 0;
    inc_ = (stream << 1) | 1;
    next_u32();
    state_ += seed;
    next_u32();
  }

  std::uint32_t next_u32() {
    const std::uint64_t old = state_;
    state_ = old * 6364136223846793005ULL + inc_;
    const std::uint32_t xorshifted =
        static_cast<std::uint32_t>(((old >> 18) ^ old) >> 27);
    const std::uint32_t rot = static_cast<std::uint32_t>(old >> 59);
    return (xorshifted >> rot) | (xorshifted << ((32 - rot) & 31));
  }

  /// Unbiased integer in [0, n) by rejection (arc4random_uniform scheme).
  std::uint32_t bounded(std::uint32_t n) {
    if (n < 2) return 0;
    const std::uint32_t min = (-n) % n;
    std::uint32_t r = next_u32();
    while (r < min) r = next_u32();
    return r % n;
  }

  /// Uniform double in [0, 1) with 32-bit resolution.
  double next_double() {
    return static_cast<double>(next_u32()) * 0x1.0p-32;
  }

  /// Standard normal via Box-Muller; consumes exactly two draws per pair.
  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = next_double();
    const double u2 = next_double();
    if (u1 <= 0.0) u1 = 0x1.0p-32;  // log(0) guard
    const double mag = std::sqrt(-2.0 * std::log(u1));
    constexpr double kTwoPi = 6.283185307179586476925286766559;
    spare_ = mag * std::sin(kTwoPi * u2);
    have_spare_ = true;
    return mag * std::cos(kTwoPi * u2);
  }

 private:
  std::uint64_t state_ = 0;
  std::uint64_t inc_ = 1;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace maskpoints
