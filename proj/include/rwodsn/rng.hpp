// Deterministic, platform-independent random streams.
//
// Every randomized operation in the library draws from an Rng seeded
// explicitly; per-point streams are derived from (global seed, point index)
// so parallel schedules cannot change results.
#pragma once

#include <cstdint>
#include <cmath>

namespace rwodsn {

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}
}  // namespace detail

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {
    // Burn-in so that small seeds diverge immediately.
    detail::splitmix64(state_);
  }

  // Stream for one point: mixes the index into the global seed.
  static Rng for_point(std::uint64_t global_seed, std::uint64_t point_index) {
    std::uint64_t s = global_seed;
    std::uint64_t a = detail::splitmix64(s);
    std::uint64_t b = point_index + 0x9E3779B97F4A7C15ULL;
    detail::splitmix64(b);
    return Rng(a ^ (b * 0xD1342543DE82EF95ULL + 1ULL));
  }

  std::uint64_t next() { return detail::splitmix64(state_); }

  // Uniform integer in [0, n), unbiased (rejection on the tail).
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t threshold = (0ULL - n) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller; avoids std::normal_distribution, whose
  // output differs across standard libraries.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace rwodsn
