#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace cnav {

// Seeded random stream. All draws are derived from raw mt19937_64 output so
// that sequences are identical across standard library implementations
// (std::uniform_real_distribution makes no such guarantee).
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : s_(splitmix(seed)) {
    // mt19937_64-free implementation: xoshiro-style splitmix chain would be
    // enough, but a full-period generator is safer for long training runs.
    state_[0] = next_seed();
    state_[1] = next_seed();
    state_[2] = next_seed();
    state_[3] = next_seed();
  }

  // xoshiro256++ core.
  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform integer in [0, n).
  std::uint64_t uniform_int(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("uniform_int: n must be positive");
    // Rejection to avoid modulo bias.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x = next_u64();
    while (x >= limit) x = next_u64();
    return x % n;
  }

  // Categorical draw from a probability vector (entries sum to ~1).
  int categorical(std::span<const double> probs) {
    const double u = uniform01();
    double acc = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
      acc += probs[i];
      if (u < acc) return static_cast<int>(i);
    }
    return static_cast<int>(probs.size()) - 1;  // rounding leftover
  }

  // Derive an independent child stream (for per-worker / per-episode seeding).
  RngStream fork(std::uint64_t salt) {
    return RngStream(next_u64() ^ splitmix(salt));
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  static std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }
  std::uint64_t next_seed() {
    s_ = splitmix(s_);
    return s_;
  }

  std::uint64_t s_;
  std::uint64_t state_[4];
};

}  // namespace cnav
