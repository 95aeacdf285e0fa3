#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace locate::sim {

// Seeded generator whose draws depend only on the seed and call order.
// Real-valued draws are built from the top 53 bits of mt19937_64, which is
// bit-specified by the standard, so sequences agree across toolchains.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1).
  double unit();

  /// Uniform on [lo, hi); returns lo when lo == hi. Throws on lo > hi.
  double uniform(double lo, double hi);

  /// True with probability p. Throws when p is outside [0, 1].
  bool bernoulli(double p);

  /// Uniform integer in [0, bound). bound must be positive.
  std::size_t index(std::size_t bound);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Per-run seed for Monte Carlo replication.
constexpr std::uint64_t run_seed(std::uint64_t base_seed, std::uint64_t run_index) {
  return base_seed ^ run_index;
}

}  // namespace locate::sim
