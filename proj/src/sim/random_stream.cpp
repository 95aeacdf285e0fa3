#include "locate/sim/random_stream.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace locate::sim {

double RandomStream::unit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform(double lo, double hi) {
  if (!(lo <= hi)) {
    throw std::invalid_argument("uniform: lo (" + std::to_string(lo) + ") > hi (" +
                                std::to_string(hi) + ")");
  }
  if (lo == hi) {
    return lo;
  }
  const double v = lo + (hi - lo) * unit();
  // Rounding in lo + w*u can land exactly on hi for large lo.
  return v < hi ? v : std::nextafter(hi, lo);
}

bool RandomStream::bernoulli(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("bernoulli: p = " + std::to_string(p) + " outside [0, 1]");
  }
  return unit() < p;
}

std::size_t RandomStream::index(std::size_t bound) {
  if (bound == 0) {
    throw std::invalid_argument("index: bound must be positive");
  }
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = engine_();
  while (x >= limit) {
    x = engine_();
  }
  return static_cast<std::size_t>(x % bound);
}

}  // namespace locate::sim
