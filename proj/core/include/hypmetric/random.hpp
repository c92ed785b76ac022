#pragma once

#include <cstdint>
#include <random>

#include "hypmetric/point.hpp"

namespace hypmetric {

/// Seeded generator used by every randomized routine. Streams derived with
/// `Rng::stream` are independent of scheduling, so parallel workers that each
/// own a stream reproduce a serial run exactly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// splitmix64 mix of (seed, index).
  static std::uint64_t stream(std::uint64_t seed, std::uint64_t index);

  double uniform() { return unit_(engine_); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit_(engine_); }
  double normal() { return normal_(engine_); }

  /// Uniformly distributed direction on S^{dim-1}.
  Point unit_vector(std::size_t dim);

 private:
  std::mt19937_64 engine_;
  std::uniform_real_distribution<double> unit_{0.0, 1.0};
  std::normal_distribution<double> normal_{0.0, 1.0};
};

inline std::uint64_t Rng::stream(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline Point Rng::unit_vector(std::size_t dim) {
  Point v(dim);
  double n2 = 0.0;
  while (n2 < 1e-24) {
    for (std::size_t i = 0; i < dim; ++i) v[i] = normal();
    n2 = squared_norm(v);
  }
  return v * (1.0 / std::sqrt(n2));
}

}  // namespace hypmetric
