#pragma once

#include <cstdint>
#include <random>

namespace brt {

// splitmix64 finalizer; used to mix seed components.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Per-replication seed: a fixed splittable hash of (master, a, b) so results
// do not depend on scheduling or worker count.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                 std::uint64_t b) {
  return mix64(mix64(mix64(master) ^ a) ^ b);
}

double normal_quantile(double p);  // defined in densities.cpp (AS241)

// mt19937_64 with explicit bit-to-double mappings. std::*_distribution is
// implementation-defined, so uniforms and normals are produced by hand to
// keep streams identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // strictly inside (0,1)
  double uniform01() {
    const std::uint64_t bits = gen_() >> 11;  // 53 bits
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  double standard_normal() { return normal_quantile(uniform01()); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace brt
