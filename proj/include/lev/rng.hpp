#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace lev {

// Deterministic samplers on top of mt19937_64. The standard distributions
// are implementation-defined, so the few draws we need are spelled out here
// to keep traces byte-identical across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Knuth's product method; adequate for the small means used here.
  long poisson(double mean) {
    if (mean <= 0.0) return 0;
    const double limit = std::exp(-mean);
    long count = -1;
    double product = 1.0;
    do {
      ++count;
      product *= uniform();
    } while (product > limit);
    return count;
  }

  // Standard normal via Box-Muller (one draw per call, partner discarded).
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  // Lognormal with the requested mean and coefficient of variation.
  double lognormal_mean_cv(double mean, double cv) {
    if (cv <= 0.0) return mean;
    const double sigma2 = std::log(1.0 + cv * cv);
    const double mu = std::log(mean) - 0.5 * sigma2;
    return std::exp(mu + std::sqrt(sigma2) * normal());
  }

 private:
  std::mt19937_64 engine_;
};

// splitmix64, used to derive independent substreams from one base seed.
inline std::uint64_t mix_seed(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t substream_seed(std::uint64_t base,
                                    std::uint64_t stream_id) {
  return mix_seed(base ^ mix_seed(stream_id));
}

}  // namespace lev
