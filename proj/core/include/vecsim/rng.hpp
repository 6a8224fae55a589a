#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>

namespace vecsim {

// Random source with samplers implemented here rather than through
// std::*_distribution, whose output is implementation-defined. Reports must
// be bit-identical for a given (config, seed) regardless of standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n).
  std::uint64_t uniform_index(std::uint64_t n) {
    return static_cast<std::uint64_t>(uniform() * static_cast<double>(n)) % n;
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Exponential with the given mean (inversion method).
  double exponential(double mean) {
    return -mean * std::log1p(-uniform());
  }

  // Poisson by Knuth's product-of-uniforms; fine for the small rates used
  // by the traffic model.
  long poisson(double rate) {
    if (rate <= 0.0) return 0;
    const double limit = std::exp(-rate);
    long count = -1;
    double product = 1.0;
    do {
      product *= uniform();
      ++count;
    } while (product > limit);
    return count;
  }

  // Samples an index from an explicit probability vector (assumed to sum
  // to 1); the final index absorbs any rounding slack.
  int categorical(std::span<const double> probs) {
    double u = uniform();
    for (std::size_t i = 0; i + 1 < probs.size(); ++i) {
      if (u < probs[i]) return static_cast<int>(i);
      u -= probs[i];
    }
    return static_cast<int>(probs.size()) - 1;
  }

 private:
  std::mt19937_64 engine_;
};

// Derives independent substream seeds from a master seed and a stream tag
// (splitmix64 finalizer).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace vecsim
