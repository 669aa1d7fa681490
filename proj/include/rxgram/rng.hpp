#pragma once

#include <cstdint>
#include <vector>

namespace rxgram {

// Deterministic splitmix64 generator. Used everywhere instead of the
// standard distributions so that seeded runs reproduce bit-identically
// across compilers and standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Uniform integer in [0, n). Rejection-free modulo is fine here: n is
  // always tiny relative to 2^64 so the bias is far below reproducibility
  // concerns, and the sequence stays portable.
  uint64_t next_below(uint64_t n) { return n == 0 ? 0 : next_u64() % n; }

  int uniform_int(int lo, int hi_inclusive) {
    return lo + static_cast<int>(next_below(static_cast<uint64_t>(hi_inclusive - lo + 1)));
  }

  bool bernoulli(double p) { return next_double() < p; }

  // Index drawn from unnormalized non-negative weights.
  size_t categorical(const std::vector<double>& weights) {
    double total = 0;
    for (double w : weights) total += w;
    double x = next_double() * total;
    for (size_t i = 0; i < weights.size(); ++i) {
      x -= weights[i];
      if (x < 0) return i;
    }
    return weights.empty() ? 0 : weights.size() - 1;
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = next_below(i);
      std::swap(v[i - 1], v[j]);
    }
  }

  // Derives an independent stream, e.g. per epoch or per bootstrap replicate.
  static Rng derive(uint64_t seed, uint64_t stream) {
    Rng mix(seed);
    mix.state_ ^= 0x5851f42d4c957f2dULL * (stream + 1);
    mix.next_u64();
    return mix;
  }

 private:
  uint64_t state_;
};

}  // namespace rxgram
