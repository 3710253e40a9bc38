#pragma once

// Deterministic randomness. Every random decision in the pipeline draws from
// a seed derived with derive_seed(base, tags...), never from a shared stream.
// Checkpoint resume therefore needs no RNG state: re-deriving the seed for
// (step, group, member) reproduces the exact draw.

#include <Eigen/Dense>

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace eapo::rng {

// splitmix64 finalizer (Steele, Lea, Flood 2014).
inline std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base) { return mix(base); }

template <typename... Tags>
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag, Tags... rest) {
  return derive_seed(mix(base ^ mix(tag)), rest...);
}

// Minimal counter-based generator: stateless apart from (seed, counter).
class Stream {
 public:
  explicit Stream(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next_u64() { return mix(seed_ ^ mix(++counter_)); }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, n). n must be positive.
  std::uint64_t next_below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("next_below: n must be positive");
    // 64-bit multiply-shift; bias is negligible for the small n used here.
    #if defined(__SIZEOF_INT128__)
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    #else
    return next_u64() % n;
    #endif
  }

  // Samples an index from unnormalized nonnegative weights via inverse CDF.
  int categorical(const Eigen::VectorXd& weights) {
    const double total = weights.sum();
    if (!(total > 0.0))
      throw std::invalid_argument("categorical: weights must sum to > 0");
    double u = next_double() * total;
    double acc = 0.0;
    for (Eigen::Index i = 0; i < weights.size(); ++i) {
      acc += weights[i];
      if (u < acc) return static_cast<int>(i);
    }
    return static_cast<int>(weights.size() - 1);  // u landed on the total
  }

  template <typename Vec>
  void shuffle(Vec& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace eapo::rng
