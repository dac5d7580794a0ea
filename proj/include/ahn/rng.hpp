#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace ahn {

/// Seedable generator used for every random decision in the library.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Conversions to doubles and bounded integers are done here rather
/// than through <random> distributions, whose algorithms are
/// implementation-defined, so a given seed reproduces the same training run on
/// every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01();

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi);

  /// Uniform integer in [0, bound). bound must be > 0.
  std::size_t below(std::size_t bound);

 private:
  std::mt19937_64 engine_;
};

/// Uniformly random permutation of 0..n-1 (Fisher-Yates).
std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n);

/// k distinct indices drawn from 0..n-1, in draw order. Requires k <= n.
std::vector<std::size_t> sample_without_replacement(Rng& rng, std::size_t n, std::size_t k);

}  // namespace ahn
