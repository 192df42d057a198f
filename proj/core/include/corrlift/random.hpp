// SPDX-License-Identifier: Apache-2.0
//
// corrlift: recovery of signal pairs from correlation measurements.

#ifndef CORRLIFT_RANDOM_HPP
#define CORRLIFT_RANDOM_HPP

#include <complex>
#include <cstdint>
#include <random>

namespace corrlift {

/// Deterministic random stream. Gaussian variates are produced by an
/// explicit Box-Muller transform rather than std::normal_distribution, so
/// that a given seed yields the same sequence on every platform.
///
/// Independent child streams are derived with child(tag); trials and noise
/// vectors each own one stream and never share it across threads.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  /// Uniform on [0, 1).
  double uniform01();

  /// Standard real Gaussian N(0, 1).
  double gaussian();

  /// Circularly symmetric complex Gaussian with E|z|^2 = 1.
  std::complex<double> complex_gaussian();

  /// Independent stream derived from this stream's seed and a tag.
  Rng child(std::uint64_t tag) const;

  std::uint64_t seed() const { return seed_; }

  /// Stateless 64-bit mix used for seed derivation (SplitMix64 finalizer).
  static std::uint64_t mix(std::uint64_t v);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace corrlift

#endif  // CORRLIFT_RANDOM_HPP
