#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace hardedge {

/// Reproducible variate stream keyed by (master_seed, stream).
///
/// Every replica of an ensemble owns one stream, so the sequence a replica sees
/// does not depend on how replicas are scheduled across threads.
class RandomSource {
 public:
  RandomSource(std::uint64_t master_seed, std::uint64_t stream);

  /// A source whose Gaussian draws are all exactly zero. Uniforms are 1/2.
  /// Turns the SDE steppers into deterministic ODE integrators.
  static RandomSource zero_noise();

  std::uint64_t master_seed() const noexcept { return master_seed_; }
  std::uint64_t stream() const noexcept { return stream_; }
  bool is_zero_noise() const noexcept { return zero_; }

  double normal();
  /// Uniform on [0, 1).
  double uniform();
  /// Standard complex Gaussian: real and imaginary parts N(0, 1/2), E|z|^2 = 1.
  std::complex<double> complex_normal();
  /// Gamma(shape, scale 1).
  double gamma(double shape);
  std::uint64_t next_u64();

  /// Index in [0, n).
  std::size_t uniform_index(std::size_t n);

 private:
  std::uint64_t master_seed_;
  std::uint64_t stream_;
  bool zero_ = false;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
};

/// Packs a 16-bit tag and a 48-bit index into one stream id, so pipelines of
/// one experiment never share streams.
constexpr std::uint64_t stream_id(std::uint64_t tag, std::uint64_t index) {
  return (tag << 48) ^ (index & 0xFFFFFFFFFFFFull);
}

/// SplitMix64 finaliser; used for counter-based draws.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Standard normal that is a pure function of its key (Box-Muller on two
/// hashed uniforms). Used where variates must be addressable, e.g. shared
/// Brownian paths refined by bisection.
double keyed_normal(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                    std::uint64_t c);

}  // namespace hardedge
