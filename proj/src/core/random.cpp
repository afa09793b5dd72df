#include "hardedge/core/random.hpp"

#include <cmath>
#include <numbers>

namespace hardedge {

namespace {

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32), 0x68617264u};
  return std::mt19937_64(seq);
}

}  // namespace

RandomSource::RandomSource(std::uint64_t master_seed, std::uint64_t stream)
    : master_seed_(master_seed), stream_(stream), engine_(make_engine(master_seed, stream)) {}

RandomSource RandomSource::zero_noise() {
  RandomSource r(0, 0);
  r.zero_ = true;
  return r;
}

double RandomSource::normal() {
  if (zero_) return 0.0;
  return normal_(engine_);
}

double RandomSource::uniform() {
  if (zero_) return 0.5;
  return std::generate_canonical<double, 53>(engine_);
}

std::complex<double> RandomSource::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

double RandomSource::gamma(double shape) {
  if (zero_) return shape;
  std::gamma_distribution<double> dist(shape, 1.0);
  return dist(engine_);
}

std::uint64_t RandomSource::next_u64() { return engine_(); }

std::size_t RandomSource::uniform_index(std::size_t n) {
  std::uniform_int_distribution<std::size_t> dist(0, n - 1);
  return dist(engine_);
}

double keyed_normal(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  std::uint64_t h = mix64(seed);
  h = mix64(h ^ a);
  h = mix64(h ^ (b * 0xd1342543de82ef95ull));
  h = mix64(h ^ (c * 0x2545f4914f6cdd1dull));
  const std::uint64_t h2 = mix64(h ^ 0x632be59bd9b4e019ull);
  // (0, 1] so the logarithm is finite.
  const double u1 = (static_cast<double>(h >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = static_cast<double>(h2 >> 11) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace hardedge
