#include "aseopt/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace aseopt {

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::next_unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::next_exp() {
  // (0,1) open on both sides, so the draw is strictly positive and finite
  const double u = (static_cast<double>(next() >> 12) + 0.5) * 0x1.0p-52;
  return -std::log(u);
}

bool SplitMix64::next_bernoulli(double prob) { return next_unit() < prob; }

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xFF51AFD7ED558CCDULL;
  x ^= x >> 33;
  x *= 0xC4CEB9FE1A85EC53ULL;
  x ^= x >> 33;
  return x;
}

SplitMix64 derive_stream(std::uint64_t master_seed, std::uint64_t realization,
                         std::uint64_t channel) {
  std::uint64_t s = mix64(master_seed ^ 0xA0761D6478BD642FULL);
  s = mix64(s ^ (realization + 0x9E3779B97F4A7C15ULL));
  s = mix64(s ^ (channel + 0xE7037ED1A0B428DBULL));
  return SplitMix64(s);
}

long poisson_sample(SplitMix64& rng, double mean) {
  if (!(mean >= 0.0) || !std::isfinite(mean))
    throw std::invalid_argument("poisson_sample: mean must be finite and >= 0");
  long total = 0;
  while (mean > 0.0) {
    const double chunk = std::min(mean, 64.0);
    mean -= chunk;
    const double limit = std::exp(-chunk);
    double prod = rng.next_unit();
    long k = 0;
    while (prod > limit) {
      ++k;
      prod *= rng.next_unit();
    }
    total += k;
  }
  return total;
}

Point disk_point(SplitMix64& rng, double radius) {
  const double r = radius * std::sqrt(rng.next_unit());
  const double theta = 2.0 * std::numbers::pi * rng.next_unit();
  return {r * std::cos(theta), r * std::sin(theta)};
}

}  // namespace aseopt
