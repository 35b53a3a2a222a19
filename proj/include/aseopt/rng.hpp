#pragma once

#include <cstdint>

#include "aseopt/params.hpp"

namespace aseopt {

// SplitMix64 stream. Streams are derived counter-style from
// (master seed, realization index, channel), so any realization can be
// regenerated in isolation and parallel runs reproduce serial ones exactly.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  std::uint64_t next();
  double next_unit();  // uniform on [0,1)
  double next_exp();   // unit-mean exponential, strictly positive
  bool next_bernoulli(double prob);

 private:
  std::uint64_t state_;
};

std::uint64_t mix64(std::uint64_t x);

// channel 0: field geometry + fading, 1: ALOHA marks, 2: estimator extras
SplitMix64 derive_stream(std::uint64_t master_seed, std::uint64_t realization,
                         std::uint64_t channel);

// Poisson sample by chunked inversion (chunk mean <= 64 keeps e^-mu in range).
long poisson_sample(SplitMix64& rng, double mean);

// uniform point on the disk of given radius: r = R sqrt(u), uniform angle
Point disk_point(SplitMix64& rng, double radius);

}  // namespace aseopt
