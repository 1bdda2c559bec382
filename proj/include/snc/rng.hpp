#pragma once

#include <cstdint>

#include "snc/models.hpp"

namespace snc {

// SplitMix64 run in counter mode: draw i of stream s is the SplitMix64
// finalizer applied to s + (i+1) * golden gamma, a pure function of
// (seed, counter). Replication substreams are seed XOR replication index,
// which keeps parallel Monte-Carlo runs reproducible regardless of how
// replications are scheduled onto threads.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : state_(seed) {}

  static CounterRng substream(std::uint64_t seed, std::uint64_t stream_index) {
    return CounterRng(seed ^ stream_index);
  }

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform double strictly inside (0, 1).
  double next_unit() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Poisson draw: CDF inversion below mean 10, Hormann's transformed
// rejection (PTRD) at mean >= 10.
double sample_poisson(double mean, CounterRng& rng);

// One i.i.d. per-slot work increment from the model.
double sample_increment(const IncrementModel& model, CounterRng& rng);

}  // namespace snc
