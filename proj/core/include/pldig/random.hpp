#pragma once

#include <cstdint>

#include "pldig/digraph.hpp"

namespace pldig {

// splitmix64 (Steele, Lea, Flood), fixed constants so campaign reports are
// reproducible across implementations
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in [0,1) with 53 random bits
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform in [0, bound) by modulo; bias is irrelevant at campaign sizes
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

  private:
    std::uint64_t state_;
};

// each ordered non-loop pair (row-major) is included with probability p,
// then every in-isolated vertex gets one arc from a uniformly chosen other
// vertex, so the result always has min in-degree >= 1
Digraph random_digraph(int n, double p, std::uint64_t seed);

}  // namespace pldig
