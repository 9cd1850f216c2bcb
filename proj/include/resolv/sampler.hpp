#ifndef RESOLV_SAMPLER_HPP
#define RESOLV_SAMPLER_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "resolv/graph.hpp"

namespace resolv {

// Seeded random connected graphs for the property suites. mt19937_64 output
// is standard-specified, and all draws go through modular arithmetic rather
// than std distributions, so a seed fixes the sample on every platform.
class GraphSampler {
public:
    explicit GraphSampler(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t next() { return rng_(); }
    int next_below(int bound) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(bound)); }

    // random spanning tree plus each remaining pair with a random density
    Graph connected_graph(int min_n, int max_n);

    // random subset of 0..n-1 topped up to at least min_size elements
    std::vector<int> subset(int n, int min_size);

private:
    std::mt19937_64 rng_;
};

}  // namespace resolv

#endif
