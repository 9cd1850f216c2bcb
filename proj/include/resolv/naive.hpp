#ifndef RESOLV_NAIVE_HPP
#define RESOLV_NAIVE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "resolv/graph.hpp"

// Reference implementations by direct definition, for small graphs only.
// They share nothing with the solver path: distances come from
// Floyd-Warshall instead of BFS, subsets are enumerated without the pair
// cover index, and fault tolerance is the literal deletion condition. The
// test suite holds the optimized solvers to agreement with these.
namespace resolv::naive {

std::vector<std::vector<int>> distances(const Graph& g);

bool is_resolving(const Graph& g, const std::vector<std::vector<int>>& d,
                  const std::vector<int>& r);
bool is_ft(const Graph& g, const std::vector<std::vector<int>>& d, const std::vector<int>& r);

using Result = std::optional<std::pair<int, std::vector<int>>>;

// each returns {value, lexicographically least witness}; nullopt when no
// feasible set exists
Result dim(const Graph& g);
Result fdim(const Graph& g);
Result ir(const Graph& g);
Result ifr(const Graph& g);
std::pair<int, std::vector<int>> beta(const Graph& g);

}  // namespace resolv::naive

#endif
