#include "resolv/sampler.hpp"

#include <algorithm>

namespace resolv {

Graph GraphSampler::connected_graph(int min_n, int max_n) {
    const int n = min_n + next_below(max_n - min_n + 1);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(next_below(v), v);
    const int density = next_below(101);  // percent chance per non-tree pair
    std::vector<char> have(static_cast<std::size_t>(n) * n, 0);
    for (auto [u, v] : edges) have[static_cast<std::size_t>(u) * n + v] = have[static_cast<std::size_t>(v) * n + u] = 1;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!have[static_cast<std::size_t>(u) * n + v] && next_below(100) < density)
                edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

std::vector<int> GraphSampler::subset(int n, int min_size) {
    std::vector<char> in(n, 0);
    int size = 0;
    for (int v = 0; v < n; ++v)
        if (next_below(2)) {
            in[v] = 1;
            ++size;
        }
    while (size < min_size) {
        int v = next_below(n);
        if (!in[v]) {
            in[v] = 1;
            ++size;
        }
    }
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (in[v]) out.push_back(v);
    return out;
}

}  // namespace resolv
