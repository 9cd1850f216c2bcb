#include "resolv/naive.hpp"

#include <algorithm>
#include <functional>

namespace resolv::naive {

namespace {

constexpr int kInf = 1 << 20;

bool next_combination(std::vector<int>& c, int m) {
    int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i)
        if (c[i] < m - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    return false;
}

// least k-subset of 0..n-1 satisfying pred, scanning lexicographically
std::optional<std::vector<int>> least_subset(int n, int k,
                                             const std::function<bool(const std::vector<int>&)>& pred) {
    if (k > n) return std::nullopt;
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    do {
        if (pred(c)) return c;
    } while (next_combination(c, n));
    return std::nullopt;
}

bool independent(const Graph& g, const std::vector<int>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) return false;
    return true;
}

}  // namespace

std::vector<std::vector<int>> distances(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

bool is_resolving(const Graph& g, const std::vector<std::vector<int>>& d,
                  const std::vector<int>& r) {
    if (r.empty()) return g.order() == 1;
    const int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w) {
            bool split = false;
            for (int x : r)
                if (d[u][x] != d[w][x]) {
                    split = true;
                    break;
                }
            if (!split) return false;
        }
    return true;
}

bool is_ft(const Graph& g, const std::vector<std::vector<int>>& d, const std::vector<int>& r) {
    if (!is_resolving(g, d, r)) return false;
    for (std::size_t skip = 0; skip < r.size(); ++skip) {
        std::vector<int> sub;
        for (std::size_t i = 0; i < r.size(); ++i)
            if (i != skip) sub.push_back(r[i]);
        if (!is_resolving(g, d, sub)) return false;
    }
    return true;
}

Result dim(const Graph& g) {
    if (g.order() == 1) return std::make_pair(0, std::vector<int>{});
    auto d = distances(g);
    for (int k = 1; k <= g.order(); ++k)
        if (auto s = least_subset(g.order(), k,
                                  [&](const std::vector<int>& c) { return is_resolving(g, d, c); }))
            return std::make_pair(k, *s);
    return std::nullopt;
}

Result fdim(const Graph& g) {
    if (g.order() == 1) return std::make_pair(0, std::vector<int>{});
    auto d = distances(g);
    for (int k = 1; k <= g.order(); ++k)
        if (auto s = least_subset(g.order(), k,
                                  [&](const std::vector<int>& c) { return is_ft(g, d, c); }))
            return std::make_pair(k, *s);
    return std::nullopt;
}

std::pair<int, std::vector<int>> beta(const Graph& g) {
    for (int k = g.order(); k >= 1; --k)
        if (auto s = least_subset(g.order(), k,
                                  [&](const std::vector<int>& c) { return independent(g, c); }))
            return {k, *s};
    return {0, {}};
}

Result ir(const Graph& g) {
    if (g.order() == 1) return std::make_pair(0, std::vector<int>{});
    auto d = distances(g);
    const int b = beta(g).first;
    for (int k = 1; k <= b; ++k)
        if (auto s = least_subset(g.order(), k, [&](const std::vector<int>& c) {
                return independent(g, c) && is_resolving(g, d, c);
            }))
            return std::make_pair(k, *s);
    return std::nullopt;
}

Result ifr(const Graph& g) {
    if (g.order() == 1) return std::make_pair(0, std::vector<int>{});
    auto d = distances(g);
    const int b = beta(g).first;
    for (int k = 1; k <= b; ++k)
        if (auto s = least_subset(g.order(), k, [&](const std::vector<int>& c) {
                return independent(g, c) && is_ft(g, d, c);
            }))
            return std::make_pair(k, *s);
    return std::nullopt;
}

}  // namespace resolv::naive
