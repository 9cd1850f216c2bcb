#include "resolv/graph.hpp"

#include <algorithm>
#include <queue>

namespace resolv {

Graph::Graph(int order, std::vector<std::pair<int, int>> edges) : n_(order) {
    if (order < 1)
        throw Error(Errc::invalid_edge, "graph order must be >= 1, got " + std::to_string(order));
    if (order > 65535)
        throw Error(Errc::invalid_edge, "graph order exceeds 16-bit distance range");

    for (auto& [u, v] : edges) {
        if (u < 0 || u >= order || v < 0 || v >= order)
            throw Error(Errc::invalid_edge,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        if (u == v)
            throw Error(Errc::invalid_edge, "self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        throw Error(Errc::duplicate_edge, "duplicate edge (" + std::to_string(dup->first) + "," +
                                              std::to_string(dup->second) + ")");
    edges_ = std::move(edges);

    adj_.resize(n_);
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());

    // connectivity: BFS from vertex 0
    std::vector<char> seen(n_, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : adj_[u])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    if (reached != n_)
        throw Error(Errc::not_connected, "graph is not connected (" + std::to_string(reached) +
                                             " of " + std::to_string(n_) + " vertices reachable)");
}

bool Graph::adjacent(int u, int v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

DistanceMatrix apsp(const Graph& g) {
    const int n = g.order();
    std::vector<std::uint16_t> d(static_cast<std::size_t>(n) * n, 0);
    std::vector<int> dist(n);
    std::vector<int> queue(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        int head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            int u = queue[head++];
            for (int w : g.neighbors(u))
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    queue[tail++] = w;
                }
        }
        for (int v = 0; v < n; ++v) d[static_cast<std::size_t>(s) * n + v] = static_cast<std::uint16_t>(dist[v]);
    }
    return DistanceMatrix(n, std::move(d));
}

namespace {

int uf_find(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

// neighbour lists equal after dropping one excluded id from each
bool equal_excluding(std::span<const int> a, int drop_a, std::span<const int> b, int drop_b) {
    std::size_t i = 0, j = 0;
    while (true) {
        while (i < a.size() && a[i] == drop_a) ++i;
        while (j < b.size() && b[j] == drop_b) ++j;
        if (i == a.size() || j == b.size()) return i == a.size() && j == b.size();
        if (a[i] != b[j]) return false;
        ++i;
        ++j;
    }
}

}  // namespace

TwinPartition twin_classes(const Graph& g) {
    const int n = g.order();
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;

    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool adj = g.adjacent(u, v);
            bool twin;
            if (adj)  // N[u] == N[v]: neighbour lists equal once u and v are removed
                twin = equal_excluding(g.neighbors(u), v, g.neighbors(v), u);
            else  // N(u) == N(v)
                twin = std::ranges::equal(g.neighbors(u), g.neighbors(v));
            if (twin) parent[uf_find(parent, u)] = uf_find(parent, v);
        }

    std::vector<std::vector<int>> groups(n);
    for (int v = 0; v < n; ++v) groups[uf_find(parent, v)].push_back(v);

    TwinPartition part;
    for (auto& mem : groups) {
        if (mem.empty()) continue;
        TwinClass c;
        c.members = std::move(mem);
        if (c.members.size() == 1)
            c.kind = TwinKind::singleton;
        else
            c.kind = g.adjacent(c.members[0], c.members[1]) ? TwinKind::clique_class
                                                            : TwinKind::independent_class;
        part.classes.push_back(std::move(c));
    }
    std::sort(part.classes.begin(), part.classes.end(),
              [](const TwinClass& a, const TwinClass& b) { return a.members[0] < b.members[0]; });
    return part;
}

std::vector<int> TwinPartition::forced_vertices() const {
    std::vector<int> out;
    for (const auto& c : classes)
        if (c.members.size() >= 2) out.insert(out.end(), c.members.begin(), c.members.end());
    std::sort(out.begin(), out.end());
    return out;
}

const TwinClass* TwinPartition::nonindependent_class_of_size3() const {
    for (const auto& c : classes)
        if (c.members.size() >= 3 && c.kind == TwinKind::clique_class) return &c;
    return nullptr;
}

}  // namespace resolv
