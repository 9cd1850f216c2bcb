#include "resolv/families.hpp"

#include <algorithm>
#include <array>

#include "resolv/edgelist.hpp"

namespace resolv {

namespace {

void require_n(const char* family, int n, int minimum) {
    if (n < minimum)
        throw Error(Errc::param_too_small, std::string(family) + " requires n >= " +
                                               std::to_string(minimum) + ", got " + std::to_string(n));
}

}  // namespace

int polytope_vertex(int n, int l, int r) {
    int lw = (l - 1) % n + 1;  // wrap ring position
    return (r - 1) * n + (lw - 1);
}

Graph gen_double_antiprism(int n) {
    require_n("antiprism2", n, 3);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(7 * n);
    for (int l = 1; l <= n; ++l) {
        for (int r = 1; r <= 3; ++r)
            edges.emplace_back(polytope_vertex(n, l, r), polytope_vertex(n, l + 1, r));
        edges.emplace_back(polytope_vertex(n, l, 1), polytope_vertex(n, l, 2));
        edges.emplace_back(polytope_vertex(n, l, 2), polytope_vertex(n, l, 3));
        edges.emplace_back(polytope_vertex(n, l, 2), polytope_vertex(n, l + 1, 1));
        edges.emplace_back(polytope_vertex(n, l, 3), polytope_vertex(n, l + 1, 2));
    }
    return Graph(3 * n, std::move(edges));
}

Graph gen_s_poly(int n) {
    require_n("spoly", n, 3);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(8 * n);
    for (int l = 1; l <= n; ++l) {
        for (int r = 1; r <= 4; ++r)
            edges.emplace_back(polytope_vertex(n, l, r), polytope_vertex(n, l + 1, r));
        edges.emplace_back(polytope_vertex(n, l, 1), polytope_vertex(n, l, 2));
        edges.emplace_back(polytope_vertex(n, l, 2), polytope_vertex(n, l, 3));
        edges.emplace_back(polytope_vertex(n, l, 3), polytope_vertex(n, l, 4));
        edges.emplace_back(polytope_vertex(n, l, 3), polytope_vertex(n, l + 1, 2));
    }
    return Graph(4 * n, std::move(edges));
}

Graph gen_t_poly(int n) {
    require_n("tpoly", n, 3);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(8 * n);
    for (int l = 1; l <= n; ++l) {
        for (int r : {1, 2, 4})
            edges.emplace_back(polytope_vertex(n, l, r), polytope_vertex(n, l + 1, r));
        edges.emplace_back(polytope_vertex(n, l, 1), polytope_vertex(n, l, 2));
        edges.emplace_back(polytope_vertex(n, l, 2), polytope_vertex(n, l, 3));
        edges.emplace_back(polytope_vertex(n, l, 3), polytope_vertex(n, l, 4));
        edges.emplace_back(polytope_vertex(n, l, 2), polytope_vertex(n, l + 1, 1));
        edges.emplace_back(polytope_vertex(n, l, 3), polytope_vertex(n, l + 1, 2));
    }
    return Graph(4 * n, std::move(edges));
}

namespace {

Graph gen_path(int n) {
    require_n("path", n, 1);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

Graph gen_cycle(int n) {
    require_n("cycle", n, 3);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(edges));
}

Graph gen_complete(int n) {
    require_n("complete", n, 1);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

Graph gen_complete_bipartite(int m, int n) {
    require_n("kmn", m, 1);
    require_n("kmn", n, 1);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
    return Graph(m + n, std::move(edges));
}

// outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5
Graph gen_petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, std::move(edges));
}

// 3-cube: vertices are bitmasks, edges differ in one bit
Graph gen_q3() {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 8; ++u)
        for (int v = u + 1; v < 8; ++v)
            if (__builtin_popcount(u ^ v) == 1) edges.emplace_back(u, v);
    return Graph(8, std::move(edges));
}

}  // namespace

std::vector<Graph> reconstruct_graph_h() {
    // published codes of v1..v9 with respect to (v2, v5, v6, v8), 0-based here
    static constexpr std::array<std::array<int, 4>, 9> codes = {{
        {1, 4, 4, 2},
        {0, 3, 3, 2},
        {1, 2, 2, 2},
        {2, 1, 1, 2},
        {3, 0, 2, 3},
        {3, 2, 0, 3},
        {3, 2, 2, 1},
        {2, 3, 3, 0},
        {1, 3, 3, 1},
    }};
    static constexpr std::array<int, 4> landmarks = {1, 4, 5, 7};

    std::vector<std::pair<int, int>> fixed;
    for (int v = 0; v < 9; ++v)
        for (int pos = 0; pos < 4; ++pos)
            if (codes[v][pos] == 1)
                fixed.emplace_back(std::min(v, landmarks[pos]), std::max(v, landmarks[pos]));
    std::sort(fixed.begin(), fixed.end());
    fixed.erase(std::unique(fixed.begin(), fixed.end()), fixed.end());

    static constexpr std::array<int, 5> free_vertices = {0, 2, 3, 6, 8};
    std::vector<std::pair<int, int>> candidate;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            candidate.emplace_back(free_vertices[i], free_vertices[j]);

    std::vector<Graph> out;
    for (unsigned mask = 0; mask < 1024; ++mask) {
        auto edges = fixed;
        for (int i = 0; i < 10; ++i)
            if (mask >> i & 1) edges.push_back(candidate[i]);
        std::optional<Graph> g;
        try {
            g.emplace(9, std::move(edges));
        } catch (const Error&) {
            continue;  // disconnected candidate
        }
        DistanceMatrix d = apsp(*g);
        bool ok = true;
        for (int v = 0; v < 9 && ok; ++v)
            for (int pos = 0; pos < 4 && ok; ++pos)
                if (d(v, landmarks[pos]) != codes[v][pos]) ok = false;
        if (ok) out.push_back(std::move(*g));
    }
    std::sort(out.begin(), out.end(),
              [](const Graph& a, const Graph& b) { return a.edges() < b.edges(); });
    return out;
}

Graph gen_reference(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::path: return gen_path(spec.n);
        case Family::cycle: return gen_cycle(spec.n);
        case Family::complete: return gen_complete(spec.n);
        case Family::complete_bipartite: return gen_complete_bipartite(spec.m, spec.n);
        case Family::petersen: return gen_petersen();
        case Family::q3: return gen_q3();
        case Family::double_antiprism: return gen_double_antiprism(spec.n);
        case Family::s_poly: return gen_s_poly(spec.n);
        case Family::t_poly: return gen_t_poly(spec.n);
        case Family::graph_h: break;
    }
    auto hs = reconstruct_graph_h();
    if (hs.empty()) throw Error(Errc::param_too_small, "graphH reconstruction is empty");
    return hs.front();
}

Graph make_family(const FamilySpec& spec) { return gen_reference(spec); }

std::optional<Family> family_from_name(std::string_view name) {
    if (name == "path") return Family::path;
    if (name == "cycle") return Family::cycle;
    if (name == "complete") return Family::complete;
    if (name == "kmn") return Family::complete_bipartite;
    if (name == "petersen") return Family::petersen;
    if (name == "q3") return Family::q3;
    if (name == "antiprism2") return Family::double_antiprism;
    if (name == "spoly") return Family::s_poly;
    if (name == "tpoly") return Family::t_poly;
    if (name == "graphH") return Family::graph_h;
    return std::nullopt;
}

std::string family_cli_name(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::complete: return "complete";
        case Family::complete_bipartite: return "kmn";
        case Family::petersen: return "petersen";
        case Family::q3: return "q3";
        case Family::double_antiprism: return "antiprism2";
        case Family::s_poly: return "spoly";
        case Family::t_poly: return "tpoly";
        case Family::graph_h: return "graphH";
    }
    return "?";
}

std::string vertex_name(const FamilySpec& spec, int vertex) {
    switch (spec.family) {
        case Family::double_antiprism:
        case Family::s_poly:
        case Family::t_poly: {
            int n = spec.n;
            int r = vertex / n + 1;
            int l = vertex % n + 1;
            return "j^" + std::to_string(l) + "_" + std::to_string(r);
        }
        default: return "v^" + std::to_string(vertex + 1);
    }
}

}  // namespace resolv
