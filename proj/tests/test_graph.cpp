#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "resolv/edgelist.hpp"
#include "resolv/families.hpp"
#include "resolv/graph.hpp"
#include "resolv/naive.hpp"
#include "resolv/sampler.hpp"

using namespace resolv;

namespace {

Errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return Errc::parse_error;
}

void check_distance_matrix_invariants(const Graph& g) {
    DistanceMatrix d = apsp(g);
    const int n = g.order();
    for (int u = 0; u < n; ++u) {
        CHECK(d(u, u) == 0);
        for (int v = 0; v < n; ++v) {
            CHECK(d(u, v) == d(v, u));
            CHECK((d(u, v) == 1) == g.adjacent(u, v));
            for (int w = 0; w < n; ++w) CHECK(d(u, w) <= d(u, v) + d(v, w));
        }
    }
}

}  // namespace

TEST_CASE("build_graph validates input") {
    Graph single(1, {});
    CHECK(single.order() == 1);
    CHECK(single.edge_count() == 0);

    Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(c4.order() == 4);
    CHECK(c4.edge_count() == 4);
    for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);
    CHECK(c4.adjacent(0, 3));
    CHECK(!c4.adjacent(0, 2));

    CHECK(code_of([] { Graph g(4, {{0, 1}, {2, 3}}); }) == Errc::not_connected);
    CHECK(code_of([] { Graph g(3, {{0, 0}, {0, 1}, {1, 2}}); }) == Errc::invalid_edge);
    CHECK(code_of([] { Graph g(3, {{0, 5}, {0, 1}, {1, 2}}); }) == Errc::invalid_edge);
    CHECK(code_of([] { Graph g(3, {{0, 1}, {1, 0}, {1, 2}}); }) == Errc::duplicate_edge);
    CHECK(code_of([] { Graph g(0, {}); }) == Errc::invalid_edge);
}

TEST_CASE("edge list is canonical and adjacency symmetric") {
    Graph g(4, {{3, 0}, {2, 1}, {1, 0}, {3, 2}});
    std::vector<std::pair<int, int>> want{{0, 1}, {0, 3}, {1, 2}, {2, 3}};
    CHECK(g.edges() == want);
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
}

TEST_CASE("apsp hop distances") {
    Graph p3 = make_family({Family::path, 3, 0});
    CHECK(apsp(p3)(0, 2) == 2);

    Graph c6 = make_family({Family::cycle, 6, 0});
    CHECK(apsp(c6)(0, 3) == 3);

    // double antiprism at n=6: inner ring positions 1 and 4 are 3 apart
    Graph a6 = gen_double_antiprism(6);
    CHECK(apsp(a6)(polytope_vertex(6, 1, 1), polytope_vertex(6, 4, 1)) == 3);
}

TEST_CASE("distance matrix invariants hold on fixed and sampled graphs") {
    check_distance_matrix_invariants(make_family({Family::petersen, 0, 0}));
    check_distance_matrix_invariants(gen_t_poly(5));
    GraphSampler sampler(12345);
    for (int i = 0; i < 25; ++i) {
        Graph g = sampler.connected_graph(1, 9);
        check_distance_matrix_invariants(g);
        // cross-check BFS against the Floyd-Warshall reference route
        auto ref = naive::distances(g);
        DistanceMatrix d = apsp(g);
        for (int u = 0; u < g.order(); ++u)
            for (int v = 0; v < g.order(); ++v) CHECK(d(u, v) == ref[u][v]);
    }
}

TEST_CASE("degree sum is twice the edge count") {
    GraphSampler sampler(777);
    for (int i = 0; i < 20; ++i) {
        Graph g = sampler.connected_graph(2, 12);
        int sum = 0;
        for (int v = 0; v < g.order(); ++v) sum += g.degree(v);
        CHECK(sum == 2 * g.edge_count());
    }
}

TEST_CASE("twin classes on reference graphs") {
    auto kn = twin_classes(make_family({Family::complete, 5, 0}));
    REQUIRE(kn.classes.size() == 1);
    CHECK(kn.classes[0].members.size() == 5);
    CHECK(kn.classes[0].kind == TwinKind::clique_class);

    auto k33 = twin_classes(make_family({Family::complete_bipartite, 3, 3}));
    REQUIRE(k33.classes.size() == 2);
    CHECK(k33.classes[0].members == std::vector<int>{0, 1, 2});
    CHECK(k33.classes[1].members == std::vector<int>{3, 4, 5});
    CHECK(k33.classes[0].kind == TwinKind::independent_class);
    CHECK(k33.classes[1].kind == TwinKind::independent_class);
    CHECK(k33.forced_vertices() == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(k33.nonindependent_class_of_size3() == nullptr);

    auto c6 = twin_classes(make_family({Family::cycle, 6, 0}));
    CHECK(c6.classes.size() == 6);
    for (const auto& c : c6.classes) CHECK(c.kind == TwinKind::singleton);
    CHECK(c6.forced_vertices().empty());

    auto p3 = twin_classes(make_family({Family::path, 3, 0}));
    REQUIRE(p3.classes.size() == 2);
    CHECK(p3.classes[0].members == std::vector<int>{0, 2});
    CHECK(p3.classes[0].kind == TwinKind::independent_class);

    auto k4 = twin_classes(make_family({Family::complete, 4, 0}));
    REQUIRE(k4.nonindependent_class_of_size3() != nullptr);
    CHECK(k4.nonindependent_class_of_size3()->members.size() == 4);
}

TEST_CASE("twin partition matches the distance-similarity relation") {
    GraphSampler sampler(4242);
    std::vector<Graph> graphs;
    for (int i = 0; i < 30; ++i) graphs.push_back(sampler.connected_graph(2, 10));
    graphs.push_back(gen_double_antiprism(5));
    graphs.push_back(make_family({Family::complete_bipartite, 2, 4}));

    for (const Graph& g : graphs) {
        DistanceMatrix d = apsp(g);
        const int n = g.order();
        std::vector<int> cls(n, -1);
        auto part = twin_classes(g);
        for (std::size_t i = 0; i < part.classes.size(); ++i)
            for (int v : part.classes[i].members) cls[v] = static_cast<int>(i);

        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                bool similar = true;
                for (int w = 0; w < n && similar; ++w)
                    if (w != u && w != v && d(u, w) != d(v, w)) similar = false;
                CHECK((cls[u] == cls[v]) == similar);
            }
    }
}

TEST_CASE("edge list round trip and hashing") {
    Graph g = gen_s_poly(4);
    std::string text = to_edge_list(g);
    Graph back = parse_edge_list(text);
    CHECK(back.edges() == g.edges());
    CHECK(back.order() == g.order());
    CHECK(edge_list_hash(back) == edge_list_hash(g));
    CHECK(to_edge_list(back) == text);

    Graph single(1, {});
    CHECK(to_edge_list(single) == "1 0\n");
    CHECK(parse_edge_list("1 0\n").order() == 1);

    CHECK(code_of([] { parse_edge_list(""); }) == Errc::parse_error);
    CHECK(code_of([] { parse_edge_list("2 1\n"); }) == Errc::parse_error);
    CHECK(code_of([] { parse_edge_list("2 1\n0 1\n7\n"); }) == Errc::parse_error);
    CHECK(code_of([] { parse_edge_list("3 1\n0 1\n"); }) == Errc::not_connected);
}
