#ifndef RESOLV_FAMILIES_HPP
#define RESOLV_FAMILIES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "resolv/graph.hpp"

namespace resolv {

enum class Family {
    path,
    cycle,
    complete,
    complete_bipartite,
    petersen,
    q3,
    double_antiprism,
    s_poly,
    t_poly,
    graph_h,
};

// Parameterized graph family. n is the size parameter; m is only used by
// complete_bipartite (K_{m,n}). petersen, q3 and graph_h take no parameters.
struct FamilySpec {
    Family family;
    int n = 0;
    int m = 0;
};

// Layered convex-polytope id convention: vertex(l, r) = (r-1)*n + (l-1)
// for 1-based ring position l in 1..n and 1-based layer r. Ring positions
// wrap modulo n (position n+1 is position 1).
int polytope_vertex(int n, int l, int r);

// Double antiprism: 3 layers (inner, middle, outer), 3n vertices, 7n edges.
// Ring edges on every layer; per position, spokes 1-2 and 2-3 plus the
// diagonals 2->next 1 and 3->next 2.
Graph gen_double_antiprism(int n);

// 4 layers, 4n vertices, 8n edges. Ring edges on all four layers; spokes
// 1-2, 2-3, 3-4 and the diagonal 3->next 2.
Graph gen_s_poly(int n);

// 4 layers, 4n vertices, 8n edges. Ring edges on layers 1, 2 and 4 only
// (layer 3 is an independent set); spokes 1-2, 2-3, 3-4 and diagonals
// 2->next 1 and 3->next 2.
Graph gen_t_poly(int n);

// Standard reference constructions (path, cycle, complete, K_{m,n},
// Petersen, 3-cube) plus the polytope families above.
Graph gen_reference(const FamilySpec& spec);

// The 9-vertex example graph is published only through the code vectors of
// its vertices with respect to the landmark set {v2, v5, v6, v8}. Distance-1
// entries pin every landmark-incident edge; the remaining candidate edges
// lie among the five non-landmark vertices (10 pairs). This enumerates all
// 1024 subsets and returns every connected graph whose BFS distances
// reproduce all 36 published entries, sorted by edge list.
std::vector<Graph> reconstruct_graph_h();

// Convenience dispatch; for graph_h returns the first (lexicographically
// least edge list) consistent reconstruction.
Graph make_family(const FamilySpec& spec);

// CLI-facing names: path cycle complete kmn petersen q3 antiprism2 spoly
// tpoly graphH
std::optional<Family> family_from_name(std::string_view name);
std::string family_cli_name(Family f);

// Paper-style vertex names: j^l_r for the layered polytope families,
// v^i (1-based) for everything else.
std::string vertex_name(const FamilySpec& spec, int vertex);

}  // namespace resolv

#endif
