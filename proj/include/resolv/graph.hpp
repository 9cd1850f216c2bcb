#ifndef RESOLV_GRAPH_HPP
#define RESOLV_GRAPH_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace resolv {

enum class Errc {
    invalid_edge,
    duplicate_edge,
    not_connected,
    param_too_small,
    invalid_landmark,
    parse_error,
    io_failure,
    range_gap,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

// Simple undirected connected graph over dense vertex ids 0..n-1.
// Immutable after construction; construction validates the edge list and
// rejects self-loops, duplicate edges, out-of-range ids and disconnected input.
class Graph {
public:
    Graph(int order, std::vector<std::pair<int, int>> edges);

    int order() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

    // canonical edge list: u < v, sorted ascending
    const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }

    std::span<const int> neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

// All-pairs hop distances. Entries fit in 16 bits; connectivity is a Graph
// construction invariant so every entry is finite.
class DistanceMatrix {
public:
    DistanceMatrix(int n, std::vector<std::uint16_t> data)
        : n_(n), d_(std::move(data)) {}

    int order() const noexcept { return n_; }
    std::uint16_t operator()(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }

private:
    int n_;
    std::vector<std::uint16_t> d_;
};

// BFS from every vertex.
DistanceMatrix apsp(const Graph& g);

enum class TwinKind { singleton, independent_class, clique_class };

struct TwinClass {
    std::vector<int> members;  // sorted
    TwinKind kind;
};

// Distance-similar equivalence classes: u ~ v iff they are adjacent with
// equal closed neighbourhoods or non-adjacent with equal open neighbourhoods.
struct TwinPartition {
    std::vector<TwinClass> classes;  // sorted by smallest member

    // union of all classes of size >= 2, sorted (members forced into any FTRS)
    std::vector<int> forced_vertices() const;
    // a class of size >= 3 inducing a clique, if any (rules out any IFTRS)
    const TwinClass* nonindependent_class_of_size3() const;
};

TwinPartition twin_classes(const Graph& g);

}  // namespace resolv

#endif
