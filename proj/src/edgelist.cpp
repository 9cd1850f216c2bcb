#include "resolv/edgelist.hpp"

#include <fstream>
#include <sstream>

namespace resolv {

std::string to_edge_list(const Graph& g) {
    std::string out;
    out += std::to_string(g.order());
    out += ' ';
    out += std::to_string(g.edge_count());
    out += '\n';
    for (auto [u, v] : g.edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n = 0, m = 0;
    if (!(in >> n >> m)) throw Error(Errc::parse_error, "edge list: missing 'n m' header");
    if (n < 1) throw Error(Errc::parse_error, "edge list: vertex count must be >= 1");
    if (m < 0) throw Error(Errc::parse_error, "edge list: negative edge count");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v))
            throw Error(Errc::parse_error,
                        "edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    long long extra;
    if (in >> extra) throw Error(Errc::parse_error, "edge list: trailing tokens after last edge");
    return Graph(static_cast<int>(n), std::move(edges));
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::io_failure, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::io_failure, "cannot open " + path + " for writing");
    out << to_edge_list(g);
    if (!out) throw Error(Errc::io_failure, "write failed: " + path);
}

std::uint64_t edge_list_hash(const Graph& g) {
    const std::string bytes = to_edge_list(g);
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace resolv
