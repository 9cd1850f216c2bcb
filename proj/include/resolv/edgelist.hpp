#ifndef RESOLV_EDGELIST_HPP
#define RESOLV_EDGELIST_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "resolv/graph.hpp"

namespace resolv {

// Canonical edge-list text format: first line "n m", then m lines "u v"
// (0-based ids, LF line endings). Serialization is byte-deterministic:
// edges sorted ascending with u < v.
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string& path);
void write_edge_list_file(const Graph& g, const std::string& path);

// FNV-1a hash of the canonical edge-list bytes; identifies the input graph
// in certificates.
std::uint64_t edge_list_hash(const Graph& g);

}  // namespace resolv

#endif
