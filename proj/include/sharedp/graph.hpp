#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sharedp/common.hpp"

namespace sharedp {

// Immutable directed graph with adjacency kept in both directions.
// Ids are dense in [0, n); adjacency lists are sorted ascending so every
// iteration order downstream is deterministic.
class Graph {
public:
    Graph() = default;

    // Edges may contain duplicates and self-loops; both are dropped.
    static Graph from_edges(std::uint32_t n, std::vector<std::pair<VertexId, VertexId>> edges);

    std::uint32_t vertex_count() const { return n_; }
    std::uint64_t edge_count() const { return m_; }

    std::span<const VertexId> out_neighbors(VertexId v) const { return out_[v]; }
    std::span<const VertexId> in_neighbors(VertexId v) const { return in_[v]; }

    std::uint32_t out_degree(VertexId v) const { return static_cast<std::uint32_t>(out_[v].size()); }
    std::uint32_t in_degree(VertexId v) const { return static_cast<std::uint32_t>(in_[v].size()); }

    bool has_edge(VertexId u, VertexId v) const;

    // Writes one "u v" line per edge, ascending (u, v).
    void save_edges(std::ostream& os) const;

private:
    std::uint32_t n_ = 0;
    std::uint64_t m_ = 0;
    std::vector<std::vector<VertexId>> out_;
    std::vector<std::vector<VertexId>> in_;
};

// Edge-list text format: "u v" per line, whitespace separated, lines starting
// with '#' are comments, blank lines ignored. n = max id + 1; gaps become
// isolated vertices. With undirected=true each edge is inserted both ways.
Graph load_graph(const std::string& path, bool undirected = false);

Graph parse_graph(std::istream& is, bool undirected, const std::string& origin);

}  // namespace sharedp
