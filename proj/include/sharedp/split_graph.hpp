#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sharedp/common.hpp"
#include "sharedp/graph.hpp"
#include "sharedp/query.hpp"

namespace sharedp {

// One query's split-graph over raw ids [0, 2n): path edges reversed, P-inner
// vertices split into plain (out) and +n (in) copies with the residual
// internal edge out -> in. CSR adjacency, each range sorted.
class ExplicitSplitGraph {
public:
    ExplicitSplitGraph() = default;

    std::uint32_t original_vertex_count() const { return n_; }

    bool is_pinner(VertexId v) const { return pinner_[v] != 0; }

    // A raw id exists when it is a plain id, or the in-copy of a P-inner vertex.
    bool vertex_exists(SplitVertexId x) const { return x < n_ || pinner_[x - n_] != 0; }

    std::span<const SplitVertexId> out_neighbors(SplitVertexId x) const {
        return {targets_.data() + offsets_[x], targets_.data() + offsets_[x + 1]};
    }

    bool has_in_adjacency() const { return !in_offsets_.empty(); }

    std::span<const SplitVertexId> in_neighbors(SplitVertexId x) const {
        return {in_targets_.data() + in_offsets_[x], in_targets_.data() + in_offsets_[x + 1]};
    }

    friend ExplicitSplitGraph build_explicit_split_graph(const Graph& g,
                                                         const std::vector<std::vector<VertexId>>& paths,
                                                         VertexId s, VertexId t,
                                                         bool with_in_adjacency);

private:
    std::uint32_t n_ = 0;
    std::vector<std::uint8_t> pinner_;
    std::vector<std::uint64_t> offsets_;      // size 2n + 1
    std::vector<SplitVertexId> targets_;
    std::vector<std::uint64_t> in_offsets_;   // optional transpose
    std::vector<SplitVertexId> in_targets_;
};

// Builds the split-graph for path set P (pairwise disjoint s->t paths,
// validated). In-adjacency is only materialized on request; the forward BFS
// of the baseline does not need it.
ExplicitSplitGraph build_explicit_split_graph(const Graph& g,
                                              const std::vector<std::vector<VertexId>>& paths,
                                              VertexId s, VertexId t,
                                              bool with_in_adjacency = false);

struct QueryResult {
    std::uint32_t id = 0;
    VertexId s = 0;
    VertexId t = 0;
    std::uint32_t found = 0;
    std::vector<std::vector<VertexId>> paths;
    double elapsed_seconds = 0.0;
    bool timed_out = false;
};

// Single-query flow-augmenting baseline: up to k rounds of rebuild explicit
// split-graph, BFS an augmenting path (FIFO, ascending neighbor ids), apply
// it with cancellation. Stops early when no augmenting path exists.
QueryResult maxflow_single(const Graph& g, const Query& q, std::uint32_t k,
                           std::optional<std::chrono::steady_clock::time_point> deadline = {});

}  // namespace sharedp
