#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "sharedp/common.hpp"
#include "sharedp/graph.hpp"
#include "sharedp/query.hpp"
#include "sharedp/queryset.hpp"

namespace sharedp {

// Neighbors of one split vertex in the merged split-graph: entries are
// (target split id, query subset), targets strictly ascending, empty subsets
// omitted. A query is a member of the entry for u exactly when (v -> u) is an
// edge of that query's individual split-graph.
struct NeighborAnswer {
    std::vector<std::pair<SplitVertexId, QuerySet>> entries;
};

// The implicit merged split-graph G': per-edge query-set maps nexthops and
// prehops plus the per-vertex sets isPinner / isS / isT. nexthops[u][v] holds
// the queries whose current path set uses edge u->v; prehops[v][u] mirrors it
// from the head side. Entries with empty sets are erased, so iterating a
// vertex's map visits only its actual prehops/nexthops.
class ResultState {
public:
    ResultState() = default;
    ResultState(const Batch& batch, const Graph& g);

    std::uint32_t width() const { return width_; }
    std::uint32_t vertex_count() const { return n_; }

    const QuerySet& is_pinner(VertexId v) const { return is_pinner_[v]; }
    const QuerySet& is_s(VertexId v) const { return is_s_[v]; }
    const QuerySet& is_t(VertexId v) const { return is_t_[v]; }

    // Queries using path edge u->v; null when none.
    const QuerySet* nexthop_set(VertexId u, VertexId v) const;
    // Queries for which u is v's prehop (path edge u->v); null when none.
    const QuerySet* prehop_set(VertexId v, VertexId u) const;

    const std::map<VertexId, QuerySet>& nexthops_of(VertexId u) const { return nexthops_[u]; }
    const std::map<VertexId, QuerySet>& prehops_of(VertexId v) const { return prehops_[v]; }

    // Test-only mutable access (fault injection in oracle tests).
    std::map<VertexId, QuerySet>& debug_prehops(VertexId v) { return prehops_[v]; }
    std::map<VertexId, QuerySet>& debug_nexthops(VertexId u) { return nexthops_[u]; }

    friend void apply_augmenting_path(std::span<const SplitVertexId> path, const QuerySet& b,
                                      ResultState& st, const Batch& batch);

private:
    void add_edge(VertexId u, VertexId v, const QuerySet& qs);
    void remove_edge(VertexId u, VertexId v, const QuerySet& qs);
    void refresh_pinner(VertexId v, const QuerySet& touched);

    std::uint32_t n_ = 0;
    std::uint32_t width_ = 0;
    std::vector<std::map<VertexId, QuerySet>> nexthops_;  // by source vertex
    std::vector<std::map<VertexId, QuerySet>> prehops_;   // by head vertex
    std::vector<QuerySet> is_pinner_;
    std::vector<QuerySet> is_s_;
    std::vector<QuerySet> is_t_;
};

// nexthops/prehops/isPinner empty; isS[v] = {q : s_q = v}, isT[v] = {q : t_q = v}.
ResultState init_state(const Batch& batch, const Graph& g);

// Out-neighbors of split vertex v in G' for query set B: the merge of
// redirected edges, reversed path edges and the out->in internal edge.
NeighborAnswer get_out_neighbors(SplitVertexId v, const QuerySet& b, const Graph& g,
                                 const ResultState& st);

// Exact mirror over in-adjacency.
NeighborAnswer get_in_neighbors(SplitVertexId v, const QuerySet& b, const Graph& g,
                                const ResultState& st);

// Applies one augmenting split path for every query in b: each proj-distinct
// step adds edge (u, v), cancelling an opposing path edge where one exists;
// proj-equal steps (out->in internal hops) carry no original edge. isPinner
// is refreshed for every touched vertex. The path must start at each query's
// s, end at its t, and every step must be a split-graph edge for all of b;
// violations throw InternalError (they indicate an engine bug).
void apply_augmenting_path(std::span<const SplitVertexId> path, const QuerySet& b,
                           ResultState& st, const Batch& batch);

// Follows nexthop chains from s_q (ascending first hop); chains must be
// simple and land on t_q, otherwise InternalError. Returns one path per
// completed iteration, each at most k of them.
std::vector<std::vector<VertexId>> extract_paths(const Query& q, std::uint32_t k,
                                                 const ResultState& st);

}  // namespace sharedp
