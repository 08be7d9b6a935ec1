#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "sharedp/common.hpp"
#include "sharedp/graph.hpp"
#include "sharedp/query.hpp"
#include "sharedp/queryset.hpp"
#include "sharedp/result_state.hpp"
#include "sharedp/split_graph.hpp"

namespace sharedp {

// One BFS level's instrumentation: how many frontier entries were expanded,
// how many query-expansions they stood for, and how many entries served more
// than one query.
struct LevelStats {
    std::uint32_t iteration = 0;
    std::uint32_t level = 0;
    char direction = 'f';
    std::uint64_t entries_expanded = 0;
    std::uint64_t query_expansions = 0;
    std::uint64_t shared_entries = 0;
    std::uint64_t words_ored = 0;

    double shared_ratio() const {
        return entries_expanded ? static_cast<double>(shared_entries) / static_cast<double>(entries_expanded) : 0.0;
    }
};

// Per-iteration bidirectional BFS structures. Queues map split ids to the
// query sets that still need to expand there; pred/succ record the first
// frontier vertex that claimed each discovery.
struct SearchState {
    explicit SearchState(std::uint32_t split_vertex_count, std::uint32_t width);

    // Re-arms for one iteration: zeroes seen sets, clears queues and path
    // records, seeds s/t frontiers with the live queries.
    void reset(const Batch& batch, const QuerySet& live);

    void touch(SplitVertexId x);

    std::uint32_t width = 0;
    std::vector<QuerySet> s_seen, t_seen;  // indexed by split id
    std::map<SplitVertexId, QuerySet> s_queue, s_nextqueue, t_queue, t_nextqueue;
    // pred[u]: (v, queries for which v claimed u) in claim order; succ mirrors.
    std::vector<std::vector<std::pair<SplitVertexId, QuerySet>>> pred, succ;
    std::map<SplitVertexId, QuerySet> joint;
    QuerySet undone;

    LevelStats level_scratch;  // counters for the level currently expanding
    QuerySet tag_scratch;      // union of every query set tagged this iteration

private:
    std::vector<SplitVertexId> touched_;  // split ids with nonzero seen/pred/succ
    std::vector<std::uint8_t> touched_flag_;
};

struct IterationStats {
    std::uint32_t iteration = 0;
    QuerySet tag_union;  // every query id tagged into any structure this iteration
    QuerySet live;       // queries still running when the iteration started
};

struct TraversalStats {
    std::vector<LevelStats> levels;
    std::vector<IterationStats> iterations;

    double mean_shared_ratio() const;
    double min_shared_ratio() const;
    double max_shared_ratio() const;
};

struct SharedpOptions {
    TraversalStats* stats = nullptr;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Expands one forward frontier entry (v, b): b is first restricted to undone,
// neighbors come from the merged split-graph, discoveries claim pred and may
// meet the backward search.
void forward_expand(SplitVertexId v, const QuerySet& b, const Graph& g, const ResultState& st,
                    SearchState& ss);

void backward_expand(SplitVertexId v, const QuerySet& b, const Graph& g, const ResultState& st,
                     SearchState& ss);

// Walks pred from the query's joint back to s and succ forward to t.
std::vector<SplitVertexId> reconstruct_path(const Query& q, const SearchState& ss);

// Full batch execution: k iterations of level-synchronous bidirectional BFS
// over the merged split-graph, path construction, grouped augmentation, and
// final extraction. Queries that fail an iteration are retired with partial
// results.
std::vector<QueryResult> sharedp_batch(const Graph& g, const Batch& batch,
                                       const SharedpOptions& opts = {});

}  // namespace sharedp
