#include "sharedp/generator.hpp"

#include <algorithm>
#include <random>

#include "sharedp/oracle.hpp"
#include "sharedp/split_graph.hpp"

namespace sharedp {

namespace {

constexpr std::uint32_t kSchedule[] = {50, 20, 15, 10, 8, 5, 2};

std::uint32_t next_lower_k(std::uint32_t k) {
    for (std::uint32_t step : kSchedule)
        if (step < k) return step;
    return 0;  // nothing below 2
}

bool pair_solvable(const Graph& g, VertexId s, VertexId t, std::uint32_t k) {
    if (g.vertex_count() <= 10000) return max_disjoint_count(g, s, t, k) >= k;
    Query q{0, s, t};
    return maxflow_single(g, q, k).found >= k;
}

}  // namespace

GeneratedBatch generate_queries(const Graph& g, std::uint32_t k, std::uint32_t count,
                                std::uint64_t seed) {
    if (count < 1) throw UsageError("generate_queries: count must be >= 1");
    if (k < 1) throw UsageError("generate_queries: k must be >= 1");

    GeneratedBatch out;
    out.requested_k = k;
    std::mt19937_64 rng(seed);

    for (std::uint32_t cur_k = k;;) {
        std::vector<VertexId> sources, targets;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (g.out_degree(v) >= cur_k) sources.push_back(v);
            if (g.in_degree(v) >= cur_k) targets.push_back(v);
        }

        std::vector<std::pair<VertexId, VertexId>> accepted;
        const std::uint64_t budget = static_cast<std::uint64_t>(count) * 50;
        std::uint64_t attempts = 0;
        if (!sources.empty() && !targets.empty() &&
            !(sources.size() == 1 && targets.size() == 1 && sources[0] == targets[0])) {
            while (accepted.size() < count && attempts < budget) {
                ++attempts;
                VertexId s = sources[rng() % sources.size()];
                VertexId t = targets[rng() % targets.size()];
                if (s == t) continue;
                if (pair_solvable(g, s, t, cur_k)) accepted.emplace_back(s, t);
            }
        }

        if (accepted.size() == count) {
            out.final_k = cur_k;
            out.attempts = attempts;
            out.batch = make_batch(accepted, cur_k, g);
            return out;
        }

        // Budget exhausted short of count: with a 50x budget that means the
        // success rate fell below the 20% bar, so k steps down the schedule.
        std::uint32_t next = next_lower_k(cur_k);
        if (next == 0)
            throw UsageError("query generation failed: no solvable pairs even at k = " +
                             std::to_string(cur_k));
        ++out.reductions;
        cur_k = next;
    }
}

}  // namespace sharedp
