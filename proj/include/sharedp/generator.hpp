#pragma once

#include <cstdint>
#include <vector>

#include "sharedp/graph.hpp"
#include "sharedp/query.hpp"

namespace sharedp {

struct GeneratedBatch {
    Batch batch;
    std::uint32_t requested_k = 0;
    std::uint32_t final_k = 0;       // after any reduction
    std::uint64_t attempts = 0;      // attempts at the final k
    std::uint64_t reductions = 0;
};

// Samples (s, t) uniformly over degree-qualified candidates (out-degree(s) >= k,
// in-degree(t) >= k, s != t) and keeps pairs with at least k vertex-disjoint
// paths, validated by the flow oracle for n <= 10000 and by maxflow_single
// beyond. Budget is count * 50 attempts per k; when fewer than 20% of
// attempts succeed, k drops along 50,20,15,10,8,5,2 and sampling restarts.
// Throws UsageError when k falls below 2 with nothing solvable.
GeneratedBatch generate_queries(const Graph& g, std::uint32_t k, std::uint32_t count,
                                std::uint64_t seed);

}  // namespace sharedp
