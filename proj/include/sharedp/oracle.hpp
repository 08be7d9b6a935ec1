#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sharedp/common.hpp"
#include "sharedp/graph.hpp"
#include "sharedp/query.hpp"
#include "sharedp/result_state.hpp"

namespace sharedp {

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> violations;

    void flag(std::string what) {
        ok = false;
        violations.push_back(std::move(what));
    }
};

// Checks each path starts at s, ends at t, is simple, uses only edges of g,
// and that paths are pairwise inner-vertex disjoint.
VerifyReport verify_disjoint(const Graph& g, VertexId s, VertexId t,
                             const std::vector<std::vector<VertexId>>& paths);

// Maximum number of vertex-disjoint s->t paths, capped at cap. Unit-capacity
// vertex-split max-flow with BFS augmentation; shares no code with the merged
// state derivation. Guarded to n <= 10000.
std::uint32_t max_disjoint_count(const Graph& g, VertexId s, VertexId t, std::uint32_t cap);

// Samples (v, B) probes and compares get_out_neighbors / get_in_neighbors
// against each query's explicitly constructed split-graph. The state must
// satisfy the ResultState invariants (paths extractable per query).
VerifyReport neighbor_oracle_check(const Graph& g, const ResultState& st, const Batch& batch,
                                   std::uint32_t samples, std::uint64_t seed);

}  // namespace sharedp
