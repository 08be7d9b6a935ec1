#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sharedp/engine.hpp"
#include "sharedp/generator.hpp"
#include "sharedp/graph.hpp"
#include "sharedp/oracle.hpp"
#include "sharedp/query.hpp"

namespace sharedp {

enum class Engine { Sharedp, Maxflow, Oracle };

Engine parse_engine(const std::string& name);
std::string engine_name(Engine e);

struct RunConfig {
    std::string graph_path;
    std::string queries_path;                    // or generate on the fly:
    std::optional<std::uint32_t> generate_count;
    std::uint32_t k = 1;
    Engine engine = Engine::Sharedp;
    std::uint64_t seed = 0;
    double timeout_seconds = 200.0;  // per query; sharedp gets timeout * |Q| as a batch budget
    std::string out_path;            // empty = stdout
    bool undirected = false;
};

struct ShareRatioStats {
    bool present = false;
    double mean = 0.0;
    double min = 0.0;
    double max = 0.0;
};

struct RunReport {
    std::string engine;
    std::uint32_t k = 0;
    std::uint64_t seed = 0;
    std::uint32_t final_k = 0;            // equals k unless generation reduced it
    bool generated = false;
    std::vector<QueryResult> records;     // one per query, id order
    double mean_query_seconds = 0.0;
    ShareRatioStats share;
    std::vector<LevelStats> share_levels;  // sharedp only
    bool verified = true;
    std::vector<std::string> violations;
};

// Loads (or generates) the workload, executes the chosen engine under the
// configured time limit, verifies every emitted path set, and assembles the
// report. Verification failure is reported, not thrown.
RunReport run(const RunConfig& config);

// Runs sharedp on ascending prefixes of the query set; one report per size.
std::vector<RunReport> bench_scaling(const RunConfig& config, const std::vector<std::uint32_t>& sizes);

// One JSON object per query record plus a trailing aggregate record.
void write_report_ndjson(std::ostream& os, const RunReport& report);

// One aggregate object per size.
void write_bench_ndjson(std::ostream& os, const std::vector<RunReport>& reports,
                        const std::vector<std::uint32_t>& sizes);

// Re-checks the per-query records of a previously written report file.
VerifyReport verify_report_file(const Graph& g, const std::string& report_path);

}  // namespace sharedp
