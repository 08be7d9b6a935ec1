#include "sharedp/runner.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace sharedp {

using nlohmann::json;

Engine parse_engine(const std::string& name) {
    if (name == "sharedp") return Engine::Sharedp;
    if (name == "maxflow") return Engine::Maxflow;
    if (name == "oracle") return Engine::Oracle;
    throw UsageError("unknown engine '" + name + "' (expected sharedp|maxflow|oracle)");
}

std::string engine_name(Engine e) {
    switch (e) {
        case Engine::Sharedp: return "sharedp";
        case Engine::Maxflow: return "maxflow";
        case Engine::Oracle: return "oracle";
    }
    return "?";
}

namespace {

Batch obtain_batch(const RunConfig& config, const Graph& g, RunReport& report) {
    if (!config.queries_path.empty()) {
        report.final_k = config.k;
        return load_queries(config.queries_path, g, config.k);
    }
    if (config.generate_count) {
        GeneratedBatch gen = generate_queries(g, config.k, *config.generate_count, config.seed);
        report.generated = true;
        report.final_k = gen.final_k;
        return std::move(gen.batch);
    }
    throw UsageError("no queries: provide a query file or a generate count");
}

std::vector<QueryResult> execute(const RunConfig& config, const Graph& g, const Batch& batch,
                                 RunReport& report) {
    if (config.timeout_seconds <= 0) throw UsageError("timeout must be > 0");
    auto now = std::chrono::steady_clock::now();

    switch (config.engine) {
        case Engine::Sharedp: {
            TraversalStats stats;
            SharedpOptions opts;
            opts.stats = &stats;
            opts.deadline = now + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                      std::chrono::duration<double>(config.timeout_seconds *
                                                                    batch.queries.size()));
            auto results = sharedp_batch(g, batch, opts);
            report.share.present = true;
            report.share.mean = stats.mean_shared_ratio();
            report.share.min = stats.min_shared_ratio();
            report.share.max = stats.max_shared_ratio();
            report.share_levels = std::move(stats.levels);
            return results;
        }
        case Engine::Maxflow: {
            std::vector<QueryResult> results;
            results.reserve(batch.queries.size());
            for (const Query& q : batch.queries) {
                auto deadline = std::chrono::steady_clock::now() +
                                std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                    std::chrono::duration<double>(config.timeout_seconds));
                results.push_back(maxflow_single(g, q, batch.k, deadline));
            }
            return results;
        }
        case Engine::Oracle: {
            std::vector<QueryResult> results;
            results.reserve(batch.queries.size());
            for (const Query& q : batch.queries) {
                auto q0 = std::chrono::steady_clock::now();
                QueryResult r;
                r.id = q.id;
                r.s = q.s;
                r.t = q.t;
                r.found = max_disjoint_count(g, q.s, q.t, batch.k);
                r.elapsed_seconds =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - q0).count();
                results.push_back(std::move(r));
            }
            return results;
        }
    }
    throw UsageError("unreachable engine");
}

}  // namespace

RunReport run(const RunConfig& config) {
    RunReport report;
    report.engine = engine_name(config.engine);
    report.k = config.k;
    report.seed = config.seed;

    Graph g = load_graph(config.graph_path, config.undirected);
    Batch batch = obtain_batch(config, g, report);
    report.k = batch.k;

    report.records = execute(config, g, batch, report);

    double total = 0.0;
    for (const QueryResult& r : report.records) total += r.elapsed_seconds;
    report.mean_query_seconds =
        report.records.empty() ? 0.0 : total / static_cast<double>(report.records.size());

    // Paths are re-verified before the report leaves the process; the oracle
    // engine emits counts only, so it has nothing to verify.
    if (config.engine != Engine::Oracle) {
        for (const QueryResult& r : report.records) {
            if (r.paths.size() != r.found) {
                report.verified = false;
                report.violations.push_back("query " + std::to_string(r.id) + ": found=" +
                                            std::to_string(r.found) + " but " +
                                            std::to_string(r.paths.size()) + " paths");
                continue;
            }
            VerifyReport v = verify_disjoint(g, r.s, r.t, r.paths);
            if (!v.ok) {
                report.verified = false;
                for (const auto& f : v.violations)
                    report.violations.push_back("query " + std::to_string(r.id) + ": " + f);
            }
        }
    }
    return report;
}

std::vector<RunReport> bench_scaling(const RunConfig& config,
                                     const std::vector<std::uint32_t>& sizes) {
    for (std::size_t i = 1; i < sizes.size(); ++i)
        if (sizes[i] <= sizes[i - 1]) throw UsageError("bench sizes must be strictly ascending");
    if (sizes.empty()) throw UsageError("bench needs at least one size");

    Graph g = load_graph(config.graph_path, config.undirected);
    RunReport probe;  // only used to materialize the full query set once
    Batch full = obtain_batch(config, g, probe);
    if (full.queries.empty()) throw UsageError("bench needs a nonempty query set");

    std::vector<RunReport> reports;
    for (std::uint32_t size : sizes) {
        if (size > full.queries.size())
            throw UsageError("bench size " + std::to_string(size) + " exceeds query count " +
                             std::to_string(full.queries.size()));
        Batch prefix;
        prefix.k = full.k;
        prefix.queries.assign(full.queries.begin(), full.queries.begin() + size);

        RunReport rep;
        rep.engine = engine_name(Engine::Sharedp);
        rep.k = full.k;
        rep.final_k = probe.final_k;
        rep.generated = probe.generated;
        rep.seed = config.seed;

        TraversalStats stats;
        SharedpOptions opts;
        opts.stats = &stats;
        opts.deadline = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(config.timeout_seconds * size));
        rep.records = sharedp_batch(g, prefix, opts);
        rep.share.present = true;
        rep.share.mean = stats.mean_shared_ratio();
        rep.share.min = stats.min_shared_ratio();
        rep.share.max = stats.max_shared_ratio();
        rep.share_levels = std::move(stats.levels);

        double total = 0.0;
        for (const QueryResult& r : rep.records) total += r.elapsed_seconds;
        rep.mean_query_seconds = total / static_cast<double>(size);

        for (const QueryResult& r : rep.records) {
            if (r.paths.size() != r.found) {
                rep.verified = false;
                continue;
            }
            VerifyReport v = verify_disjoint(g, r.s, r.t, r.paths);
            if (!v.ok) rep.verified = false;
        }
        reports.push_back(std::move(rep));
    }
    return reports;
}

namespace {

json record_json(const QueryResult& r) {
    return json{{"type", "query"},       {"id", r.id},
                {"s", r.s},              {"t", r.t},
                {"found", r.found},      {"elapsed_seconds", r.elapsed_seconds},
                {"timed_out", r.timed_out}, {"paths", r.paths}};
}

json aggregate_json(const RunReport& rep) {
    json j{{"type", "aggregate"},
           {"engine", rep.engine},
           {"k", rep.k},
           {"q_count", rep.records.size()},
           {"seed", rep.seed},
           {"mean_query_seconds", rep.mean_query_seconds},
           {"verified", rep.verified}};
    if (rep.generated) {
        j["final_k"] = rep.final_k;
        j["sampling"] = "uniform-over-qualifying-pairs";
    }
    if (rep.share.present) {
        j["share_ratio_mean"] = rep.share.mean;
        j["share_ratio_min"] = rep.share.min;
        j["share_ratio_max"] = rep.share.max;
        // per-level counters: [iteration, level, direction, entries expanded,
        // shared entries, query expansions, queryset words OR-ed]
        json levels = json::array();
        for (const LevelStats& l : rep.share_levels)
            levels.push_back({l.iteration, l.level, std::string(1, l.direction),
                              l.entries_expanded, l.shared_entries, l.query_expansions,
                              l.words_ored});
        j["share_levels"] = std::move(levels);
    }
    if (!rep.violations.empty()) j["violations"] = rep.violations;
    return j;
}

}  // namespace

void write_report_ndjson(std::ostream& os, const RunReport& report) {
    for (const QueryResult& r : report.records) os << record_json(r).dump() << '\n';
    os << aggregate_json(report).dump() << '\n';
}

void write_bench_ndjson(std::ostream& os, const std::vector<RunReport>& reports,
                        const std::vector<std::uint32_t>& sizes) {
    for (std::size_t i = 0; i < reports.size(); ++i) {
        json j = aggregate_json(reports[i]);
        j["type"] = "bench_size";
        j["size"] = sizes[i];
        os << j.dump() << '\n';
    }
}

VerifyReport verify_report_file(const Graph& g, const std::string& report_path) {
    std::ifstream in(report_path);
    if (!in) throw LoadError("cannot open report file: " + report_path);

    std::vector<json> queries;
    std::string engine = "sharedp";
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error& e) {
            throw LoadError(report_path + ":" + std::to_string(lineno) + ": bad JSON: " + e.what());
        }
        std::string type = j.value("type", "");
        if (type == "query") queries.push_back(std::move(j));
        else if (type == "aggregate") engine = j.value("engine", engine);
    }

    VerifyReport rep;
    const bool counts_only = engine == "oracle";
    for (const json& j : queries) {
        VertexId s = j.at("s").get<VertexId>();
        VertexId t = j.at("t").get<VertexId>();
        auto paths = j.at("paths").get<std::vector<std::vector<VertexId>>>();
        std::uint32_t found = j.at("found").get<std::uint32_t>();
        std::string id = std::to_string(j.at("id").get<std::uint64_t>());
        if (!counts_only && paths.size() != found)
            rep.flag("record " + id + ": found=" + std::to_string(found) + " but " +
                     std::to_string(paths.size()) + " paths");
        VerifyReport v = verify_disjoint(g, s, t, paths);
        if (!v.ok)
            for (const auto& f : v.violations) rep.flag("record " + id + ": " + f);
    }
    if (queries.empty()) rep.flag("no query records in " + report_path);
    return rep;
}

}  // namespace sharedp
