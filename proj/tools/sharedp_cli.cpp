#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sharedp/runner.hpp"

namespace {

using namespace sharedp;

std::vector<std::uint32_t> parse_sizes(const std::string& csv) {
    std::vector<std::uint32_t> sizes;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        sizes.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    }
    return sizes;
}

std::ostream& open_out(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw UsageError("cannot open output file: " + path);
    return file;
}

int cmd_run(const RunConfig& config) {
    RunReport report = run(config);
    std::ofstream file;
    std::ostream& os = open_out(config.out_path, file);
    write_report_ndjson(os, report);
    if (!report.verified) {
        for (const auto& v : report.violations) std::cerr << "verification: " << v << '\n';
        return 1;
    }
    return 0;
}

int cmd_generate(const RunConfig& config, std::uint32_t count) {
    Graph g = load_graph(config.graph_path, config.undirected);
    GeneratedBatch gen = generate_queries(g, config.k, count, config.seed);

    std::ofstream file;
    std::ostream& os = open_out(config.out_path, file);
    save_queries(os, gen.batch);

    nlohmann::json meta{{"type", "generate_meta"},
                        {"requested_k", gen.requested_k},
                        {"final_k", gen.final_k},
                        {"count", gen.batch.queries.size()},
                        {"attempts", gen.attempts},
                        {"reductions", gen.reductions},
                        {"seed", config.seed},
                        {"sampling", "uniform-over-qualifying-pairs"}};
    (config.out_path.empty() ? std::cerr : std::cout) << meta.dump() << '\n';
    return 0;
}

int cmd_verify(const RunConfig& config, const std::string& report_path) {
    Graph g = load_graph(config.graph_path, config.undirected);
    VerifyReport rep = verify_report_file(g, report_path);
    if (rep.ok) {
        std::cout << "ok\n";
        return 0;
    }
    for (const auto& v : rep.violations) std::cout << "violation: " << v << '\n';
    return 1;
}

int cmd_bench(const RunConfig& config, const std::string& sizes_csv) {
    std::vector<std::uint32_t> sizes = parse_sizes(sizes_csv);
    std::vector<RunReport> reports = bench_scaling(config, sizes);
    std::ofstream file;
    std::ostream& os = open_out(config.out_path, file);
    write_bench_ndjson(os, reports, sizes);
    for (const auto& r : reports)
        if (!r.verified) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"batch k-vertex-disjoint-paths engine"};
    app.require_subcommand(1);

    RunConfig config;
    std::string engine = "sharedp";
    std::uint32_t count = 0;
    std::string sizes_csv;
    std::string report_path;

    auto add_common = [&](CLI::App* cmd, bool needs_graph = true) {
        auto* g = cmd->add_option("--graph", config.graph_path, "edge-list graph file");
        if (needs_graph) g->required();
        cmd->add_option("--k", config.k, "disjoint paths per query");
        cmd->add_option("--seed", config.seed, "random seed");
        cmd->add_option("--timeout", config.timeout_seconds, "per-query time limit in seconds");
        cmd->add_option("--out", config.out_path, "output file (default stdout)");
        cmd->add_flag("--undirected", config.undirected, "insert each edge in both directions");
    };

    CLI::App* run_cmd = app.add_subcommand("run", "execute an engine over a query workload");
    add_common(run_cmd);
    run_cmd->add_option("--queries", config.queries_path, "query file (one 's t' per line)");
    run_cmd->add_option("--count", count, "generate this many queries instead of loading");
    run_cmd->add_option("--engine", engine, "sharedp|maxflow|oracle");

    CLI::App* gen_cmd = app.add_subcommand("generate", "emit a solvable query workload");
    add_common(gen_cmd);
    gen_cmd->add_option("--count", count, "number of queries")->required();

    CLI::App* verify_cmd = app.add_subcommand("verify", "re-check the paths in a run report");
    add_common(verify_cmd);
    verify_cmd->add_option("--report", report_path, "NDJSON report file")->required();

    CLI::App* bench_cmd = app.add_subcommand("bench", "sharedp scaling over query-set prefixes");
    add_common(bench_cmd);
    bench_cmd->add_option("--queries", config.queries_path, "query file");
    bench_cmd->add_option("--count", count, "generate this many queries instead of loading");
    bench_cmd->add_option("--sizes", sizes_csv, "comma-separated ascending prefix sizes")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        config.engine = parse_engine(engine);
        if (count > 0 && config.queries_path.empty()) config.generate_count = count;

        if (run_cmd->parsed()) return cmd_run(config);
        if (gen_cmd->parsed()) return cmd_generate(config, count);
        if (verify_cmd->parsed()) return cmd_verify(config, report_path);
        if (bench_cmd->parsed()) return cmd_bench(config, sizes_csv);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
