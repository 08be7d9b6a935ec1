#include "sharedp/oracle.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <set>
#include <sstream>

#include "sharedp/split_graph.hpp"

namespace sharedp {

VerifyReport verify_disjoint(const Graph& g, VertexId s, VertexId t,
                             const std::vector<std::vector<VertexId>>& paths) {
    VerifyReport rep;
    std::set<VertexId> inner_used;
    for (std::size_t pi = 0; pi < paths.size(); ++pi) {
        const auto& p = paths[pi];
        std::string tag = "path " + std::to_string(pi);
        if (p.size() < 2) {
            rep.flag(tag + ": fewer than two vertices");
            continue;
        }
        if (p.front() != s) rep.flag(tag + ": wrong start vertex " + std::to_string(p.front()));
        if (p.back() != t) rep.flag(tag + ": wrong end vertex " + std::to_string(p.back()));
        std::set<VertexId> on_path;
        for (VertexId v : p) {
            if (v >= g.vertex_count()) {
                rep.flag(tag + ": vertex " + std::to_string(v) + " outside graph");
                break;
            }
            if (!on_path.insert(v).second) rep.flag(tag + ": not simple, repeats vertex " + std::to_string(v));
        }
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            if (p[i] < g.vertex_count() && p[i + 1] < g.vertex_count() && !g.has_edge(p[i], p[i + 1]))
                rep.flag(tag + ": missing edge " + std::to_string(p[i]) + "->" + std::to_string(p[i + 1]));
        }
        for (std::size_t i = 1; i + 1 < p.size(); ++i) {
            if (p[i] == s || p[i] == t) continue;  // already reported as non-simple/endpoint issues
            if (!inner_used.insert(p[i]).second)
                rep.flag(tag + ": shared inner vertex " + std::to_string(p[i]));
        }
    }
    return rep;
}

namespace {

// Plain adjacency-list residual network for the oracle flow. Node v becomes
// v (in side) and v + n (out side) with a capacity-1 internal arc; original
// edges run out-side -> in-side. Source is s's out side, sink is t's in side.
struct FlowNet {
    struct Arc {
        std::uint32_t to;
        std::uint32_t rev;
        std::int32_t cap;
    };
    std::vector<std::vector<Arc>> arcs;

    explicit FlowNet(std::uint32_t nodes) : arcs(nodes) {}

    void add(std::uint32_t a, std::uint32_t b, std::int32_t cap) {
        arcs[a].push_back({b, static_cast<std::uint32_t>(arcs[b].size()), cap});
        arcs[b].push_back({a, static_cast<std::uint32_t>(arcs[a].size() - 1), 0});
    }

    bool augment(std::uint32_t src, std::uint32_t dst) {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> via(arcs.size(), {UINT32_MAX, 0});
        std::queue<std::uint32_t> q;
        q.push(src);
        via[src] = {src, 0};
        while (!q.empty() && via[dst].first == UINT32_MAX) {
            std::uint32_t v = q.front();
            q.pop();
            for (std::uint32_t i = 0; i < arcs[v].size(); ++i) {
                const Arc& a = arcs[v][i];
                if (a.cap <= 0 || via[a.to].first != UINT32_MAX) continue;
                via[a.to] = {v, i};
                q.push(a.to);
            }
        }
        if (via[dst].first == UINT32_MAX) return false;
        for (std::uint32_t v = dst; v != src;) {
            auto [pv, pi] = via[v];
            Arc& a = arcs[pv][pi];
            a.cap -= 1;
            arcs[a.to][a.rev].cap += 1;
            v = pv;
        }
        return true;
    }
};

}  // namespace

std::uint32_t max_disjoint_count(const Graph& g, VertexId s, VertexId t, std::uint32_t cap) {
    if (g.vertex_count() > 10000)
        throw UsageError("max_disjoint_count oracle is guarded to n <= 10000");
    if (s >= g.vertex_count() || t >= g.vertex_count() || s == t)
        throw UsageError("max_disjoint_count needs distinct in-range s, t");

    const std::uint32_t n = g.vertex_count();
    FlowNet net(2 * n);
    for (VertexId v = 0; v < n; ++v) net.add(v, v + n, 1);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v : g.out_neighbors(u)) net.add(u + n, v, 1);

    std::uint32_t flow = 0;
    while (flow < cap && net.augment(s + n, t)) ++flow;
    return flow;
}

namespace {

std::string describe_ids(const std::vector<SplitVertexId>& ids) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < ids.size(); ++i) os << (i ? "," : "") << ids[i];
    os << "}";
    return os.str();
}

}  // namespace

VerifyReport neighbor_oracle_check(const Graph& g, const ResultState& st, const Batch& batch,
                                   std::uint32_t samples, std::uint64_t seed) {
    VerifyReport rep;
    const std::uint32_t n = g.vertex_count();
    if (n == 0 || batch.queries.empty()) return rep;

    // Explicit per-query split-graphs from the state's own recorded paths.
    std::vector<ExplicitSplitGraph> split(batch.queries.size());
    for (const Query& q : batch.queries) {
        auto paths = extract_paths(q, batch.k, st);
        split[q.id] = build_explicit_split_graph(g, paths, q.s, q.t, /*with_in_adjacency=*/true);
    }

    std::mt19937_64 rng(seed);
    const std::uint32_t width = batch.width();
    constexpr std::uint32_t kMaxFindings = 32;

    for (std::uint32_t it = 0; it < samples && rep.violations.size() < kMaxFindings; ++it) {
        SplitVertexId v = static_cast<SplitVertexId>(rng() % (2 * n));
        QuerySet b(width);
        for (std::uint32_t qid = 0; qid < width; ++qid)
            if (rng() & 1) b.set(qid);
        if (it % 4 == 0) b = QuerySet::full(width);  // exercise full sets too

        NeighborAnswer out = get_out_neighbors(v, b, g, st);
        NeighborAnswer in = get_in_neighbors(v, b, g, st);

        b.for_each([&](std::uint32_t qid) {
            const ExplicitSplitGraph& sg = split[qid];

            auto merged_targets = [&](const NeighborAnswer& ans) {
                std::vector<SplitVertexId> ids;
                for (const auto& [u, qs] : ans.entries)
                    if (qs.test(qid)) ids.push_back(u);
                return ids;
            };
            auto explicit_targets = [&](std::span<const SplitVertexId> adj) {
                // Non-existent split vertices have empty adjacency by
                // construction; a query must then appear in no entry.
                return std::vector<SplitVertexId>(adj.begin(), adj.end());
            };

            std::vector<SplitVertexId> got_out = merged_targets(out);
            std::vector<SplitVertexId> want_out = explicit_targets(sg.out_neighbors(v));
            if (got_out != want_out)
                rep.flag("out-neighbors mismatch at split vertex " + std::to_string(v) + " query " +
                         std::to_string(qid) + ": merged " + describe_ids(got_out) + " explicit " +
                         describe_ids(want_out));

            std::vector<SplitVertexId> got_in = merged_targets(in);
            std::vector<SplitVertexId> want_in = explicit_targets(sg.in_neighbors(v));
            if (got_in != want_in)
                rep.flag("in-neighbors mismatch at split vertex " + std::to_string(v) + " query " +
                         std::to_string(qid) + ": merged " + describe_ids(got_in) + " explicit " +
                         describe_ids(want_in));
        });
    }
    return rep;
}

}  // namespace sharedp
