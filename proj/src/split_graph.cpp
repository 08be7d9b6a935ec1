#include "sharedp/split_graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <unordered_set>

namespace sharedp {

namespace {

void validate_path_set(const Graph& g, const std::vector<std::vector<VertexId>>& paths,
                       VertexId s, VertexId t) {
    std::set<VertexId> inner_seen;
    for (const auto& p : paths) {
        if (p.size() < 2 || p.front() != s || p.back() != t)
            throw UsageError("path set member is not an s->t path");
        std::set<VertexId> on_path;
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            if (!g.has_edge(p[i], p[i + 1]))
                throw UsageError("path set uses edge " + std::to_string(p[i]) + "->" +
                                 std::to_string(p[i + 1]) + " absent from the graph");
        }
        for (VertexId v : p)
            if (!on_path.insert(v).second) throw UsageError("path set member is not simple");
        for (std::size_t i = 1; i + 1 < p.size(); ++i) {
            if (p[i] == s || p[i] == t) throw UsageError("path set member revisits an endpoint");
            if (!inner_seen.insert(p[i]).second)
                throw UsageError("path set is not vertex-disjoint at vertex " + std::to_string(p[i]));
        }
    }
}

}  // namespace

ExplicitSplitGraph build_explicit_split_graph(const Graph& g,
                                              const std::vector<std::vector<VertexId>>& paths,
                                              VertexId s, VertexId t,
                                              bool with_in_adjacency) {
    validate_path_set(g, paths, s, t);
    const std::uint32_t n = g.vertex_count();

    ExplicitSplitGraph sg;
    sg.n_ = n;
    sg.pinner_.assign(n, 0);
    for (const auto& p : paths)
        for (std::size_t i = 1; i + 1 < p.size(); ++i) sg.pinner_[p[i]] = 1;

    std::unordered_set<std::uint64_t> used;  // path edges, packed tail<<32|head
    std::vector<std::uint8_t> path_tail(n, 0);
    for (const auto& p : paths)
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            used.insert((static_cast<std::uint64_t>(p[i]) << 32) | p[i + 1]);
            path_tail[p[i]] = 1;
        }

    auto in_id = [&](VertexId v) -> SplitVertexId { return sg.pinner_[v] ? v + n : v; };
    // Path vertices are few; edges from everywhere else skip the hash probe.
    auto is_used = [&](VertexId u, VertexId v) -> bool {
        return path_tail[u] && used.count((static_cast<std::uint64_t>(u) << 32) | v);
    };
    auto split_source = [&](VertexId u, VertexId v) -> SplitVertexId {
        // reversed edges leave the head side; forward edges leave the tail's
        // out-copy (the plain id either way)
        return is_used(u, v) ? in_id(v) : u;
    };
    auto split_target = [&](VertexId u, VertexId v) -> SplitVertexId {
        return is_used(u, v) ? u : in_id(v);
    };

    const std::uint64_t nn = 2ull * n;
    const std::uint64_t m_hint = g.edge_count() + n;

    // Counting-sort CSR build; each range then sorted and deduplicated (a
    // reversed edge can coincide with a parallel original edge).
    std::vector<std::uint64_t> degree(nn + 1, 0);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v : g.out_neighbors(u)) ++degree[split_source(u, v) + 1];
    for (VertexId v = 0; v < n; ++v)
        if (sg.pinner_[v]) ++degree[v + 1];  // residual internal edge v_out -> v_in
    for (std::uint64_t i = 0; i < nn; ++i) degree[i + 1] += degree[i];

    std::vector<SplitVertexId> raw(degree[nn]);
    {
        std::vector<std::uint64_t> cursor(degree.begin(), degree.end() - 1);
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v : g.out_neighbors(u)) raw[cursor[split_source(u, v)]++] = split_target(u, v);
        for (VertexId v = 0; v < n; ++v)
            if (sg.pinner_[v]) raw[cursor[v]++] = v + n;
    }

    sg.offsets_.assign(nn + 1, 0);
    sg.targets_.clear();
    sg.targets_.reserve(m_hint);
    for (std::uint64_t x = 0; x < nn; ++x) {
        auto first = raw.begin() + static_cast<std::ptrdiff_t>(degree[x]);
        auto last = raw.begin() + static_cast<std::ptrdiff_t>(degree[x + 1]);
        std::sort(first, last);
        last = std::unique(first, last);
        sg.targets_.insert(sg.targets_.end(), first, last);
        sg.offsets_[x + 1] = sg.targets_.size();
    }

    if (with_in_adjacency) {
        sg.in_offsets_.assign(nn + 1, 0);
        for (SplitVertexId b : sg.targets_) ++sg.in_offsets_[b + 1];
        for (std::uint64_t i = 0; i < nn; ++i) sg.in_offsets_[i + 1] += sg.in_offsets_[i];
        sg.in_targets_.resize(sg.targets_.size());
        std::vector<std::uint64_t> cursor(sg.in_offsets_.begin(), sg.in_offsets_.end() - 1);
        for (std::uint64_t a = 0; a < nn; ++a)
            for (std::uint64_t i = sg.offsets_[a]; i < sg.offsets_[a + 1]; ++i)
                sg.in_targets_[cursor[sg.targets_[i]]++] = static_cast<SplitVertexId>(a);
        for (std::uint64_t x = 0; x < nn; ++x)
            std::sort(sg.in_targets_.begin() + static_cast<std::ptrdiff_t>(sg.in_offsets_[x]),
                      sg.in_targets_.begin() + static_cast<std::ptrdiff_t>(sg.in_offsets_[x + 1]));
    }
    return sg;
}

namespace {

// BFS from s to t over the split-graph; FIFO queue, neighbors visited in
// ascending id order. Returns the split-space path or empty when t is
// unreachable.
std::vector<SplitVertexId> bfs_augmenting_path(const ExplicitSplitGraph& sg, VertexId s, VertexId t) {
    const std::uint32_t nn = 2 * sg.original_vertex_count();
    std::vector<SplitVertexId> pred(nn, nn);
    std::vector<std::uint8_t> seen(nn, 0);
    std::queue<SplitVertexId> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
        SplitVertexId v = q.front();
        q.pop();
        for (SplitVertexId u : sg.out_neighbors(v)) {
            if (seen[u]) continue;
            seen[u] = 1;
            pred[u] = v;
            if (u == t) {
                std::vector<SplitVertexId> path;
                for (SplitVertexId x = t; x != s; x = pred[x]) path.push_back(x);
                path.push_back(s);
                std::reverse(path.begin(), path.end());
                return path;
            }
            q.push(u);
        }
    }
    return {};
}

// Flow toggle of the augmenting path against the current path edge set, then
// decomposition back into vertex-disjoint s->t paths.
std::vector<std::vector<VertexId>> augment(const std::vector<std::vector<VertexId>>& paths,
                                           const std::vector<SplitVertexId>& split_path,
                                           VertexId s, VertexId t, std::uint32_t n) {
    std::map<VertexId, std::set<VertexId>> succ;
    for (const auto& p : paths)
        for (std::size_t i = 0; i + 1 < p.size(); ++i) succ[p[i]].insert(p[i + 1]);

    for (std::size_t i = 0; i + 1 < split_path.size(); ++i) {
        VertexId u = proj(split_path[i], n), v = proj(split_path[i + 1], n);
        if (u == v) continue;
        auto it = succ.find(v);
        if (it != succ.end() && it->second.erase(u)) continue;  // cancelled reversed edge
        succ[u].insert(v);
    }

    std::vector<std::vector<VertexId>> out;
    if (succ.count(s)) {
        for (VertexId first : succ.at(s)) {
            std::vector<VertexId> p{s, first};
            VertexId cur = first;
            std::size_t steps = 0;
            while (cur != t) {
                if (++steps > n) throw InternalError("augmented edge set does not decompose");
                const auto& nexts = succ.at(cur);
                if (nexts.size() != 1) throw InternalError("augmented edge set does not decompose");
                cur = *nexts.begin();
                p.push_back(cur);
            }
            out.push_back(std::move(p));
        }
    }
    return out;
}

}  // namespace

QueryResult maxflow_single(const Graph& g, const Query& q, std::uint32_t k,
                           std::optional<std::chrono::steady_clock::time_point> deadline) {
    auto t0 = std::chrono::steady_clock::now();
    QueryResult r;
    r.id = q.id;
    r.s = q.s;
    r.t = q.t;

    std::vector<std::vector<VertexId>> paths;
    for (std::uint32_t i = 0; i < k; ++i) {
        if (deadline && std::chrono::steady_clock::now() >= *deadline) {
            r.timed_out = true;
            break;
        }
        ExplicitSplitGraph sg = build_explicit_split_graph(g, paths, q.s, q.t);
        std::vector<SplitVertexId> aug = bfs_augmenting_path(sg, q.s, q.t);
        if (aug.empty()) break;
        paths = augment(paths, aug, q.s, q.t, g.vertex_count());
    }

    r.found = static_cast<std::uint32_t>(paths.size());
    r.paths = std::move(paths);
    r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace sharedp
