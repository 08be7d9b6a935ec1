#include "sharedp/engine.hpp"

#include <algorithm>

namespace sharedp {

SearchState::SearchState(std::uint32_t split_vertex_count, std::uint32_t width)
    : width(width),
      s_seen(split_vertex_count, QuerySet(width)),
      t_seen(split_vertex_count, QuerySet(width)),
      pred(split_vertex_count),
      succ(split_vertex_count),
      undone(width),
      tag_scratch(width),
      touched_flag_(split_vertex_count, 0) {}

void SearchState::touch(SplitVertexId x) {
    if (!touched_flag_[x]) {
        touched_flag_[x] = 1;
        touched_.push_back(x);
    }
}

void SearchState::reset(const Batch& batch, const QuerySet& live) {
    for (SplitVertexId x : touched_) {
        s_seen[x].clear();
        t_seen[x].clear();
        pred[x].clear();
        succ[x].clear();
        touched_flag_[x] = 0;
    }
    touched_.clear();
    s_queue.clear();
    s_nextqueue.clear();
    t_queue.clear();
    t_nextqueue.clear();
    joint.clear();
    undone = live;
    level_scratch = LevelStats{};
    tag_scratch = live;

    for (const Query& q : batch.queries) {
        if (!live.test(q.id)) continue;
        touch(q.s);
        touch(q.t);
        s_seen[q.s].set(q.id);
        t_seen[q.t].set(q.id);
        auto [sit, s_new] = s_queue.try_emplace(q.s, QuerySet(width));
        sit->second.set(q.id);
        auto [tit, t_new] = t_queue.try_emplace(q.t, QuerySet(width));
        tit->second.set(q.id);
    }
}

namespace {

template <bool Forward>
void expand(SplitVertexId v, const QuerySet& b, const Graph& g, const ResultState& st,
            SearchState& ss) {
    QuerySet beff = b & ss.undone;
    if (beff.none()) return;

    auto& seen = Forward ? ss.s_seen : ss.t_seen;
    auto& other_seen = Forward ? ss.t_seen : ss.s_seen;
    auto& claims = Forward ? ss.pred : ss.succ;
    auto& nextqueue = Forward ? ss.s_nextqueue : ss.t_nextqueue;

    ss.level_scratch.entries_expanded += 1;
    ss.level_scratch.query_expansions += beff.count();
    if (beff.count() >= 2) ss.level_scratch.shared_entries += 1;

    NeighborAnswer ans =
        Forward ? get_out_neighbors(v, beff, g, st) : get_in_neighbors(v, beff, g, st);

    const std::uint64_t words = beff.word_count();
    for (auto& [u, bprime] : ans.entries) {
        QuerySet d = bprime.minus(seen[u]);
        if (d.none()) continue;
        ss.touch(u);
        seen[u] |= d;
        claims[u].emplace_back(v, d);
        ss.tag_scratch |= d;
        ss.level_scratch.words_ored += 4 * words;

        QuerySet meet = d & other_seen[u];
        meet &= ss.undone;
        if (meet.any()) {
            auto [it, fresh] = ss.joint.try_emplace(u, QuerySet(ss.width));
            it->second |= meet;
            ss.undone.andnot(meet);
            ss.level_scratch.words_ored += 2 * words;
        }
        QuerySet rest = d.minus(meet);
        if (rest.any()) {
            auto [it, fresh] = nextqueue.try_emplace(u, QuerySet(ss.width));
            it->second |= rest;
            ss.level_scratch.words_ored += words;
        }
    }
}

}  // namespace

void forward_expand(SplitVertexId v, const QuerySet& b, const Graph& g, const ResultState& st,
                    SearchState& ss) {
    expand<true>(v, b, g, st, ss);
}

void backward_expand(SplitVertexId v, const QuerySet& b, const Graph& g, const ResultState& st,
                     SearchState& ss) {
    expand<false>(v, b, g, st, ss);
}

namespace {

// Lowest split id whose claim list carries q; claim lists hold at most one
// match per query under the first-claim rule.
SplitVertexId follow_claim(const std::vector<std::pair<SplitVertexId, QuerySet>>& claims,
                           std::uint32_t qid, SplitVertexId at) {
    bool found = false;
    SplitVertexId best = 0;
    for (const auto& [v, qs] : claims) {
        if (qs.test(qid) && (!found || v < best)) {
            best = v;
            found = true;
        }
    }
    if (!found)
        throw InternalError("broken search chain at split vertex " + std::to_string(at) +
                            " for query " + std::to_string(qid));
    return best;
}

}  // namespace

std::vector<SplitVertexId> reconstruct_path(const Query& q, const SearchState& ss) {
    SplitVertexId meet_at = 0;
    int matches = 0;
    for (const auto& [u, qs] : ss.joint) {
        if (qs.test(q.id)) {
            if (matches == 0) meet_at = u;
            ++matches;
        }
    }
    if (matches != 1)
        throw InternalError("query " + std::to_string(q.id) + " has " + std::to_string(matches) +
                            " joint vertices");

    const std::size_t guard = ss.s_seen.size() + 2;
    std::vector<SplitVertexId> path{meet_at};
    for (SplitVertexId cur = meet_at; cur != q.s;) {
        cur = follow_claim(ss.pred[cur], q.id, cur);
        path.push_back(cur);
        if (path.size() > guard) throw InternalError("pred walk does not reach s");
    }
    std::reverse(path.begin(), path.end());
    for (SplitVertexId cur = meet_at; cur != q.t;) {
        cur = follow_claim(ss.succ[cur], q.id, cur);
        path.push_back(cur);
        if (path.size() > 2 * guard) throw InternalError("succ walk does not reach t");
    }
    return path;
}

double TraversalStats::mean_shared_ratio() const {
    if (levels.empty()) return 0.0;
    double sum = 0.0;
    for (const auto& l : levels) sum += l.shared_ratio();
    return sum / static_cast<double>(levels.size());
}

double TraversalStats::min_shared_ratio() const {
    double m = 1.0;
    if (levels.empty()) return 0.0;
    for (const auto& l : levels) m = std::min(m, l.shared_ratio());
    return m;
}

double TraversalStats::max_shared_ratio() const {
    double m = 0.0;
    for (const auto& l : levels) m = std::max(m, l.shared_ratio());
    return m;
}

std::vector<QueryResult> sharedp_batch(const Graph& g, const Batch& batch,
                                       const SharedpOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::uint32_t n = g.vertex_count();
    const std::uint32_t width = batch.width();

    std::vector<QueryResult> results(batch.queries.size());
    for (const Query& q : batch.queries) {
        results[q.id].id = q.id;
        results[q.id].s = q.s;
        results[q.id].t = q.t;
    }
    if (batch.queries.empty()) return results;

    ResultState st = init_state(batch, g);
    SearchState ss(2 * n, width);
    QuerySet live = batch.full_set();
    std::vector<std::uint32_t> found(width, 0);
    QuerySet timed_out(width);

    auto past_deadline = [&] {
        return opts.deadline && std::chrono::steady_clock::now() >= *opts.deadline;
    };

    for (std::uint32_t iter = 1; iter <= batch.k && live.any(); ++iter) {
        if (past_deadline()) {
            timed_out = live;
            break;
        }
        ss.reset(batch, live);

        std::uint32_t level = 0;
        bool budget_hit = false;
        auto flush_level = [&](char dir) {
            if (opts.stats) {
                ss.level_scratch.iteration = iter;
                ss.level_scratch.level = level;
                ss.level_scratch.direction = dir;
                opts.stats->levels.push_back(ss.level_scratch);
            }
            ss.level_scratch = LevelStats{};
            ++level;
        };

        while (ss.undone.any() && !ss.s_queue.empty() && !ss.t_queue.empty()) {
            for (const auto& [v, b] : ss.s_queue) forward_expand(v, b, g, st, ss);
            ss.s_queue.swap(ss.s_nextqueue);
            ss.s_nextqueue.clear();
            flush_level('f');
            if (ss.undone.none()) break;
            if (past_deadline()) {
                budget_hit = true;
                break;
            }

            for (const auto& [v, b] : ss.t_queue) backward_expand(v, b, g, st, ss);
            ss.t_queue.swap(ss.t_nextqueue);
            ss.t_nextqueue.clear();
            flush_level('b');
            if (past_deadline()) {
                budget_hit = true;
                break;
            }
        }

        if (opts.stats) opts.stats->iterations.push_back({iter, ss.tag_scratch, live});
        if (budget_hit) {
            timed_out = live;
            break;
        }

        QuerySet met = live.minus(ss.undone);

        // Queries sharing the identical split-space path are applied together
        // with their union set; groups go in order of first member.
        std::vector<std::pair<std::vector<SplitVertexId>, QuerySet>> groups;
        met.for_each([&](std::uint32_t qid) {
            std::vector<SplitVertexId> path = reconstruct_path(batch.queries[qid], ss);
            for (auto& [gpath, gset] : groups) {
                if (gpath == path) {
                    gset.set(qid);
                    return;
                }
            }
            groups.emplace_back(std::move(path), QuerySet::single(width, qid));
        });
        for (const auto& [path, qs] : groups) apply_augmenting_path(path, qs, st, batch);

        met.for_each([&](std::uint32_t qid) { found[qid] = iter; });
        live = met;
    }

    const double total =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (const Query& q : batch.queries) {
        QueryResult& r = results[q.id];
        r.found = found[q.id];
        if (r.found > 0) r.paths = extract_paths(q, batch.k, st);
        r.elapsed_seconds = total / static_cast<double>(batch.queries.size());
        r.timed_out = timed_out.test(q.id);
    }
    return results;
}

}  // namespace sharedp
