#include "sharedp/result_state.hpp"

#include <algorithm>

namespace sharedp {

ResultState::ResultState(const Batch& batch, const Graph& g)
    : n_(g.vertex_count()),
      width_(batch.width()),
      nexthops_(n_),
      prehops_(n_),
      is_pinner_(n_, QuerySet(width_)),
      is_s_(n_, QuerySet(width_)),
      is_t_(n_, QuerySet(width_)) {
    for (const Query& q : batch.queries) {
        if (q.s >= n_ || q.t >= n_) throw UsageError("query endpoint outside graph");
        is_s_[q.s].set(q.id);
        is_t_[q.t].set(q.id);
    }
}

ResultState init_state(const Batch& batch, const Graph& g) { return ResultState(batch, g); }

const QuerySet* ResultState::nexthop_set(VertexId u, VertexId v) const {
    auto it = nexthops_[u].find(v);
    return it == nexthops_[u].end() ? nullptr : &it->second;
}

const QuerySet* ResultState::prehop_set(VertexId v, VertexId u) const {
    auto it = prehops_[v].find(u);
    return it == prehops_[v].end() ? nullptr : &it->second;
}

namespace {

void finish_answer(std::vector<std::pair<SplitVertexId, QuerySet>>& entries, NeighborAnswer& ans) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& e : entries) {
        if (e.second.none()) continue;
        if (!ans.entries.empty() && ans.entries.back().first == e.first)
            ans.entries.back().second |= e.second;  // parallel original/reversed edge
        else
            ans.entries.push_back(std::move(e));
    }
}

}  // namespace

NeighborAnswer get_out_neighbors(SplitVertexId v, const QuerySet& b, const Graph& g,
                                 const ResultState& st) {
    const std::uint32_t n = g.vertex_count();
    const VertexId pv = proj(v, n);
    NeighborAnswer ans;
    std::vector<std::pair<SplitVertexId, QuerySet>> entries;

    if (is_in_copy(v, n)) {
        // v_in: reversed path edges toward each prehop's out-copy. v_in only
        // exists for queries where v is P-inner.
        QuerySet bv = b & st.is_pinner(pv);
        if (bv.none()) return ans;
        for (const auto& [u, qs] : st.prehops_of(pv)) {
            QuerySet sub = bv & qs;
            if (sub.any()) entries.emplace_back(u, std::move(sub));
        }
    } else {
        // Plain id: v itself, or v's out-copy for queries where v is P-inner.
        for (VertexId u : g.out_neighbors(pv)) {
            QuerySet have = b;
            if (const QuerySet* used = st.nexthop_set(pv, u)) have.andnot(*used);
            if (have.none()) continue;
            const QuerySet& pin = st.is_pinner(u);
            if (have.intersects(pin)) entries.emplace_back(in_copy(u, n), have & pin);
            QuerySet plain = have.minus(pin);
            if (plain.any()) entries.emplace_back(u, std::move(plain));
        }
        // Internal edge v_out -> v_in.
        QuerySet internal = b & st.is_pinner(pv);
        if (internal.any()) entries.emplace_back(in_copy(pv, n), std::move(internal));
        // Reversed path edges leave the plain id when v is the query's own
        // target (targets are never split; their used in-edges reverse to
        // t -> prehop_out).
        for (const auto& [u, qs] : st.prehops_of(pv)) {
            QuerySet sub = (b & qs).minus(st.is_pinner(pv));
            if (sub.any()) entries.emplace_back(u, std::move(sub));
        }
    }

    finish_answer(entries, ans);
    return ans;
}

NeighborAnswer get_in_neighbors(SplitVertexId v, const QuerySet& b, const Graph& g,
                                const ResultState& st) {
    const std::uint32_t n = g.vertex_count();
    const VertexId pv = proj(v, n);
    NeighborAnswer ans;
    std::vector<std::pair<SplitVertexId, QuerySet>> entries;

    if (is_in_copy(v, n)) {
        // v_in receives the redirected unused in-edges and the internal edge.
        QuerySet bv = b & st.is_pinner(pv);
        if (bv.none()) return ans;
        for (VertexId u : g.in_neighbors(pv)) {
            QuerySet have = bv;
            if (const QuerySet* used = st.prehop_set(pv, u)) have.andnot(*used);
            if (have.any()) entries.emplace_back(u, std::move(have));
        }
        entries.emplace_back(pv, std::move(bv));  // v_out -> v_in
    } else {
        // Plain id. Reversed used out-edges point into v_out (or into s when
        // v is the query's own source): source is the nexthop's in-copy, or
        // its plain id when the nexthop is the query's target.
        for (const auto& [u, qs] : st.nexthops_of(pv)) {
            QuerySet sub = b & qs;
            if (sub.none()) continue;
            const QuerySet& pin = st.is_pinner(u);
            if (sub.intersects(pin)) entries.emplace_back(in_copy(u, n), sub & pin);
            QuerySet plain = sub.minus(pin);
            if (plain.any()) entries.emplace_back(u, std::move(plain));
        }
        // Unused original in-edges reach the plain id only for queries where
        // v is not P-inner (otherwise they are redirected into v_in).
        for (VertexId u : g.in_neighbors(pv)) {
            QuerySet have = b.minus(st.is_pinner(pv));
            if (const QuerySet* used = st.prehop_set(pv, u)) have.andnot(*used);
            if (have.any()) entries.emplace_back(u, std::move(have));
        }
    }

    finish_answer(entries, ans);
    return ans;
}

void ResultState::add_edge(VertexId u, VertexId v, const QuerySet& qs) {
    auto [it, inserted] = nexthops_[u].try_emplace(v, qs);
    if (!inserted) it->second |= qs;
    auto [jt, jnew] = prehops_[v].try_emplace(u, qs);
    if (!jnew) jt->second |= qs;
}

void ResultState::remove_edge(VertexId u, VertexId v, const QuerySet& qs) {
    auto it = nexthops_[u].find(v);
    if (it != nexthops_[u].end()) {
        it->second.andnot(qs);
        if (it->second.none()) nexthops_[u].erase(it);
    }
    auto jt = prehops_[v].find(u);
    if (jt != prehops_[v].end()) {
        jt->second.andnot(qs);
        if (jt->second.none()) prehops_[v].erase(jt);
    }
}

void ResultState::refresh_pinner(VertexId v, const QuerySet& touched) {
    QuerySet has_next(width_);
    for (const auto& [u, qs] : nexthops_[v]) has_next |= qs;
    has_next &= touched;
    has_next.andnot(is_s_[v]);
    has_next.andnot(is_t_[v]);
    is_pinner_[v].andnot(touched);
    is_pinner_[v] |= has_next;
}

void apply_augmenting_path(std::span<const SplitVertexId> path, const QuerySet& b,
                           ResultState& st, const Batch& batch) {
    (void)batch;
    if (path.size() < 2) throw InternalError("augmenting path too short");
    const std::uint32_t n = st.vertex_count();

    // Endpoint precondition: path[0] is every member's s, path.back() its t.
    if (!b.is_subset_of(st.is_s(proj(path.front(), n))) ||
        !b.is_subset_of(st.is_t(proj(path.back(), n))))
        throw InternalError("augmenting path endpoints do not match query endpoints");

    // Edge precondition against the pre-application state: every step must be
    // a merged split-graph edge carrying all of b. (Membership of forward
    // steps in E itself is the caller's contract; everything expressible from
    // the state is checked here.)
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        SplitVertexId x = path[i], y = path[i + 1];
        bool ok = false;
        if (proj(x, n) == proj(y, n)) {
            // internal hop: out-copy to in-copy of a P-inner vertex
            ok = !is_in_copy(x, n) && is_in_copy(y, n) && b.is_subset_of(st.is_pinner(proj(x, n)));
        } else if (is_in_copy(x, n)) {
            // reversed edge from an in-copy: y must be the prehop's out-copy
            const QuerySet* qs = st.prehop_set(proj(x, n), proj(y, n));
            ok = !is_in_copy(y, n) && qs && b.is_subset_of(*qs) &&
                 b.is_subset_of(st.is_pinner(proj(x, n)));
        } else {
            const VertexId u = proj(x, n), v = proj(y, n);
            const QuerySet* used = st.nexthop_set(u, v);
            if (is_in_copy(y, n)) {
                // forward unused edge redirected into v_in
                ok = (!used || !b.intersects(*used)) && b.is_subset_of(st.is_pinner(v));
            } else {
                // Plain target: forward unused edge with a non-P-inner head,
                // or the reversal of used edge (v, u) leaving a plain target
                // vertex. Queries may qualify through either route.
                QuerySet valid = b.minus(st.is_pinner(v));
                if (used) valid.andnot(*used);
                if (const QuerySet* rev = st.prehop_set(u, v)) {
                    QuerySet via_reversal = (*rev & b).minus(st.is_pinner(u));
                    valid |= via_reversal;
                }
                ok = b.is_subset_of(valid);
            }
        }
        if (!ok)
            throw InternalError("augmenting path step " + std::to_string(x) + "->" +
                                std::to_string(y) + " is not a split-graph edge for the whole set");
    }

    // Flow toggle per proj-distinct step.
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        VertexId u = proj(path[i], n), v = proj(path[i + 1], n);
        if (u == v) continue;
        QuerySet cancel(st.width());
        if (const QuerySet* rev = st.prehop_set(u, v)) cancel = *rev & b;
        if (cancel.any()) st.remove_edge(v, u, cancel);
        QuerySet add = b.minus(cancel);
        if (add.any()) st.add_edge(u, v, add);
    }

    for (SplitVertexId x : path) st.refresh_pinner(proj(x, n), b);
}

std::vector<std::vector<VertexId>> extract_paths(const Query& q, std::uint32_t k,
                                                 const ResultState& st) {
    std::vector<std::vector<VertexId>> paths;
    std::vector<VertexId> first_hops;
    for (const auto& [u, qs] : st.nexthops_of(q.s))
        if (qs.test(q.id)) first_hops.push_back(u);
    if (first_hops.size() > k)
        throw InternalError("query " + std::to_string(q.id) + " has more first hops than k");

    for (VertexId hop : first_hops) {
        std::vector<VertexId> path{q.s, hop};
        VertexId cur = hop;
        std::size_t steps = 0;
        while (cur != q.t) {
            if (++steps > st.vertex_count())
                throw InternalError("nexthop chain does not terminate (cycle)");
            VertexId next = 0;
            int count = 0;
            for (const auto& [u, qs] : st.nexthops_of(cur)) {
                if (qs.test(q.id)) {
                    next = u;
                    ++count;
                }
            }
            if (count != 1)
                throw InternalError("broken nexthop chain at vertex " + std::to_string(cur) +
                                    " for query " + std::to_string(q.id) + " (" +
                                    std::to_string(count) + " nexthops)");
            path.push_back(next);
            cur = next;
        }
        paths.push_back(std::move(path));
    }
    return paths;
}

}  // namespace sharedp
