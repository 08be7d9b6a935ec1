#include <doctest.h>

#include <random>

#include "sharedp/oracle.hpp"
#include "sharedp/result_state.hpp"
#include "sharedp/split_graph.hpp"
#include "support/state_builder.hpp"
#include "support/test_graphs.hpp"

using namespace sharedp;

namespace {

using Entry = std::pair<SplitVertexId, std::vector<std::uint32_t>>;

std::vector<Entry> flatten(const NeighborAnswer& ans) {
    std::vector<Entry> out;
    for (const auto& [u, qs] : ans.entries) out.emplace_back(u, qs.members());
    return out;
}

QuerySet qs_of(std::uint32_t width, std::initializer_list<std::uint32_t> ids) {
    QuerySet s(width);
    for (auto i : ids) s.set(i);
    return s;
}

// diamond with q0's first path 0->1->3 recorded; batch has two queries (0,3).
struct DiamondMid {
    Graph g = testing::diamond();
    Batch batch = make_batch({{0, 3}, {0, 3}}, 2, g);
    ResultState st = init_state(batch, g);

    DiamondMid() {
        std::vector<SplitVertexId> p{0, 1, 3};
        apply_augmenting_path(p, qs_of(2, {0}), st, batch);
    }
};

}  // namespace

TEST_CASE("init_state seeds isS and isT only") {
    Graph g = testing::diamond();
    Batch batch = make_batch({{0, 3}}, 2, g);
    ResultState st = init_state(batch, g);
    CHECK(st.is_s(0).members() == std::vector<std::uint32_t>{0});
    CHECK(st.is_t(3).members() == std::vector<std::uint32_t>{0});
    for (VertexId v = 0; v < 4; ++v) {
        CHECK(st.is_pinner(v).none());
        CHECK(st.nexthops_of(v).empty());
        CHECK(st.prehops_of(v).empty());
    }

    Batch shared_s = make_batch({{0, 3}, {0, 2}}, 2, g);
    ResultState st2 = init_state(shared_s, g);
    CHECK(st2.is_s(0).members() == std::vector<std::uint32_t>{0, 1});

    Batch empty;
    empty.k = 1;
    ResultState st3 = init_state(empty, g);
    CHECK(st3.is_s(0).none());
}

TEST_CASE("get_out_neighbors on the empty state equals the plain graph") {
    Graph g = testing::diamond();
    Batch batch = make_batch({{0, 3}, {0, 3}}, 2, g);
    ResultState st = init_state(batch, g);
    auto ans = get_out_neighbors(0, QuerySet::full(2), g, st);
    CHECK(flatten(ans) == std::vector<Entry>{{1, {0, 1}}, {2, {0, 1}}});
}

TEST_CASE("get_out_neighbors reflects q0's recorded path") {
    DiamondMid m;
    auto ans = get_out_neighbors(0, QuerySet::full(2), m.g, m.st);
    // edge 0->1 is used by q0 and 1 is P-inner for q0 only; the in-copy entry
    // for 1 is empty and omitted.
    CHECK(flatten(ans) == std::vector<Entry>{{1, {1}}, {2, {0, 1}}});
}

TEST_CASE("get_out_neighbors from an in-copy walks reversed path edges") {
    DiamondMid m;
    auto ans = get_out_neighbors(in_copy(1, 4), qs_of(2, {0}), m.g, m.st);
    CHECK(flatten(ans) == std::vector<Entry>{{0, {0}}});
    // for q1 vertex 1 is not split: no answer at its in-copy
    auto none = get_out_neighbors(in_copy(1, 4), qs_of(2, {1}), m.g, m.st);
    CHECK(none.entries.empty());
}

TEST_CASE("get_in_neighbors mirrors the out derivation") {
    Graph g = testing::diamond();
    Batch batch = make_batch({{0, 3}}, 2, g);
    ResultState st = init_state(batch, g);
    auto empty_state = get_in_neighbors(3, qs_of(1, {0}), g, st);
    CHECK(flatten(empty_state) == std::vector<Entry>{{1, {0}}, {2, {0}}});

    DiamondMid m;
    auto ans = get_in_neighbors(3, qs_of(2, {0}), m.g, m.st);
    CHECK(flatten(ans) == std::vector<Entry>{{2, {0}}});  // 1->3 is saturated for q0

    auto out_copy = get_in_neighbors(1, qs_of(2, {0}), m.g, m.st);
    CHECK(flatten(out_copy) == std::vector<Entry>{{3, {0}}});  // reversed 1->3
}

TEST_CASE("apply on a disjoint path is plain insertion") {
    Graph g = testing::diamond();
    Batch batch = make_batch({{0, 3}}, 2, g);
    ResultState st = init_state(batch, g);
    std::vector<SplitVertexId> p{0, 1, 3};
    apply_augmenting_path(p, qs_of(1, {0}), st, batch);
    CHECK(st.nexthop_set(0, 1)->members() == std::vector<std::uint32_t>{0});
    CHECK(st.nexthop_set(1, 3)->members() == std::vector<std::uint32_t>{0});
    CHECK(st.nexthop_set(0, 2) == nullptr);
    CHECK(st.is_pinner(1).members() == std::vector<std::uint32_t>{0});
    CHECK(st.is_pinner(3).none());
    CHECK(st.prehop_set(1, 0)->members() == std::vector<std::uint32_t>{0});
}

TEST_CASE("apply cancels the crossed edge on the crossing graph") {
    Graph g = testing::crossing();
    Batch batch = make_batch({{0, 5}}, 2, g);
    ResultState st = init_state(batch, g);
    QuerySet q0 = qs_of(1, {0});
    std::vector<SplitVertexId> first{0, 1, 2, 5};
    apply_augmenting_path(first, q0, st, batch);

    std::vector<SplitVertexId> aug{0, 3, in_copy(2, 6), 1, 4, 5};
    apply_augmenting_path(aug, q0, st, batch);

    CHECK(st.nexthop_set(1, 2) == nullptr);  // cancelled
    CHECK(st.prehop_set(2, 1) == nullptr);
    for (auto [u, v] : std::vector<std::pair<VertexId, VertexId>>{
             {0, 1}, {1, 4}, {4, 5}, {0, 3}, {3, 2}, {2, 5}})
        CHECK(st.nexthop_set(u, v)->test(0));

    auto paths = extract_paths(batch.queries[0], 2, st);
    CHECK(paths == std::vector<std::vector<VertexId>>{{0, 1, 4, 5}, {0, 3, 2, 5}});
}

TEST_CASE("apply rejects a path that is not an edge sequence for the whole set") {
    Graph g = testing::crossing();
    Batch batch = make_batch({{0, 5}, {0, 5}}, 2, g);
    ResultState st = init_state(batch, g);
    apply_augmenting_path(std::vector<SplitVertexId>{0, 1, 2, 5}, qs_of(2, {0}), st, batch);

    // For q1 the step 2_in -> 1 is not a split-graph edge (q1 has no path yet).
    std::vector<SplitVertexId> aug{0, 3, in_copy(2, 6), 1, 4, 5};
    CHECK_THROWS_AS(apply_augmenting_path(aug, qs_of(2, {0, 1}), st, batch), InternalError);
    // endpoints must match too
    Batch other = make_batch({{0, 5}, {1, 5}}, 2, g);
    ResultState st2 = init_state(other, g);
    CHECK_THROWS_AS(
        apply_augmenting_path(std::vector<SplitVertexId>{0, 1, 2, 5}, qs_of(2, {1}), st2, other),
        InternalError);
}

TEST_CASE("extract_paths orders by first hop and follows unique chains") {
    Graph g = testing::diamond();
    Batch batch = make_batch({{0, 3}}, 2, g);
    ResultState st = init_state(batch, g);
    QuerySet q0 = qs_of(1, {0});
    apply_augmenting_path(std::vector<SplitVertexId>{0, 2, 3}, q0, st, batch);
    auto one = extract_paths(batch.queries[0], 2, st);
    CHECK(one == std::vector<std::vector<VertexId>>{{0, 2, 3}});

    apply_augmenting_path(std::vector<SplitVertexId>{0, 1, 3}, q0, st, batch);
    auto both = extract_paths(batch.queries[0], 2, st);
    CHECK(both == std::vector<std::vector<VertexId>>{{0, 1, 3}, {0, 2, 3}});
}

TEST_CASE("extract_paths flags broken chains") {
    Graph g = testing::diamond();
    Batch batch = make_batch({{0, 3}}, 2, g);
    ResultState st = init_state(batch, g);
    apply_augmenting_path(std::vector<SplitVertexId>{0, 1, 3}, qs_of(1, {0}), st, batch);
    st.debug_nexthops(1).clear();  // sever the chain at 1
    CHECK_THROWS_AS(extract_paths(batch.queries[0], 2, st), InternalError);
}

TEST_CASE("mirror consistency and degree invariant hold on random mid-run states") {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 30; ++round) {
        Graph g = testing::erdos_renyi(5 + rng() % 25, 0.2, rng);
        if (g.vertex_count() < 2) continue;
        Batch batch = testing::random_batch(g, 1 + rng() % 6, 1 + rng() % 4, rng);
        ResultState st = testing::random_mid_state(g, batch, rng);

        // mirror: q in nexthops[u][v] <=> q in prehops[v][u]
        for (VertexId u = 0; u < g.vertex_count(); ++u) {
            for (const auto& [v, qs] : st.nexthops_of(u)) {
                const QuerySet* mirror = st.prehop_set(v, u);
                REQUIRE(mirror != nullptr);
                CHECK(*mirror == qs);
            }
            for (const auto& [p, qs] : st.prehops_of(u)) {
                const QuerySet* mirror = st.nexthop_set(p, u);
                REQUIRE(mirror != nullptr);
                CHECK(*mirror == qs);
            }
        }

        // isPinner definition and endpoint exclusion
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            QuerySet has_next(batch.width());
            for (const auto& [u, qs] : st.nexthops_of(v)) has_next |= qs;
            has_next.andnot(st.is_s(v));
            has_next.andnot(st.is_t(v));
            CHECK(st.is_pinner(v) == has_next);
            CHECK(!st.is_pinner(v).intersects(st.is_s(v) | st.is_t(v)));
        }

        // per query the edge set decomposes into vertex-disjoint paths
        for (const Query& q : batch.queries) {
            auto paths = extract_paths(q, batch.k, st);
            auto rep = verify_disjoint(g, q.s, q.t, paths);
            CHECK(rep.ok);
        }
    }
}

TEST_CASE("neighbor answers partition: targets strictly ascending, no empty entries") {
    std::mt19937_64 rng(77);
    for (int round = 0; round < 20; ++round) {
        Graph g = testing::erdos_renyi(4 + rng() % 20, 0.3, rng);
        if (g.vertex_count() < 2) continue;
        Batch batch = testing::random_batch(g, 1 + rng() % 5, 1 + rng() % 3, rng);
        ResultState st = testing::random_mid_state(g, batch, rng);
        for (SplitVertexId v = 0; v < 2 * g.vertex_count(); ++v) {
            for (auto ans : {get_out_neighbors(v, batch.full_set(), g, st),
                             get_in_neighbors(v, batch.full_set(), g, st)}) {
                for (std::size_t i = 0; i < ans.entries.size(); ++i) {
                    CHECK(ans.entries[i].second.any());
                    if (i) CHECK(ans.entries[i - 1].first < ans.entries[i].first);
                }
            }
        }
    }
}
